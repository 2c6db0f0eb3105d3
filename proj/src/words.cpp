#include "operp/words.hpp"

namespace operp {

std::string AltWord::str() const {
  if (is_unit()) return "1";
  std::string s;
  s.reserve(len_);
  for (std::uint32_t i = 0; i < len_; ++i) s.push_back(letter_char(at(i)));
  return s;
}

std::optional<AltWord> AltWord::parse(std::string_view s) {
  if (s == "1") return AltWord::unit();
  if (s.empty()) return std::nullopt;
  Letter first;
  switch (s[0]) {
    case 'P': first = Letter::P; break;
    case 'Q': first = Letter::Q; break;
    default: return std::nullopt;
  }
  for (std::size_t i = 0; i < s.size(); ++i) {
    char expect = letter_char(i % 2 == 0 ? first : other(first));
    if (s[i] != expect) return std::nullopt;  // not strictly alternating
  }
  return AltWord::alternating(first, static_cast<std::uint32_t>(s.size()));
}

std::string character_name(Character c) {
  switch (c) {
    case Character::chi00: return "chi00";
    case Character::chi01: return "chi01";
    case Character::chi10: return "chi10";
    case Character::chi11: return "chi11";
  }
  return "?";
}

int char_value(Character c, const AltWord& w) {
  if (w.is_unit()) return 1;
  if (char_p(c) == 0 && w.count(Letter::P) > 0) return 0;
  if (char_q(c) == 0 && w.count(Letter::Q) > 0) return 0;
  return 1;
}

}  // namespace operp
