#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace operp {

// The two projection generators.
enum class Letter : std::uint8_t { P = 0, Q = 1 };

constexpr Letter other(Letter l) { return l == Letter::P ? Letter::Q : Letter::P; }
constexpr char letter_char(Letter l) { return l == Letter::P ? 'P' : 'Q'; }

// Strictly alternating word over {P, Q}; the empty word is the unit. An
// alternating word is determined by its first letter and its length, so the
// whole type fits in eight bytes and the reduced product is O(1).
class AltWord {
public:
  AltWord() = default;  // unit
  static AltWord unit() { return {}; }
  static AltWord single(Letter l) { return AltWord(l, 1); }
  static AltWord alternating(Letter first, std::uint32_t len) {
    return len == 0 ? AltWord() : AltWord(first, len);
  }

  std::uint32_t size() const { return len_; }
  bool is_unit() const { return len_ == 0; }

  // All three require a nonempty word.
  Letter first() const { return first_; }
  Letter last() const { return at(len_ - 1); }
  Letter at(std::uint32_t i) const { return i % 2 == 0 ? first_ : other(first_); }

  // Number of occurrences of the given letter.
  std::uint32_t count(Letter l) const {
    if (len_ == 0) return 0;
    return l == first_ ? (len_ + 1) / 2 : len_ / 2;
  }

  // Basis words are products of self-adjoint letters, so the adjoint
  // reverses the letter order.
  AltWord reversed() const { return is_unit() ? *this : AltWord(last(), len_); }

  // Reduced concatenation: if the inner letters coincide they merge
  // (idempotency of the generators); the result is alternating again.
  friend AltWord operator*(AltWord a, AltWord b) {
    if (a.is_unit()) return b;
    if (b.is_unit()) return a;
    std::uint32_t len = a.size() + b.size() - (a.last() == b.first() ? 1 : 0);
    return AltWord(a.first(), len);
  }

  std::string str() const;                                // "1", "P", "PQP", ...
  static std::optional<AltWord> parse(std::string_view s);

  // Graded order: by length, then by first letter (P before Q).
  auto operator<=>(const AltWord&) const = default;

private:
  AltWord(Letter first, std::uint32_t len) : len_(len), first_(first) {}

  std::uint32_t len_ = 0;
  Letter first_ = Letter::P;
};

// The four one-dimensional representations of the two-projection algebra:
// chi_ab sends p to a and q to b, with a, b in {0, 1}.
enum class Character : std::uint8_t { chi00, chi01, chi10, chi11 };

constexpr int char_p(Character c) { return (c == Character::chi10 || c == Character::chi11) ? 1 : 0; }
constexpr int char_q(Character c) { return (c == Character::chi01 || c == Character::chi11) ? 1 : 0; }

std::string character_name(Character c);  // "chi11" etc.

// Multiplicative extension to basis words; always 0 or 1.
int char_value(Character c, const AltWord& w);

// One character per tensor leg.
using CharacterTuple = std::vector<Character>;

inline CharacterTuple all_chi11(std::size_t legs) {
  return CharacterTuple(legs, Character::chi11);
}

}  // namespace operp
