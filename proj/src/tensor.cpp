#include "operp/tensor.hpp"

namespace operp {

std::string tensor_word_str(const TensorWord& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) s += "|";
    s += w[i].str();
  }
  return s;
}

TensorElement TensorElement::unit(int legs) {
  return word(TensorWord(static_cast<std::size_t>(legs)), 1);
}

TensorElement TensorElement::word(const TensorWord& w, const Rational& c) {
  TensorElement e(static_cast<int>(w.size()));
  if (c != 0) e.terms_.emplace(w, c);
  return e;
}

TensorElement TensorElement::from_algebra(const AlgebraElement& x) {
  TensorElement e(1);
  for (const auto& [w, c] : x.terms()) e.terms_.emplace(TensorWord{w}, c);
  return e;
}

Rational TensorElement::coeff(const TensorWord& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

void TensorElement::add_term(const TensorWord& w, const Rational& c) {
  if (c == 0) return;
  if (static_cast<int>(w.size()) != legs_)
    throw contract_error("tensor word has " + std::to_string(w.size()) +
                         " legs, element has " + std::to_string(legs_));
  auto [it, inserted] = terms_.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

TensorElement& TensorElement::operator+=(const TensorElement& other) {
  if (legs_ != other.legs_)
    throw contract_error("leg count mismatch in tensor sum");
  for (const auto& [w, c] : other.terms_) add_term(w, c);
  return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& other) {
  if (legs_ != other.legs_)
    throw contract_error("leg count mismatch in tensor difference");
  for (const auto& [w, c] : other.terms_) add_term(w, -c);
  return *this;
}

TensorElement& TensorElement::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, coeff] : terms_) coeff *= c;
  return *this;
}

TensorElement operator-(const TensorElement& a) {
  TensorElement out = a;
  out *= Rational(-1);
  return out;
}

TensorElement operator*(const TensorElement& a, const TensorElement& b) {
  if (a.legs() != b.legs())
    throw contract_error("leg count mismatch in tensor product");
  TensorElement out(a.legs());
  const std::size_t k = static_cast<std::size_t>(a.legs());
  TensorWord w(k);
  for (const auto& [wa, ca] : a.terms()) {
    for (const auto& [wb, cb] : b.terms()) {
      for (std::size_t l = 0; l < k; ++l) w[l] = wa[l] * wb[l];
      out.add_term(w, ca * cb);
    }
  }
  return out;
}

TensorElement mul_budgeted(const TensorElement& a, const TensorElement& b,
                           std::size_t term_budget) {
  if (a.legs() != b.legs())
    throw contract_error("leg count mismatch in tensor product");
  TensorElement out(a.legs());
  const std::size_t k = static_cast<std::size_t>(a.legs());
  TensorWord w(k);
  for (const auto& [wa, ca] : a.terms()) {
    for (const auto& [wb, cb] : b.terms()) {
      for (std::size_t l = 0; l < k; ++l) w[l] = wa[l] * wb[l];
      out.add_term(w, ca * cb);
      if (out.term_count() > term_budget)
        throw budget_error("tensor product exceeds term budget of " +
                           std::to_string(term_budget));
    }
  }
  return out;
}

TensorElement TensorElement::adjoint() const {
  TensorElement out(legs_);
  TensorWord rev(static_cast<std::size_t>(legs_));
  for (const auto& [w, c] : terms_) {
    for (std::size_t l = 0; l < rev.size(); ++l) rev[l] = w[l].reversed();
    out.add_term(rev, c);
  }
  return out;
}

TensorElement tensor_concat(const TensorElement& a, const TensorElement& b) {
  TensorElement out(a.legs() + b.legs());
  TensorWord w(static_cast<std::size_t>(out.legs()));
  for (const auto& [wa, ca] : a.terms()) {
    std::copy(wa.begin(), wa.end(), w.begin());
    for (const auto& [wb, cb] : b.terms()) {
      std::copy(wb.begin(), wb.end(), w.begin() + a.legs());
      out.add_term(w, ca * cb);
    }
  }
  return out;
}

Rational char_eval(const CharacterTuple& chars, const TensorElement& x) {
  if (chars.size() != static_cast<std::size_t>(x.legs()))
    throw contract_error("character tuple does not cover every leg");
  Rational v = 0;
  for (const auto& [w, c] : x.terms()) {
    int f = 1;
    for (std::size_t l = 0; l < chars.size() && f; ++l) f = char_value(chars[l], w[l]);
    if (f) v += c;
  }
  return v;
}

TensorElement char_eval_partial(const TensorElement& x,
                                const std::vector<std::optional<Character>>& mask) {
  if (mask.size() != static_cast<std::size_t>(x.legs()))
    throw contract_error("character mask does not cover every leg");
  int out_legs = 0;
  for (const auto& m : mask)
    if (!m.has_value()) ++out_legs;
  TensorElement out(out_legs);
  TensorWord w(static_cast<std::size_t>(out_legs));
  for (const auto& [word, c] : x.terms()) {
    int f = 1;
    std::size_t pos = 0;
    for (std::size_t l = 0; l < mask.size() && f; ++l) {
      if (mask[l].has_value())
        f = char_value(*mask[l], word[l]);
      else
        w[pos++] = word[l];
    }
    if (f) out.add_term(w, c);
  }
  return out;
}

TensorElement char_eval_partial(const TensorElement& x, std::size_t first_leg,
                                const CharacterTuple& chars) {
  if (first_leg + chars.size() > static_cast<std::size_t>(x.legs()))
    throw contract_error("character range exceeds leg count");
  std::vector<std::optional<Character>> mask(static_cast<std::size_t>(x.legs()));
  for (std::size_t i = 0; i < chars.size(); ++i) mask[first_leg + i] = chars[i];
  return char_eval_partial(x, mask);
}

std::string TensorElement::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (first) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    Rational a = c < 0 ? Rational(-c) : c;
    if (a != 1) s += to_string(a) + "*";
    s += "(" + tensor_word_str(w) + ")";
    first = false;
  }
  return s;
}

}  // namespace operp
