#include "operp/algebra.hpp"

namespace operp {

AlgebraElement AlgebraElement::word(const AltWord& w, const Rational& c) {
  AlgebraElement e;
  if (c != 0) e.terms_.emplace(w, c);
  return e;
}

AlgebraElement AlgebraElement::one_minus_p() {
  AlgebraElement e = unit();
  e.add_term(AltWord::single(Letter::P), -1);
  return e;
}

AlgebraElement AlgebraElement::one_minus_q() {
  AlgebraElement e = unit();
  e.add_term(AltWord::single(Letter::Q), -1);
  return e;
}

Rational AlgebraElement::coeff(const AltWord& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

void AlgebraElement::add_term(const AltWord& w, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& other) {
  for (const auto& [w, c] : other.terms_) add_term(w, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& other) {
  for (const auto& [w, c] : other.terms_) add_term(w, -c);
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, coeff] : terms_) coeff *= c;
  return *this;
}

AlgebraElement operator-(const AlgebraElement& a) {
  AlgebraElement out = a;
  out *= Rational(-1);
  return out;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  AlgebraElement out;
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) out.add_term(wa * wb, ca * cb);
  return out;
}

AlgebraElement AlgebraElement::adjoint() const {
  AlgebraElement out;
  for (const auto& [w, c] : terms_) out.add_term(w.reversed(), c);
  return out;
}

std::string AlgebraElement::str() const {
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
    if (a != 1 || w.is_unit()) {
      s += to_string(a);
      if (!w.is_unit()) s += "*";
    }
    if (!w.is_unit()) s += w.str();
    first = false;
  }
  return s;
}

Rational char_eval(Character c, const AlgebraElement& x) {
  Rational v = 0;
  for (const auto& [w, coeff] : x.terms())
    if (char_value(c, w) == 1) v += coeff;
  return v;
}

}  // namespace operp
