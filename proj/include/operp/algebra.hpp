#pragma once

#include <map>
#include <string>

#include "operp/rational.hpp"
#include "operp/words.hpp"

namespace operp {

// Exact element of the dense *-subalgebra generated by two universal
// projections: a rational linear combination of alternating words. The term
// map is kept free of zero coefficients and ordered, so equality of normal
// forms is plain equality.
class AlgebraElement {
public:
  AlgebraElement() = default;  // zero

  static AlgebraElement zero() { return {}; }
  static AlgebraElement unit() { return word(AltWord::unit()); }
  static AlgebraElement scalar(const Rational& c) { return word(AltWord::unit(), c); }
  static AlgebraElement word(const AltWord& w, const Rational& c = 1);
  static AlgebraElement p() { return word(AltWord::single(Letter::P)); }
  static AlgebraElement q() { return word(AltWord::single(Letter::Q)); }
  static AlgebraElement one_minus_p();
  static AlgebraElement one_minus_q();

  const std::map<AltWord, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  Rational coeff(const AltWord& w) const;

  AlgebraElement& operator+=(const AlgebraElement& other);
  AlgebraElement& operator-=(const AlgebraElement& other);
  AlgebraElement& operator*=(const Rational& c);

  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator-(const AlgebraElement& a);
  friend AlgebraElement operator*(AlgebraElement a, const Rational& c) { return a *= c; }
  friend AlgebraElement operator*(const Rational& c, AlgebraElement a) { return a *= c; }
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);

  AlgebraElement adjoint() const;

  bool operator==(const AlgebraElement&) const = default;

  std::string str() const;  // "1 - P", "Q - PQ", ...

  void add_term(const AltWord& w, const Rational& c);

private:
  std::map<AltWord, Rational> terms_;
};

// Character value on an element: linear extension of char_value.
Rational char_eval(Character c, const AlgebraElement& x);

}  // namespace operp
