#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "operp/algebra.hpp"
#include "operp/errors.hpp"

namespace operp {

// Elementary tensor of alternating words, one per leg. Lexicographic order
// over the graded word order.
using TensorWord = std::vector<AltWord>;

std::string tensor_word_str(const TensorWord& w);  // "P|QP|1"

// Exact element of a fixed tensor power of the two-projection algebra.
// Zero-leg elements are scalars (the empty tensor word carries the value).
class TensorElement {
public:
  TensorElement() = default;  // zero on zero legs
  explicit TensorElement(int legs) : legs_(legs) {}

  static TensorElement zero(int legs) { return TensorElement(legs); }
  static TensorElement unit(int legs);
  static TensorElement word(const TensorWord& w, const Rational& c = 1);
  static TensorElement from_algebra(const AlgebraElement& x);  // one leg

  int legs() const { return legs_; }
  const std::map<TensorWord, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  Rational coeff(const TensorWord& w) const;

  TensorElement& operator+=(const TensorElement& other);
  TensorElement& operator-=(const TensorElement& other);
  TensorElement& operator*=(const Rational& c);

  friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
  friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
  friend TensorElement operator-(const TensorElement& a);
  friend TensorElement operator*(TensorElement a, const Rational& c) { return a *= c; }
  friend TensorElement operator*(const Rational& c, TensorElement a) { return a *= c; }

  // Legwise product inside the fixed tensor power.
  friend TensorElement operator*(const TensorElement& a, const TensorElement& b);

  TensorElement adjoint() const;

  bool operator==(const TensorElement&) const = default;

  std::string str() const;

  void add_term(const TensorWord& w, const Rational& c);

private:
  int legs_ = 0;
  std::map<TensorWord, Rational> terms_;
};

// Product with a term cap on the result; throws budget_error when exceeded.
TensorElement mul_budgeted(const TensorElement& a, const TensorElement& b,
                           std::size_t term_budget);

// x (x) y: legs concatenate, coefficients multiply.
TensorElement tensor_concat(const TensorElement& a, const TensorElement& b);

// Full character evaluation; the tuple must cover every leg.
Rational char_eval(const CharacterTuple& chars, const TensorElement& x);

// Partial character evaluation: legs with an assigned character are
// evaluated, the remaining legs survive in order.
TensorElement char_eval_partial(const TensorElement& x,
                                const std::vector<std::optional<Character>>& mask);

// Convenience form for a contiguous leg range [first_leg, first_leg + n).
TensorElement char_eval_partial(const TensorElement& x, std::size_t first_leg,
                                const CharacterTuple& chars);

}  // namespace operp
