#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "operp/parallel.hpp"
#include "operp/rational.hpp"
#include "operp/tensor.hpp"

namespace operp {

// N x N matrix over a fixed tensor power of the two-projection algebra.
// The magic-unitary contract (self-adjoint idempotent entries, unit row and
// column sums) is validated by check_magic, not enforced by the type, so
// broken matrices can be represented and reported on.
class MagicMatrix {
public:
  MagicMatrix() = default;
  MagicMatrix(int size, int legs)
      : size_(size), legs_(legs),
        entries_(static_cast<std::size_t>(size) * size, TensorElement(legs)) {}

  static MagicMatrix scalar_identity(int size, int legs);

  int size() const { return size_; }
  int legs() const { return legs_; }

  TensorElement& at(int i, int j) { return entries_[static_cast<std::size_t>(i) * size_ + j]; }
  const TensorElement& at(int i, int j) const {
    return entries_[static_cast<std::size_t>(i) * size_ + j];
  }

  MagicMatrix adjoint_entrywise() const;

  bool operator==(const MagicMatrix&) const = default;

private:
  int size_ = 0;
  int legs_ = 0;
  std::vector<TensorElement> entries_;
};

struct MagicReport {
  bool ok = true;
  std::string violation;  // first violated constraint, row-major scan order
};

MagicReport check_magic(const MagicMatrix& m, Exec exec = Exec::parallel);
inline bool is_magic(const MagicMatrix& m, Exec exec = Exec::parallel) {
  return check_magic(m, exec).ok;
}

// The matrix product interleaved with the tensor product:
// out(i,j) = sum_k a(i,k) (x) b(k,j). Preserves the magic contract.
MagicMatrix operp_product(const MagicMatrix& a, const MagicMatrix& b,
                  std::size_t term_budget = kDefaultTermBudget,
                  Exec exec = Exec::parallel);

// n-fold iterated product m1 operp m1 operp ... (left fold), n >= 1.
MagicMatrix tower(const MagicMatrix& m1, int n,
                  std::size_t term_budget = kDefaultTermBudget,
                  Exec exec = Exec::parallel);

// The 4x4 one-leg generators of the concrete track. Indices in
// build_R_abcd are 1-based; a,b,c,d must be pairwise distinct.
MagicMatrix build_R();
MagicMatrix build_Rhat();
MagicMatrix build_R_abcd(int N, int a, int b, int c, int d);

// Starting block of the "rr" track: R operp R.
MagicMatrix build_M1_rr();

// One factor of the general-track chain with its bookkeeping.
struct ChainFactor {
  int round = 0;  // 1-based
  int a = 0, b = 0;  // transposition pair, a < b, 1-based
  int c = 0, d = 0;  // q-block support
  MagicMatrix matrix;  // one leg
};

// Lazy left-to-right operp product of one-leg factors. Towers over the
// general-track starting block keep the factor list flat and remember the
// block length.
class OperpChain {
public:
  explicit OperpChain(int size, int legs_per_block = 0)
      : size_(size), legs_per_block_(legs_per_block) {}

  int size() const { return size_; }
  int legs() const { return static_cast<int>(factors_.size()); }
  int legs_per_block() const { return legs_per_block_; }
  int blocks() const { return legs_per_block_ ? legs() / legs_per_block_ : 1; }

  const std::vector<ChainFactor>& factors() const { return factors_; }
  void append(ChainFactor f) { factors_.push_back(std::move(f)); }

  // Factor list repeated n times: the n-th tower level.
  OperpChain repeated(int n) const;

  // Leg index of the factor for pair (a, b) in the given 1-based round of
  // the given 1-based block.
  int leg_of(int round, int a, int b, int block = 1) const;

  // Full expansion; throws budget_error when any entry exceeds the cap.
  MagicMatrix expand(std::size_t term_budget = kDefaultTermBudget,
                     Exec exec = Exec::parallel) const;

  // Entrywise character evaluation: factor f evaluated under chars[f],
  // composed as a product of scalar matrices.
  RationalMatrix char_apply(const CharacterTuple& chars) const;

private:
  int size_ = 0;
  int legs_per_block_ = 0;
  std::vector<ChainFactor> factors_;
};

// General-track starting block: L rounds of all pairs a < b in
// lexicographic order; the support (c, d) of each factor is the two
// smallest indices outside {a, b}. L defaults to N - 1.
OperpChain build_M1_general(int N, int L = -1);

// *-polynomial in matrix entry variables X_ij (1-based) and their formal
// adjoints. Terms are kept in graded-lexicographic order.
struct StarVariable {
  std::uint16_t i = 1, j = 1;
  bool star = false;
  auto operator<=>(const StarVariable&) const = default;
};

using StarWord = std::vector<StarVariable>;

struct GradedLexLess {
  bool operator()(const StarWord& a, const StarWord& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

class StarPolynomial {
public:
  StarPolynomial() = default;
  explicit StarPolynomial(int size) : size_(size) {}

  static StarPolynomial constant(int size, const Rational& c);
  static StarPolynomial variable(int size, int i, int j, bool star = false);

  int size() const { return size_; }
  const std::map<StarWord, Rational, GradedLexLess>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;

  void add_term(const StarWord& w, const Rational& c);

  StarPolynomial& operator+=(const StarPolynomial& other);
  StarPolynomial& operator-=(const StarPolynomial& other);
  StarPolynomial& operator*=(const Rational& c);
  friend StarPolynomial operator+(StarPolynomial a, const StarPolynomial& b) { return a += b; }
  friend StarPolynomial operator-(StarPolynomial a, const StarPolynomial& b) { return a -= b; }
  friend StarPolynomial operator*(const StarPolynomial& a, const StarPolynomial& b);
  friend StarPolynomial operator*(StarPolynomial a, const Rational& c) { return a *= c; }

  bool operator==(const StarPolynomial&) const = default;

  std::string str() const;

private:
  int size_ = 0;
  std::map<StarWord, Rational, GradedLexLess> terms_;
};

// sum_j X_{i j} - 1: vanishes at every magic matrix.
StarPolynomial row_sum_minus_one(int size, int i);

// Uniformly random polynomial with the given term and degree bounds; small
// nonzero rational coefficients. Deterministic for a fixed generator state.
StarPolynomial random_star_polynomial(std::mt19937_64& rng, int size, int max_degree,
                                      int max_terms, bool include_adjoints = false);

// Exact substitution of the matrix entries into P. Adjoint variables
// substitute entry adjoints.
TensorElement poly_eval(const StarPolynomial& p, const MagicMatrix& m,
                        std::size_t term_budget = kDefaultTermBudget);

// Substitution of X_ij by sum_k a(i,k) (x) b(k,j), i.e. evaluation at the
// operp product assembled from the two given matrices.
TensorElement poly_eval_operp(const StarPolynomial& p, const MagicMatrix& a,
                              const MagicMatrix& b,
                              std::size_t term_budget = kDefaultTermBudget,
                              Exec exec = Exec::parallel);

// Row-order product of entries m(0,sigma(0)) * m(1,sigma(1)) * ...;
// sigma is 0-based with size() == m.size().
TensorElement sigma_product(const MagicMatrix& m, const std::vector<int>& sigma,
                            std::size_t term_budget = kDefaultTermBudget);

}  // namespace operp
