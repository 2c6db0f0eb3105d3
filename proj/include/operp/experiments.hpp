#pragma once

#include <string>
#include <vector>

#include "operp/magic.hpp"

namespace operp {

// All words of length <= degree over the entry variables, graded-lex,
// constant first. Adjoint letters are off by default: magic entries are
// self-adjoint, so adjoints add no new evaluations.
struct MonomialBasis {
  int N = 0;
  int degree = 0;
  bool adjoints = false;
  std::vector<StarWord> words;
};

MonomialBasis monomial_basis(int N, int degree, bool include_adjoints = false,
                             std::size_t cap = kDefaultBasisCap);

// Exact coordinates of every basis monomial evaluated at the matrix:
// column j holds poly_eval(basis[j], m) written in the canonical tensor-word
// coordinate basis shared by all columns.
struct EvaluationMatrix {
  std::vector<TensorWord> row_words;  // canonical (sorted) coordinate order
  std::size_t cols = 0;
  // Sparse columns: (row index, coefficient), rows ascending.
  std::vector<std::vector<std::pair<std::size_t, Rational>>> columns;

  std::size_t rows() const { return row_words.size(); }
};

EvaluationMatrix evaluation_matrix(const MagicMatrix& m, const MonomialBasis& basis,
                                   std::size_t term_budget = kDefaultTermBudget,
                                   Exec exec = Exec::parallel);

// Exact nullspace basis via fraction-free (Bareiss) elimination over the
// integers after clearing row denominators; back-substitution is rational.
// Basis vectors are primitive integer vectors with positive leading entry,
// ordered by their free column.
struct NullspaceResult {
  std::size_t rank = 0;
  std::vector<std::vector<Rational>> basis;
};

NullspaceResult nullspace(const EvaluationMatrix& m);

// Apply the matrix to a coefficient vector: coordinates of sum_j c_j basis_j.
std::vector<Rational> apply_columns(const EvaluationMatrix& m,
                                    const std::vector<Rational>& coeffs);

// A polynomial that vanishes at level n but not at level n+1, together with
// a witnessing nonzero tensor word of its level-(n+1) value.
struct KernelCertificate {
  int N = 0;
  std::string track;
  int n = 0;
  int degree = 0;
  StarPolynomial polynomial;
  TensorWord witness;
  Rational witness_coeff;
};

struct KernelSearchResult {
  int N = 0;
  std::string track;
  int n = 0;
  int degree = 0;
  std::size_t basis_size = 0;
  std::size_t rank_n = 0;          // rank of the level-n evaluation matrix
  std::size_t nullity_n = 0;
  std::size_t nullity_next = 0;    // kernel dimension one level up
  std::size_t certificate_count = 0;  // all kernel vectors with nonzero image
  bool truncated = false;             // certificate list capped
  std::vector<KernelCertificate> certificates;
};

// Exact kernel of the level-n evaluation matrix, each kernel vector
// evaluated one level up through the level-(n+1) evaluation matrix.
// An empty certificate list is a reported outcome, not a failure.
KernelSearchResult kernel_search(const MagicMatrix& level_n, const MagicMatrix& level_next,
                                 int N, const std::string& track, int n, int degree,
                                 std::size_t basis_cap = kDefaultBasisCap,
                                 std::size_t term_budget = kDefaultTermBudget,
                                 std::size_t certificate_cap = kDefaultCertificateCap,
                                 Exec exec = Exec::parallel);

// Rebuild the polynomial of a kernel vector over the basis.
StarPolynomial polynomial_from_vector(const MonomialBasis& basis,
                                      const std::vector<Rational>& coeffs);

}  // namespace operp
