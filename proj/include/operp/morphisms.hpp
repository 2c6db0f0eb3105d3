#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "operp/magic.hpp"

namespace operp {

// Permutations are 0-based one-line images: sigma[i] = sigma(i).
using Permutation = std::vector<int>;

Permutation identity_perm(int n);
Permutation inverse(const Permutation& sigma);
Permutation compose(const Permutation& f, const Permutation& g);  // f after g
bool is_permutation(const Permutation& sigma);

// All permutations of {0,...,n-1} in lexicographic order.
std::vector<Permutation> all_permutations(int n);
std::size_t lex_rank(const Permutation& sigma);
std::string perm_str(const Permutation& sigma);  // 1-based one-line, "[2,1,3,4]"

// Factorisation of sigma^{-1} into transpositions (alpha < beta), as short
// as possible: each cycle (c1 c2 ... cm) contributes
// (c1 c2)(c2 c3)...(c_{m-1} c_m), composed right to left, so the total
// length is n minus the number of cycles (fixed points included).
struct TranspositionDecomposition {
  Permutation target;                           // sigma itself
  std::vector<std::pair<int, int>> factors;     // 0-based pairs, product = sigma^{-1}
};

TranspositionDecomposition decompose_inverse(const Permutation& sigma);

// The character collapsing the starting block to the identity matrix:
// chi11 on every leg. Validated by evaluating the block; a block that does
// not collapse (such as the bare 4x4 generator R) raises contract_error.
CharacterTuple nu_character(const OperpChain& m1);
CharacterTuple nu_character(const MagicMatrix& m1);

// Per-leg character tuple sending the chain block to the permutation matrix
// of sigma^{-1}: chi01 on the factor for pair (alpha_i, beta_i) in round i,
// chi11 elsewhere.
CharacterTuple mu_sigma(const Permutation& sigma, const OperpChain& m1);

// Entrywise character evaluation of an expanded matrix.
RationalMatrix char_apply(const MagicMatrix& m, const CharacterTuple& per_leg);

// Permutation matrix under the convention sigma_ij = delta_{i, sigma(j)}.
RationalMatrix permutation_matrix(const Permutation& sigma);

// Quotient to one level lower: chi11 on the last block of legs.
TensorElement pi_map(const TensorElement& x, int block_legs);
MagicMatrix pi_map(const MagicMatrix& m, int block_legs);
OperpChain pi_map(const OperpChain& tower_chain);

struct SeparationResult {
  int N = 0;
  int L = 0;
  bool is_identity = false;
  std::string first_violation;  // empty when is_identity
  RationalMatrix table;         // N! x N!, rows tau, columns sigma, lex order
};

// table(tau, sigma) = mu_tau applied to the row-order entry product
// m_{1 sigma(1)} ... m_{N sigma(N)} of the general-track starting block,
// computed through scalar matrices, never by expansion.
SeparationResult separation_matrix(int N, int L = -1, Exec exec = Exec::parallel);

// Evaluation of expanded elements at a permutation: mu_{sigma^{-1}}(x), so
// that entry variables land on delta_{i, sigma(j)}.
Rational eval_at_permutation(const TensorElement& x, const Permutation& sigma,
                             const OperpChain& m1);

// Same map for polynomials in the block entries, evaluated through scalar
// matrices (no expansion).
Rational eval_at_permutation(const StarPolynomial& p, const Permutation& sigma,
                             const OperpChain& m1);

// Function table over the full symmetric group, lex order.
struct PermutationTable {
  int N = 0;
  std::vector<Rational> values;  // aligned with all_permutations(N)

  const Rational& at(const Permutation& sigma) const { return values[lex_rank(sigma)]; }
  bool operator==(const PermutationTable&) const = default;
};

PermutationTable function_table(const StarPolynomial& p, const OperpChain& m1);
PermutationTable function_table(const TensorElement& x, const OperpChain& m1);

}  // namespace operp
