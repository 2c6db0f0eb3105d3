#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "operp/magic.hpp"

namespace operp {

enum class PointColor : std::uint8_t { white, black };

// Which entry power a colour selects. For self-adjoint (magic) entries the
// two conventions agree; the flag exists so the difference is testable.
enum class ColorConvention : std::uint8_t {
  white_plain_black_adjoint,
  white_adjoint_black_plain,
};

// k upper and l lower coloured points with a set partition of all k+l
// points. Upper points are numbered 1..k left to right, lower points
// k+1..k+l. Blocks are kept sorted, each block ascending.
struct TwoColouredPartition {
  std::vector<PointColor> upper_colors;
  std::vector<PointColor> lower_colors;
  std::vector<std::vector<int>> blocks;  // 1-based point ids
  std::string name;

  int upper() const { return static_cast<int>(upper_colors.size()); }
  int lower() const { return static_cast<int>(lower_colors.size()); }
  int points() const { return upper() + lower(); }

  // Throws contract_error on overlapping or incomplete blocks.
  void validate() const;
  void canonicalize();

  std::string str() const;  // canonical text form of the grammar below

  bool operator==(const TwoColouredPartition&) const = default;
};

// Grammar: `upper ; lower ; blocks` with upper/lower space-separated colour
// letters (w|b, possibly empty) and parenthesised integer groups, e.g.
// `w w ; w w ; (1 3)(2 4)` or `; w ; (1)`. Throws parse_error with a
// character position on syntax errors.
TwoColouredPartition parse_partition(std::string_view text);

// 1 iff the combined labeling (upper u, lower v) is constant on every block.
int delta(const TwoColouredPartition& p, const std::vector<int>& upper_labels,
          const std::vector<int>& lower_labels);

// The exact relation residual for one pair (gamma, gamma'):
//   sum_t delta_p(t, gamma') u^{w_1}_{t_1 gamma_1} ... u^{w_k}_{t_k gamma_k}
// - sum_t' delta_p(gamma, t') u^{w'_1}_{gamma'_1 t'_1} ... u^{w'_l}_{gamma'_l t'_l}
// with labels 1-based over [N]. Implemented exactly as printed above.
TensorElement relation_residual(const TwoColouredPartition& p, const MagicMatrix& m,
                                const std::vector<int>& gamma,
                                const std::vector<int>& gamma_prime,
                                ColorConvention cc = ColorConvention::white_plain_black_adjoint,
                                std::size_t term_budget = kDefaultTermBudget);

// All residuals in lexicographic (gamma, gamma') order.
std::vector<TensorElement> relation_residuals(
    const TwoColouredPartition& p, const MagicMatrix& m,
    ColorConvention cc = ColorConvention::white_plain_black_adjoint,
    std::size_t term_budget = kDefaultTermBudget, Exec exec = Exec::parallel);

struct ResidualViolation {
  std::vector<int> gamma;
  std::vector<int> gamma_prime;
  TensorElement residual;
};

struct RelationReport {
  std::string partition;
  int N = 0;
  bool holds = false;
  std::optional<ResidualViolation> first_violation;
};

RelationReport check_relations(const TwoColouredPartition& p, const MagicMatrix& m,
                               ColorConvention cc = ColorConvention::white_plain_black_adjoint,
                               std::size_t term_budget = kDefaultTermBudget,
                               Exec exec = Exec::parallel);

// Named list of partitions with the target size.
struct RelationSet {
  std::string name;
  int N = 0;
  std::vector<TwoColouredPartition> partitions;
};

// The two lower and two upper unitarity pairs, the white singleton and the
// white four-block: the defining relations of the quantum permutation
// matrices of size N.
RelationSet preset_SNplus(int N);

struct PropagationReport {
  bool applicable = false;  // both inputs satisfy the relation
  bool holds = false;       // the operp product satisfies it as well
  std::string detail;
};

// Executable content of relation propagation: if the relation of p holds on
// both factors, check it on their operp product.
PropagationReport propagation_check(const TwoColouredPartition& p, const MagicMatrix& a,
                                    const MagicMatrix& b,
                                    ColorConvention cc = ColorConvention::white_plain_black_adjoint,
                                    std::size_t term_budget = kDefaultTermBudget,
                                    Exec exec = Exec::parallel);

}  // namespace operp
