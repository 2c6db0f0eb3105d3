#pragma once

#include <Eigen/Dense>
#include <vector>

#include "operp/magic.hpp"

namespace operp {

// One angle per leg, clamped to [0, pi/2]. Endpoints select reducible
// points where the leg representation splits into two characters.
struct RepPoint {
  std::vector<double> theta;

  RepPoint() = default;
  explicit RepPoint(std::vector<double> t);

  int legs() const { return static_cast<int>(theta.size()); }
  bool operator==(const RepPoint&) const = default;
};

double half_pi();

// Leg representation: p is the coordinate projection, q(theta) the
// projection onto (cos theta, sin theta).
Eigen::Matrix2d leg_p();
Eigen::Matrix2d leg_q(double theta);
Eigen::Matrix2d rep_word(const AltWord& w, double theta);

// Image of a tensor element under the product representation at r;
// dimension 2^legs. Real entries throughout (leg matrices are real
// symmetric, coefficients rational).
Eigen::MatrixXd rep_eval(const TensorElement& x, const RepPoint& r,
                         int leg_cap = kDefaultRepLegCap);

// Largest singular value. Symmetric inputs take the symmetric eigenvalue
// path; everything here is dense (small dimensions).
double spectral_norm(const Eigen::MatrixXd& op);

// Matrix-free largest singular value of the representation image, power
// iteration on x*x. Used above the dense dimension limit.
double spectral_norm_power(const TensorElement& x, const RepPoint& r,
                           double tol = 1e-10, int max_iters = 20000);

// Deterministic objective maximised by the estimator. Legs at an endpoint
// are split into their two character summands, so the value at a point
// with trailing zero legs reproduces the value of the reduced element
// bit for bit.
double eval_norm_at(const TensorElement& x, const RepPoint& r,
                    int leg_cap = kDefaultRepLegCap);

struct NormEstimate {
  double value = 0.0;              // certified lower bound, achieved by argmax
  RepPoint argmax;
  int grid = 0;                    // points per leg actually used
  std::size_t evaluations = 0;
  double final_step = 0.0;
};

struct NormParams {
  int grid = 0;                    // 0: default by leg count (33 up to 4 legs, 9 up to 6)
  std::size_t refine_budget = 2000;
  double step_tol = 1e-8;
  int leg_cap = kDefaultRepLegCap;
  Exec exec = Exec::parallel;
};

int default_grid(int legs);

// Coarse product-grid scan (endpoints always included) followed by
// coordinate search with halving steps. The value is the maximum of all
// evaluations; ties on the argmax break to the lexicographically smallest
// point. Extra seed points join the scan, which is what makes nested
// estimates exactly monotone.
NormEstimate norm_estimate(const TensorElement& x, const NormParams& params = {},
                           const std::vector<RepPoint>& seeds = {});

// Estimates of ||P(M_n)|| for n = 1..n_max over towers of m1, nested:
// level n+1 always evaluates the argmax of level n extended by zero legs,
// so the sequence is nondecreasing, exactly.
std::vector<NormEstimate> seminorm_sequence(const StarPolynomial& p,
                                            const MagicMatrix& m1, int n_max,
                                            const NormParams& params = {},
                                            std::size_t term_budget = kDefaultTermBudget);

// Exact identity P(M_{2n}) == P(M_n operp M_n); the two sides associate
// the tensor legs differently, so this is a real check, not a tautology.
bool coassoc_check(const StarPolynomial& p, const MagicMatrix& m1, int n,
                   std::size_t term_budget = kDefaultTermBudget,
                   Exec exec = Exec::parallel);

// Reports the estimates for P at level n and at the doubled level; with
// the nesting seed the doubled estimate dominates, which is the finite
// face of the comultiplication inequality.
struct ComultProbe {
  NormEstimate level_n;        // e(P, M_n)
  NormEstimate level_doubled;  // e(P, M_n operp M_n) = e(P, M_2n)
  bool doubled_dominates = false;
};

ComultProbe comult_inequality_probe(const StarPolynomial& p, const MagicMatrix& m1,
                                    int n, const NormParams& params = {},
                                    std::size_t term_budget = kDefaultTermBudget);

}  // namespace operp
