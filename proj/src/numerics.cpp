#include "operp/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace operp {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

bool lex_less(const std::vector<double>& a, const std::vector<double>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

double half_pi() { return kHalfPi; }

RepPoint::RepPoint(std::vector<double> t) : theta(std::move(t)) {
  for (double& v : theta) v = std::clamp(v, 0.0, kHalfPi);
}

Eigen::Matrix2d leg_p() {
  Eigen::Matrix2d m;
  m << 1, 0, 0, 0;
  return m;
}

Eigen::Matrix2d leg_q(double theta) {
  const double c = std::cos(theta), s = std::sin(theta);
  Eigen::Matrix2d m;
  m << c * c, c * s, c * s, s * s;
  return m;
}

Eigen::Matrix2d rep_word(const AltWord& w, double theta) {
  Eigen::Matrix2d out = Eigen::Matrix2d::Identity();
  const Eigen::Matrix2d p = leg_p(), q = leg_q(theta);
  for (std::uint32_t i = 0; i < w.size(); ++i)
    out = out * (w.at(i) == Letter::P ? p : q);
  return out;
}

Eigen::MatrixXd rep_eval(const TensorElement& x, const RepPoint& r, int leg_cap) {
  const int k = x.legs();
  if (k > leg_cap)
    throw budget_error("representation dimension cap exceeded: " + std::to_string(k) +
                       " legs > " + std::to_string(leg_cap));
  if (r.legs() != k) throw contract_error("representation point has wrong leg count");
  const Eigen::Index dim = Eigen::Index(1) << k;
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(dim, dim);
  std::vector<Eigen::Matrix2d> legs(static_cast<std::size_t>(k));
  for (const auto& [word, coeff] : x.terms()) {
    for (int l = 0; l < k; ++l)
      legs[static_cast<std::size_t>(l)] = rep_word(word[static_cast<std::size_t>(l)], r.theta[static_cast<std::size_t>(l)]);
    const double c = to_double(coeff);
    for (Eigen::Index row = 0; row < dim; ++row) {
      for (Eigen::Index col = 0; col < dim; ++col) {
        double v = c;
        for (int l = 0; l < k && v != 0.0; ++l) {
          const int rb = static_cast<int>((row >> (k - 1 - l)) & 1);
          const int cb = static_cast<int>((col >> (k - 1 - l)) & 1);
          v *= legs[static_cast<std::size_t>(l)](rb, cb);
        }
        out(row, col) += v;
      }
    }
  }
  return out;
}

double spectral_norm(const Eigen::MatrixXd& op) {
  if (op.rows() == 0 || op.cols() == 0) return 0.0;
  if (op.rows() == op.cols() && op == op.transpose()) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(op, Eigen::EigenvaluesOnly);
    const auto& ev = solver.eigenvalues();
    return std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1)));
  }
  const Eigen::MatrixXd gram = op.transpose() * op;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(gram, Eigen::EigenvaluesOnly);
  const double top = solver.eigenvalues()(solver.eigenvalues().size() - 1);
  return std::sqrt(std::max(top, 0.0));
}

namespace {

// Kronecker-structured matvec: one 2x2 factor per leg, applied in place.
void apply_leg(std::vector<double>& v, const Eigen::Matrix2d& m, int leg, int k) {
  const std::size_t stride = std::size_t{1} << (k - 1 - leg);
  const std::size_t block = stride * 2;
  for (std::size_t base = 0; base < v.size(); base += block) {
    for (std::size_t off = 0; off < stride; ++off) {
      const double v0 = v[base + off];
      const double v1 = v[base + stride + off];
      v[base + off] = m(0, 0) * v0 + m(0, 1) * v1;
      v[base + stride + off] = m(1, 0) * v0 + m(1, 1) * v1;
    }
  }
}

struct TermMats {
  double coeff;
  std::vector<Eigen::Matrix2d> legs;
};

std::vector<TermMats> term_matrices(const TensorElement& x, const RepPoint& r) {
  std::vector<TermMats> out;
  out.reserve(x.term_count());
  const int k = x.legs();
  for (const auto& [word, coeff] : x.terms()) {
    TermMats t;
    t.coeff = to_double(coeff);
    t.legs.resize(static_cast<std::size_t>(k));
    for (int l = 0; l < k; ++l)
      t.legs[static_cast<std::size_t>(l)] = rep_word(word[static_cast<std::size_t>(l)], r.theta[static_cast<std::size_t>(l)]);
    out.push_back(std::move(t));
  }
  return out;
}

void apply_terms(const std::vector<TermMats>& terms, int k,
                 const std::vector<double>& in, std::vector<double>& out,
                 std::vector<double>& scratch) {
  std::fill(out.begin(), out.end(), 0.0);
  for (const auto& t : terms) {
    scratch = in;
    for (int l = 0; l < k; ++l) apply_leg(scratch, t.legs[static_cast<std::size_t>(l)], l, k);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += t.coeff * scratch[i];
  }
}

}  // namespace

double spectral_norm_power(const TensorElement& x, const RepPoint& r, double tol,
                           int max_iters) {
  if (x.is_zero()) return 0.0;
  const int k = x.legs();
  const std::size_t dim = std::size_t{1} << k;
  const auto fwd = term_matrices(x, r);
  const auto bwd = term_matrices(x.adjoint(), r);  // transpose of the image

  std::vector<double> v(dim), av(dim), w(dim), scratch(dim);
  for (std::size_t i = 0; i < dim; ++i) v[i] = 1.0 + std::sin(static_cast<double>(i + 1));
  double norm = 0.0;
  for (std::size_t i = 0; i < dim; ++i) norm += v[i] * v[i];
  norm = std::sqrt(norm);
  for (auto& c : v) c /= norm;

  double lambda = 0.0;
  for (int it = 0; it < max_iters; ++it) {
    apply_terms(fwd, k, v, av, scratch);
    apply_terms(bwd, k, av, w, scratch);
    double next = 0.0, wnorm = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
      next += v[i] * w[i];
      wnorm += w[i] * w[i];
    }
    wnorm = std::sqrt(wnorm);
    if (wnorm == 0.0) return 0.0;
    for (std::size_t i = 0; i < dim; ++i) v[i] = w[i] / wnorm;
    if (std::abs(next - lambda) <= tol * std::max(std::abs(next), 1.0)) {
      lambda = next;
      break;
    }
    lambda = next;
  }
  return std::sqrt(std::max(lambda, 0.0));
}

double eval_norm_at(const TensorElement& x, const RepPoint& r, int leg_cap) {
  const int k = x.legs();
  if (r.legs() != k) throw contract_error("representation point has wrong leg count");
  if (x.is_zero()) return 0.0;

  // Split endpoint legs into their character summands. At theta = 0 the leg
  // representation is chi11 (+) chi00, at theta = pi/2 it is chi10 (+) chi01,
  // so the image is block diagonal over the assignments below and the norm
  // is the maximum of the block norms.
  std::vector<int> endpoint_legs;
  std::vector<double> interior;
  for (int l = 0; l < k; ++l) {
    const double t = r.theta[static_cast<std::size_t>(l)];
    if (t == 0.0 || t == kHalfPi)
      endpoint_legs.push_back(l);
    else
      interior.push_back(t);
  }

  const std::size_t combos = std::size_t{1} << endpoint_legs.size();
  double best = 0.0;
  std::vector<std::optional<Character>> mask(static_cast<std::size_t>(k));
  for (std::size_t assign = 0; assign < combos; ++assign) {
    for (std::size_t e = 0; e < endpoint_legs.size(); ++e) {
      const int leg = endpoint_legs[e];
      const bool second = (assign >> e) & 1;
      const bool zero_end = r.theta[static_cast<std::size_t>(leg)] == 0.0;
      mask[static_cast<std::size_t>(leg)] =
          zero_end ? (second ? Character::chi00 : Character::chi11)
                   : (second ? Character::chi01 : Character::chi10);
    }
    const TensorElement reduced = char_eval_partial(x, mask);
    double value = 0.0;
    if (reduced.legs() == 0) {
      value = reduced.is_zero() ? 0.0 : std::abs(to_double(reduced.terms().begin()->second));
    } else if (!reduced.is_zero()) {
      const RepPoint sub{std::vector<double>(interior)};
      if ((std::size_t{1} << reduced.legs()) < static_cast<std::size_t>(kDenseNormDimLimit))
        value = spectral_norm(rep_eval(reduced, sub, leg_cap));
      else
        value = spectral_norm_power(reduced, sub);
    }
    best = std::max(best, value);
  }
  return best;
}

int default_grid(int legs) {
  if (legs <= 4) return 33;
  if (legs <= 6) return 9;
  if (legs <= 8) return 5;
  return 3;
}

NormEstimate norm_estimate(const TensorElement& x, const NormParams& params,
                           const std::vector<RepPoint>& seeds) {
  const int k = x.legs();
  const int grid = params.grid > 0 ? params.grid : default_grid(k);
  if (grid < 2) throw contract_error("grid must include both endpoints");

  NormEstimate est;
  est.grid = grid;
  if (k == 0) {
    est.value = x.is_zero() ? 0.0 : std::abs(to_double(x.terms().begin()->second));
    est.evaluations = 1;
    return est;
  }

  std::vector<double> levels(static_cast<std::size_t>(grid));
  for (int g = 0; g < grid; ++g)
    levels[static_cast<std::size_t>(g)] = kHalfPi * static_cast<double>(g) / static_cast<double>(grid - 1);

  std::size_t total = 1;
  for (int l = 0; l < k; ++l) total *= static_cast<std::size_t>(grid);

  auto point_of = [&](std::size_t idx) {
    std::vector<double> theta(static_cast<std::size_t>(k));
    for (int l = k - 1; l >= 0; --l) {
      theta[static_cast<std::size_t>(l)] = levels[idx % static_cast<std::size_t>(grid)];
      idx /= static_cast<std::size_t>(grid);
    }
    return RepPoint(std::move(theta));
  };

  // Scan phase: every grid point gets its own slot, then a sequential
  // reduction picks the maximum; ties break to the lexicographically
  // smallest point, which is the smallest index here.
  std::vector<double> values(total);
  indexed_loop(total, params.exec, [&](std::size_t i) {
    values[i] = eval_norm_at(x, point_of(i), params.leg_cap);
  });
  std::size_t best_idx = 0;
  for (std::size_t i = 1; i < total; ++i)
    if (values[i] > values[best_idx]) best_idx = i;

  est.value = values[best_idx];
  est.argmax = point_of(best_idx);
  est.evaluations = total;

  for (const auto& seed : seeds) {
    if (seed.legs() != k) throw contract_error("seed point has wrong leg count");
    const double v = eval_norm_at(x, seed, params.leg_cap);
    ++est.evaluations;
    if (v > est.value || (v == est.value && lex_less(seed.theta, est.argmax.theta))) {
      est.value = v;
      est.argmax = seed;
    }
  }

  // Coordinate search with halving steps from the incumbent.
  double step = kHalfPi / static_cast<double>(grid - 1);
  std::size_t used = 0;
  while (step >= params.step_tol && used < params.refine_budget) {
    bool improved = false;
    for (int l = 0; l < k && used < params.refine_budget; ++l) {
      for (int dir : {-1, +1}) {
        if (used >= params.refine_budget) break;
        RepPoint cand = est.argmax;
        cand.theta[static_cast<std::size_t>(l)] =
            std::clamp(cand.theta[static_cast<std::size_t>(l)] + dir * step, 0.0, kHalfPi);
        if (cand.theta == est.argmax.theta) continue;
        const double v = eval_norm_at(x, cand, params.leg_cap);
        ++used;
        if (v > est.value || (v == est.value && lex_less(cand.theta, est.argmax.theta))) {
          est.value = v;
          est.argmax = cand;
          improved = true;
        }
      }
    }
    if (!improved) step *= 0.5;
  }
  est.evaluations += used;
  est.final_step = step;
  return est;
}

std::vector<NormEstimate> seminorm_sequence(const StarPolynomial& p,
                                            const MagicMatrix& m1, int n_max,
                                            const NormParams& params,
                                            std::size_t term_budget) {
  std::vector<NormEstimate> out;
  MagicMatrix level = m1;
  for (int n = 1; n <= n_max; ++n) {
    if (n > 1) level = operp_product(level, m1, term_budget, params.exec);
    const TensorElement x = poly_eval(p, level, term_budget);
    std::vector<RepPoint> seeds;
    if (!out.empty()) {
      std::vector<double> theta = out.back().argmax.theta;
      theta.resize(static_cast<std::size_t>(level.legs()), 0.0);
      seeds.emplace_back(std::move(theta));
    }
    out.push_back(norm_estimate(x, params, seeds));
  }
  return out;
}

bool coassoc_check(const StarPolynomial& p, const MagicMatrix& m1, int n,
                   std::size_t term_budget, Exec exec) {
  const MagicMatrix level_n = tower(m1, n, term_budget, exec);
  const MagicMatrix doubled = tower(m1, 2 * n, term_budget, exec);
  const TensorElement lhs = poly_eval(p, doubled, term_budget);
  const TensorElement rhs = poly_eval_operp(p, level_n, level_n, term_budget, exec);
  return lhs == rhs;
}

ComultProbe comult_inequality_probe(const StarPolynomial& p, const MagicMatrix& m1,
                                    int n, const NormParams& params,
                                    std::size_t term_budget) {
  ComultProbe probe;
  const MagicMatrix level_n = tower(m1, n, term_budget, params.exec);
  const TensorElement xn = poly_eval(p, level_n, term_budget);
  probe.level_n = norm_estimate(xn, params);

  const TensorElement x2n = poly_eval_operp(p, level_n, level_n, term_budget, params.exec);
  std::vector<double> theta = probe.level_n.argmax.theta;
  theta.resize(static_cast<std::size_t>(2 * level_n.legs()), 0.0);
  probe.level_doubled = norm_estimate(x2n, params, {RepPoint(std::move(theta))});
  probe.doubled_dominates = probe.level_doubled.value >= probe.level_n.value;
  return probe;
}

}  // namespace operp
