#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "operp/numerics.hpp"

using namespace operp;

namespace {

AltWord w(const char* s) { return *AltWord::parse(s); }

TensorElement commutator_pq() {
  TensorElement x(1);
  x.add_term({w("PQ")}, 1);
  x.add_term({w("QP")}, -1);
  return x;
}

TensorElement random_element(std::mt19937_64& rng, int legs, int max_terms = 4,
                             std::uint32_t max_len = 3) {
  std::uniform_int_distribution<int> terms(1, max_terms);
  std::uniform_int_distribution<std::uint32_t> len(0, max_len);
  std::uniform_int_distribution<int> first(0, 1);
  std::uniform_int_distribution<int> num(-3, 3);
  std::uniform_int_distribution<int> den(1, 3);
  TensorElement x(legs);
  const int n = terms(rng);
  for (int t = 0; t < n; ++t) {
    TensorWord word(static_cast<std::size_t>(legs));
    for (auto& leg : word)
      leg = AltWord::alternating(first(rng) ? Letter::Q : Letter::P, len(rng));
    x.add_term(word, Rational(num(rng), den(rng)));
  }
  return x;
}

RepPoint random_point(std::mt19937_64& rng, int legs) {
  std::uniform_real_distribution<double> angle(0.0, half_pi());
  std::vector<double> theta(static_cast<std::size_t>(legs));
  for (auto& t : theta) t = angle(rng);
  return RepPoint(std::move(theta));
}

}  // namespace

TEST_CASE("closed forms of the leg representation") {
  // || p - q(theta) || = sin(theta)
  TensorElement diff(1);
  diff.add_term({w("P")}, 1);
  diff.add_term({w("Q")}, -1);
  for (double theta : {0.1, 0.7, 1.2, half_pi()}) {
    const double norm = spectral_norm(rep_eval(diff, RepPoint({theta})));
    CHECK(norm == doctest::Approx(std::sin(theta)).epsilon(1e-12));
  }
  CHECK(spectral_norm(rep_eval(diff, RepPoint({half_pi()}))) == doctest::Approx(1.0));

  CHECK(rep_eval(TensorElement::unit(2), RepPoint({0.3, 0.9})) ==
        Eigen::MatrixXd::Identity(4, 4));

  // [p, q](theta) = [[0, cs], [-cs, 0]]
  const double theta = 0.6;
  const Eigen::MatrixXd comm = rep_eval(commutator_pq(), RepPoint({theta}));
  const double cs = std::cos(theta) * std::sin(theta);
  CHECK(comm(0, 0) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(comm(0, 1) == doctest::Approx(cs).epsilon(1e-14));
  CHECK(comm(1, 0) == doctest::Approx(-cs).epsilon(1e-14));

  // pqp evaluates to cos^2 in the upper corner.
  TensorElement pqp(1);
  pqp.add_term({w("PQP")}, 1);
  const Eigen::MatrixXd img = rep_eval(pqp, RepPoint({theta}));
  CHECK(img(0, 0) == doctest::Approx(std::cos(theta) * std::cos(theta)));
  CHECK(img(1, 1) == doctest::Approx(0.0));
}

TEST_CASE("rep_eval is a star homomorphism") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 60; ++trial) {
    const int legs = 1 + static_cast<int>(rng() % 3);
    const TensorElement x = random_element(rng, legs);
    const TensorElement y = random_element(rng, legs);
    const RepPoint r = random_point(rng, legs);
    const Eigen::MatrixXd rx = rep_eval(x, r);
    const Eigen::MatrixXd ry = rep_eval(y, r);
    CHECK((rep_eval(x * y, r) - rx * ry).cwiseAbs().maxCoeff() <= 1e-12);
    CHECK((rep_eval(x.adjoint(), r) - rx.transpose()).cwiseAbs().maxCoeff() <= 1e-14);
  }
}

TEST_CASE("magic images are projection-valued with identity row sums") {
  std::mt19937_64 rng(62);
  const MagicMatrix m1 = build_M1_rr();
  for (int trial = 0; trial < 10; ++trial) {
    const RepPoint r = random_point(rng, 2);
    Eigen::MatrixXd row_sum = Eigen::MatrixXd::Zero(4, 4);
    for (int j = 0; j < 4; ++j) {
      const Eigen::MatrixXd e = rep_eval(m1.at(0, j), r);
      CHECK((e * e - e).cwiseAbs().maxCoeff() <= 1e-12);
      CHECK((e - e.transpose()).cwiseAbs().maxCoeff() <= 1e-14);
      row_sum += e;
    }
    CHECK((row_sum - Eigen::MatrixXd::Identity(4, 4)).cwiseAbs().maxCoeff() <= 1e-12);
  }
}

TEST_CASE("spectral norm basics") {
  CHECK(spectral_norm(Eigen::MatrixXd::Identity(4, 4)) == doctest::Approx(1.0));
  Eigen::MatrixXd anti(2, 2);
  anti << 0, 0.5, -0.5, 0;
  CHECK(spectral_norm(anti) == doctest::Approx(0.5));
  // Kronecker product of a rotation and a reflection is orthogonal.
  Eigen::MatrixXd rot(2, 2), refl(2, 2);
  const double a = 0.4;
  rot << std::cos(a), -std::sin(a), std::sin(a), std::cos(a);
  refl << 0, 1, 1, 0;
  Eigen::MatrixXd kron(4, 4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) kron.block(2 * i, 2 * j, 2, 2) = rot(i, j) * refl;
  CHECK(spectral_norm(kron) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("power iteration agrees with the dense path") {
  std::mt19937_64 rng(63);
  for (int trial = 0; trial < 30; ++trial) {
    const int legs = 1 + static_cast<int>(rng() % 3);
    const TensorElement x = random_element(rng, legs);
    const RepPoint r = random_point(rng, legs);
    const double dense = spectral_norm(rep_eval(x, r));
    const double power = spectral_norm_power(x, r);
    CHECK(power == doctest::Approx(dense).epsilon(1e-7));
  }
}

TEST_CASE("endpoint reduction matches the direct dense evaluation") {
  std::mt19937_64 rng(64);
  for (int trial = 0; trial < 60; ++trial) {
    const int legs = 2 + static_cast<int>(rng() % 2);
    const TensorElement x = random_element(rng, legs);
    RepPoint r = random_point(rng, legs);
    // Pin a random subset of legs to an endpoint.
    for (auto& t : r.theta) {
      const int pick = static_cast<int>(rng() % 3);
      if (pick == 0) t = 0.0;
      if (pick == 1) t = half_pi();
    }
    const double reduced = eval_norm_at(x, r);
    const double direct = spectral_norm(rep_eval(x, r));
    CHECK(reduced == doctest::Approx(direct).epsilon(1e-11));
  }
}

TEST_CASE("norm oracles") {
  // sup over theta of |cos sin| is 1/2: the commutator norm.
  const NormEstimate comm = norm_estimate(commutator_pq());
  CHECK(comm.value == doctest::Approx(0.5).epsilon(1e-6));
  CHECK(comm.argmax.theta[0] == doctest::Approx(half_pi() / 2).epsilon(1e-6));

  // pqp has norm 1, attained in the character block at theta = 0.
  TensorElement pqp(1);
  pqp.add_term({w("PQP")}, 1);
  const NormEstimate corner = norm_estimate(pqp);
  CHECK(corner.value == doctest::Approx(1.0).epsilon(1e-3));

  // p (x) [p,q]: independent legs multiply norms.
  const TensorElement two_leg =
      tensor_concat(TensorElement::from_algebra(AlgebraElement::p()), commutator_pq());
  const NormEstimate split = norm_estimate(two_leg);
  CHECK(split.value == doctest::Approx(0.5).epsilon(1e-3));

  CHECK(norm_estimate(TensorElement::zero(2)).value == 0.0);
}

TEST_CASE("estimates never decrease under more budget or a refined grid") {
  std::mt19937_64 rng(65);
  for (int trial = 0; trial < 20; ++trial) {
    const TensorElement x = random_element(rng, 2);
    NormParams small;
    small.grid = 5;
    small.refine_budget = 0;
    NormParams doubled = small;
    doubled.grid = 9;  // contains the 5-point grid
    CHECK(norm_estimate(x, doubled).value >= norm_estimate(x, small).value);

    NormParams more = small;
    more.refine_budget = 200;
    CHECK(norm_estimate(x, more).value >= norm_estimate(x, small).value);
  }
}

TEST_CASE("argmax ties break to the lexicographically smallest point") {
  // The unit has norm 1 everywhere, so the tie-break picks the origin.
  const NormEstimate e = norm_estimate(TensorElement::unit(2), {.grid = 5});
  CHECK(e.value == 1.0);
  CHECK(e.argmax.theta == std::vector<double>{0.0, 0.0});
}

TEST_CASE("seminorm sequences are nondecreasing") {
  const MagicMatrix m1 = build_M1_rr();
  NormParams params;
  params.grid = 9;
  params.refine_budget = 120;

  const StarPolynomial x11 = StarPolynomial::variable(4, 1, 1);
  const auto seq = seminorm_sequence(x11, m1, 2, params);
  CHECK(seq.size() == 2);
  CHECK(seq[0].value <= seq[1].value);
  CHECK(seq[1].value <= 1.0 + 1e-12);

  // Row sums minus one vanish at every level.
  for (const auto& e : seminorm_sequence(row_sum_minus_one(4, 2), m1, 2, params))
    CHECK(e.value == 0.0);

  StarPolynomial commutator(4);
  commutator += StarPolynomial::variable(4, 1, 1) * StarPolynomial::variable(4, 2, 2);
  commutator -= StarPolynomial::variable(4, 2, 2) * StarPolynomial::variable(4, 1, 1);
  const auto cseq = seminorm_sequence(commutator, m1, 2, params);
  CHECK(cseq[0].value == doctest::Approx(0.5).epsilon(1e-3));
  CHECK(cseq[0].value <= cseq[1].value);

  std::mt19937_64 rng(66);
  for (int trial = 0; trial < 5; ++trial) {
    const StarPolynomial p = random_star_polynomial(rng, 4, 2, 3);
    const auto s = seminorm_sequence(p, m1, 2, params);
    CHECK(s[0].value <= s[1].value);
  }
}

TEST_CASE("coassociativity identity") {
  const MagicMatrix m1 = build_M1_rr();
  CHECK(coassoc_check(StarPolynomial::variable(4, 1, 1), m1, 1));
  CHECK(coassoc_check(StarPolynomial::constant(4, 1), m1, 1));
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 10; ++trial)
    CHECK(coassoc_check(random_star_polynomial(rng, 4, 3, 4), m1, 1));
}

TEST_CASE("doubling probe reports a dominating estimate") {
  const MagicMatrix m1 = build_M1_rr();
  NormParams params;
  params.grid = 5;
  params.refine_budget = 60;

  const ComultProbe probe =
      comult_inequality_probe(StarPolynomial::variable(4, 1, 1), m1, 1, params);
  CHECK(probe.doubled_dominates);
  CHECK(probe.level_doubled.value >= probe.level_n.value);

  const ComultProbe unit_probe =
      comult_inequality_probe(StarPolynomial::constant(4, 1), m1, 1, params);
  CHECK(unit_probe.level_n.value == 1.0);
  CHECK(unit_probe.level_doubled.value == 1.0);
}

TEST_CASE("character compression sits at the zero endpoint") {
  // At theta = 0 the (1,1) corner of the leg representation is chi11.
  for (const char* word : {"P", "Q", "PQ", "QPQ", "1"}) {
    TensorElement x(1);
    x.add_term({w(word)}, 1);
    const Eigen::MatrixXd img = rep_eval(x, RepPoint({0.0}));
    CHECK(img(0, 0) == doctest::Approx(char_value(Character::chi11, w(word))));
    CHECK(img(1, 1) == doctest::Approx(char_value(Character::chi00, w(word))));
  }
}

TEST_CASE("dimension cap raises an error") {
  CHECK_THROWS_AS(rep_eval(TensorElement::unit(3), RepPoint({0.1, 0.2, 0.3}), 2),
                  budget_error);
}
