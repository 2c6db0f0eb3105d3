#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "operp/algebra.hpp"

using namespace operp;

namespace {

AlgebraElement random_element(std::mt19937_64& rng, int max_terms = 5,
                              std::uint32_t max_len = 6) {
  std::uniform_int_distribution<int> terms(0, max_terms);
  std::uniform_int_distribution<std::uint32_t> len(0, max_len);
  std::uniform_int_distribution<int> first(0, 1);
  std::uniform_int_distribution<int> num(-4, 4);
  std::uniform_int_distribution<int> den(1, 4);
  AlgebraElement x;
  const int n = terms(rng);
  for (int t = 0; t < n; ++t) {
    const AltWord w = AltWord::alternating(first(rng) ? Letter::Q : Letter::P, len(rng));
    x.add_term(w, Rational(num(rng), den(rng)));
  }
  return x;
}

}  // namespace

TEST_CASE("one minus p is a projection") {
  const AlgebraElement cp = AlgebraElement::one_minus_p();
  CHECK(cp * cp == cp);
  CHECK(cp.term_count() == 2);
  CHECK(cp.coeff(AltWord::unit()) == 1);
  CHECK(cp.coeff(AltWord::single(Letter::P)) == -1);
}

TEST_CASE("distributivity example: (1-p)q") {
  const AlgebraElement x = AlgebraElement::one_minus_p() * AlgebraElement::q();
  AlgebraElement expected;
  expected.add_term(AltWord::single(Letter::Q), 1);
  expected.add_term(*AltWord::parse("PQ"), -1);
  CHECK(x == expected);
}

TEST_CASE("adjoint reverses products") {
  CHECK(AlgebraElement::word(*AltWord::parse("PQ")).adjoint() ==
        AlgebraElement::word(*AltWord::parse("QP")));
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 500; ++trial) {
    const AlgebraElement x = random_element(rng);
    const AlgebraElement y = random_element(rng);
    CHECK((x * y).adjoint() == y.adjoint() * x.adjoint());
    CHECK(x.adjoint().adjoint() == x);
    CHECK((x - x).is_zero());
  }
}

TEST_CASE("multiplication is associative and unital") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 300; ++trial) {
    const AlgebraElement x = random_element(rng);
    const AlgebraElement y = random_element(rng);
    const AlgebraElement z = random_element(rng);
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * AlgebraElement::unit() == x);
    CHECK(AlgebraElement::unit() * x == x);
  }
}

TEST_CASE("no zero coefficients are stored") {
  AlgebraElement x = AlgebraElement::p();
  x.add_term(AltWord::single(Letter::P), -1);
  CHECK(x.is_zero());
  CHECK(x.term_count() == 0);
  CHECK((AlgebraElement::p() * Rational(0)).is_zero());
}

TEST_CASE("characters are unital multiplicative functionals") {
  std::mt19937_64 rng(23);
  const Character chars[4] = {Character::chi00, Character::chi01, Character::chi10,
                              Character::chi11};
  for (Character c : chars) {
    CHECK(char_eval(c, AlgebraElement::unit()) == 1);
    for (int trial = 0; trial < 200; ++trial) {
      const AlgebraElement x = random_element(rng);
      const AlgebraElement y = random_element(rng);
      CHECK(char_eval(c, x * y) == char_eval(c, x) * char_eval(c, y));
      CHECK(char_eval(c, x + y) == char_eval(c, x) + char_eval(c, y));
    }
  }
  // chi01 kills p and fixes q: the values behind the mu_1 quotient.
  CHECK(char_eval(Character::chi01, AlgebraElement::p()) == 0);
  CHECK(char_eval(Character::chi01, AlgebraElement::one_minus_p()) == 1);
  CHECK(char_eval(Character::chi01, AlgebraElement::q()) == 1);
  CHECK(char_eval(Character::chi01, AlgebraElement::one_minus_q()) == 0);
}

TEST_CASE("printing") {
  CHECK(AlgebraElement::zero().str() == "0");
  CHECK(AlgebraElement::one_minus_p().str() == "1 - P");
  CHECK((AlgebraElement::q() * Rational(1, 2)).str() == "1/2*Q");
}
