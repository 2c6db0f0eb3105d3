#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "operp/tensor.hpp"

using namespace operp;

namespace {

AltWord w(const char* s) { return *AltWord::parse(s); }

TensorElement random_element(std::mt19937_64& rng, int legs, int max_terms = 4,
                             std::uint32_t max_len = 3) {
  std::uniform_int_distribution<int> terms(0, max_terms);
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

CharacterTuple random_tuple(std::mt19937_64& rng, int legs) {
  std::uniform_int_distribution<int> c(0, 3);
  CharacterTuple t(static_cast<std::size_t>(legs));
  for (auto& x : t) x = static_cast<Character>(c(rng));
  return t;
}

}  // namespace

TEST_CASE("tensor_concat basics") {
  const TensorElement p1 = TensorElement::from_algebra(AlgebraElement::p());
  const TensorElement q1 = TensorElement::from_algebra(AlgebraElement::q());
  const TensorElement pq = tensor_concat(p1, q1);
  CHECK(pq.legs() == 2);
  CHECK(pq.term_count() == 1);
  CHECK(pq.coeff({w("P"), w("Q")}) == 1);

  const TensorElement expansion =
      tensor_concat(TensorElement::from_algebra(AlgebraElement::one_minus_p()), q1);
  CHECK(expansion.coeff({w("1"), w("Q")}) == 1);
  CHECK(expansion.coeff({w("P"), w("Q")}) == -1);
  CHECK(expansion.term_count() == 2);

  CHECK(tensor_concat(p1, TensorElement::zero(1)).is_zero());
  CHECK(tensor_concat(p1, TensorElement::zero(1)).legs() == 2);
}

TEST_CASE("legwise product matches the one-leg algebra") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const TensorElement a = random_element(rng, 1);
    const TensorElement b = random_element(rng, 1);
    AlgebraElement xa, xb;
    for (const auto& [word, c] : a.terms()) xa.add_term(word[0], c);
    for (const auto& [word, c] : b.terms()) xb.add_term(word[0], c);
    CHECK(a * b == TensorElement::from_algebra(xa * xb));
  }
}

TEST_CASE("star identities on tensor powers") {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 300; ++trial) {
    const TensorElement x = random_element(rng, 3);
    const TensorElement y = random_element(rng, 3);
    CHECK((x * y).adjoint() == y.adjoint() * x.adjoint());
    CHECK(x.adjoint().adjoint() == x);
    CHECK((x - x).is_zero());
    CHECK((x * y) * y == x * (y * y));
  }
}

TEST_CASE("full character evaluation") {
  TensorElement x(2);
  x.add_term({w("P"), w("Q")}, Rational(1, 2));
  x.add_term({w("1"), w("QPQ")}, 3);
  CHECK(char_eval({Character::chi11, Character::chi11}, x) == Rational(7, 2));
  CHECK(char_eval({Character::chi01, Character::chi11}, x) == 3);  // chi01 kills P
  CHECK(char_eval({Character::chi11, Character::chi01}, x) == Rational(1, 2));  // QPQ dies
  CHECK_THROWS_AS(char_eval({Character::chi11}, x), contract_error);
}

TEST_CASE("partial evaluation composes with full evaluation") {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 400; ++trial) {
    const TensorElement x = random_element(rng, 4);
    const CharacterTuple tuple = random_tuple(rng, 4);
    // Evaluate the last two legs first, then the rest.
    const TensorElement partial =
        char_eval_partial(x, 2, CharacterTuple{tuple[2], tuple[3]});
    CHECK(partial.legs() == 2);
    CHECK(char_eval(CharacterTuple{tuple[0], tuple[1]}, partial) == char_eval(tuple, x));
  }
}

TEST_CASE("partial evaluation over a scattered mask") {
  std::mt19937_64 rng(34);
  for (int trial = 0; trial < 400; ++trial) {
    const TensorElement x = random_element(rng, 4);
    const CharacterTuple tuple = random_tuple(rng, 4);
    std::vector<std::optional<Character>> first_half(4), second_half(2);
    first_half[0] = tuple[0];
    first_half[2] = tuple[2];
    second_half[0] = tuple[1];  // legs 1, 3 survive the first pass
    second_half[1] = tuple[3];
    const TensorElement once = char_eval_partial(x, first_half);
    CHECK(once.legs() == 2);
    CHECK(char_eval_partial(once, second_half).legs() == 0);
    std::vector<std::optional<Character>> all(4);
    for (int l = 0; l < 4; ++l) all[static_cast<std::size_t>(l)] = tuple[static_cast<std::size_t>(l)];
    const TensorElement direct = char_eval_partial(x, all);
    CHECK(char_eval_partial(once, second_half) == direct);
  }
}

TEST_CASE("budgeted product throws instead of truncating") {
  std::mt19937_64 rng(35);
  const TensorElement x = random_element(rng, 2, 4, 2);
  TensorElement big(2);
  for (int i = 0; i < 6; ++i)
    big.add_term({AltWord::alternating(Letter::P, static_cast<std::uint32_t>(i) + 1),
                  AltWord::alternating(Letter::Q, static_cast<std::uint32_t>(i) + 1)},
                 1);
  CHECK_THROWS_AS(mul_budgeted(big, big, 2), budget_error);
  CHECK(mul_budgeted(big, big, 10000) == big * big);
}

TEST_CASE("zero-leg elements are scalars") {
  TensorElement s(0);
  s.add_term({}, Rational(5, 3));
  CHECK(s.legs() == 0);
  CHECK(char_eval({}, s) == Rational(5, 3));
}
