#include "operp/magic.hpp"

#include <algorithm>

namespace operp {

MagicMatrix MagicMatrix::scalar_identity(int size, int legs) {
  MagicMatrix m(size, legs);
  for (int i = 0; i < size; ++i) m.at(i, i) = TensorElement::unit(legs);
  return m;
}

MagicMatrix MagicMatrix::adjoint_entrywise() const {
  MagicMatrix out(size_, legs_);
  for (int i = 0; i < size_; ++i)
    for (int j = 0; j < size_; ++j) out.at(i, j) = at(i, j).adjoint();
  return out;
}

namespace {

// One token of the magic validation, in reporting order: entry checks
// (self-adjointness, idempotency) row-major, then row sums, then column sums.
std::string entry_violation(const MagicMatrix& m, int i, int j) {
  const TensorElement& e = m.at(i, j);
  if (e.adjoint() != e)
    return "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
           ") is not self-adjoint";
  if (e * e != e)
    return "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
           ") is not idempotent";
  return {};
}

}  // namespace

MagicReport check_magic(const MagicMatrix& m, Exec exec) {
  const int n = m.size();
  std::vector<std::string> entry_faults(static_cast<std::size_t>(n) * n);
  indexed_loop(entry_faults.size(), exec, [&](std::size_t idx) {
    entry_faults[idx] = entry_violation(m, static_cast<int>(idx) / n, static_cast<int>(idx) % n);
  });
  for (const auto& f : entry_faults)
    if (!f.empty()) return {false, f};

  const TensorElement unit = TensorElement::unit(m.legs());
  for (int i = 0; i < n; ++i) {
    TensorElement sum(m.legs());
    for (int j = 0; j < n; ++j) sum += m.at(i, j);
    if (sum != unit)
      return {false, "row " + std::to_string(i + 1) + " sum differs from the unit"};
  }
  for (int j = 0; j < n; ++j) {
    TensorElement sum(m.legs());
    for (int i = 0; i < n; ++i) sum += m.at(i, j);
    if (sum != unit)
      return {false, "column " + std::to_string(j + 1) + " sum differs from the unit"};
  }
  return {};
}

MagicMatrix operp_product(const MagicMatrix& a, const MagicMatrix& b,
                  std::size_t term_budget, Exec exec) {
  if (a.size() != b.size()) throw contract_error("operp size mismatch");
  const int n = a.size();
  MagicMatrix out(n, a.legs() + b.legs());
  indexed_loop(static_cast<std::size_t>(n) * n, exec, [&](std::size_t idx) {
    const int i = static_cast<int>(idx) / n, j = static_cast<int>(idx) % n;
    TensorElement e(a.legs() + b.legs());
    for (int k = 0; k < n; ++k) {
      e += tensor_concat(a.at(i, k), b.at(k, j));
      if (e.term_count() > term_budget)
        throw budget_error("operp entry exceeds term budget of " +
                           std::to_string(term_budget));
    }
    out.at(i, j) = std::move(e);
  });
  return out;
}

MagicMatrix tower(const MagicMatrix& m1, int n, std::size_t term_budget, Exec exec) {
  if (n < 1) throw contract_error("tower level must be >= 1");
  MagicMatrix out = m1;
  for (int i = 2; i <= n; ++i) out = operp_product(out, m1, term_budget, exec);
  return out;
}

MagicMatrix build_R() {
  const AlgebraElement p = AlgebraElement::p();
  const AlgebraElement q = AlgebraElement::q();
  const AlgebraElement cp = AlgebraElement::one_minus_p();
  const AlgebraElement cq = AlgebraElement::one_minus_q();
  const AlgebraElement z = AlgebraElement::zero();
  const AlgebraElement rows[4][4] = {
      {p, z, cp, z},
      {cp, z, p, z},
      {z, q, z, cq},
      {z, cq, z, q},
  };
  MagicMatrix m(4, 1);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m.at(i, j) = TensorElement::from_algebra(rows[i][j]);
  return m;
}

MagicMatrix build_Rhat() {
  const AlgebraElement p = AlgebraElement::p();
  const AlgebraElement q = AlgebraElement::q();
  const AlgebraElement cp = AlgebraElement::one_minus_p();
  const AlgebraElement cq = AlgebraElement::one_minus_q();
  const AlgebraElement z = AlgebraElement::zero();
  const AlgebraElement rows[4][4] = {
      {p, cp, z, z},
      {cp, p, z, z},
      {z, z, q, cq},
      {z, z, cq, q},
  };
  MagicMatrix m(4, 1);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m.at(i, j) = TensorElement::from_algebra(rows[i][j]);
  return m;
}

MagicMatrix build_R_abcd(int N, int a, int b, int c, int d) {
  if (N < 4) throw contract_error("build_R_abcd requires N >= 4");
  const int idx[4] = {a, b, c, d};
  for (int u = 0; u < 4; ++u) {
    if (idx[u] < 1 || idx[u] > N)
      throw contract_error("build_R_abcd index out of range");
    for (int v = u + 1; v < 4; ++v)
      if (idx[u] == idx[v])
        throw contract_error("build_R_abcd indices must be pairwise distinct");
  }
  MagicMatrix m(N, 1);
  auto set = [&](int i, int j, const AlgebraElement& e) {
    m.at(i - 1, j - 1) = TensorElement::from_algebra(e);
  };
  for (int i = 1; i <= N; ++i) set(i, i, AlgebraElement::unit());
  set(a, a, AlgebraElement::p());
  set(b, b, AlgebraElement::p());
  set(c, c, AlgebraElement::q());
  set(d, d, AlgebraElement::q());
  set(a, b, AlgebraElement::one_minus_p());
  set(b, a, AlgebraElement::one_minus_p());
  set(c, d, AlgebraElement::one_minus_q());
  set(d, c, AlgebraElement::one_minus_q());
  return m;
}

MagicMatrix build_M1_rr() { return operp_product(build_R(), build_R()); }

OperpChain OperpChain::repeated(int n) const {
  if (n < 1) throw contract_error("tower level must be >= 1");
  OperpChain out(size_, legs_per_block_ ? legs_per_block_ : legs());
  for (int r = 0; r < n; ++r)
    for (const auto& f : factors_) out.append(f);
  return out;
}

int OperpChain::leg_of(int round, int a, int b, int block) const {
  if (a > b) std::swap(a, b);
  const int n = size_;
  // Lexicographic rank of the pair (a, b), 1-based inputs.
  const int pair_index = (a - 1) * (2 * n - a) / 2 + (b - a - 1);
  const int pairs = n * (n - 1) / 2;
  const int per_block = legs_per_block_ ? legs_per_block_ : legs();
  const int leg = (block - 1) * per_block + (round - 1) * pairs + pair_index;
  if (leg < 0 || leg >= legs()) throw contract_error("leg_of out of range");
  return leg;
}

MagicMatrix OperpChain::expand(std::size_t term_budget, Exec exec) const {
  if (factors_.empty()) throw contract_error("cannot expand an empty chain");
  MagicMatrix out = factors_.front().matrix;
  for (std::size_t f = 1; f < factors_.size(); ++f)
    out = operp_product(out, factors_[f].matrix, term_budget, exec);
  return out;
}

RationalMatrix OperpChain::char_apply(const CharacterTuple& chars) const {
  if (chars.size() != factors_.size())
    throw contract_error("character tuple does not cover every chain leg");
  RationalMatrix out = RationalMatrix::identity(static_cast<std::size_t>(size_));
  for (std::size_t f = 0; f < factors_.size(); ++f) {
    RationalMatrix step(static_cast<std::size_t>(size_), static_cast<std::size_t>(size_));
    for (int i = 0; i < size_; ++i)
      for (int j = 0; j < size_; ++j) {
        const TensorElement& e = factors_[f].matrix.at(i, j);
        step.at(i, j) = char_eval(CharacterTuple{chars[f]}, e);
      }
    out = out * step;
  }
  return out;
}

OperpChain build_M1_general(int N, int L) {
  if (N < 4) throw contract_error("build_M1_general requires N >= 4");
  if (L < 0) L = N - 1;
  if (L < N - 1)
    throw contract_error("round count too small: every permutation must factor "
                         "into at most L transpositions");
  OperpChain chain(N, L * N * (N - 1) / 2);
  for (int round = 1; round <= L; ++round) {
    for (int a = 1; a <= N; ++a) {
      for (int b = a + 1; b <= N; ++b) {
        // Support rule: the two smallest indices outside {a, b}.
        int c = 0, d = 0;
        for (int x = 1; x <= N && d == 0; ++x) {
          if (x == a || x == b) continue;
          (c == 0 ? c : d) = x;
        }
        ChainFactor f;
        f.round = round;
        f.a = a;
        f.b = b;
        f.c = c;
        f.d = d;
        f.matrix = build_R_abcd(N, a, b, c, d);
        chain.append(std::move(f));
      }
    }
  }
  return chain;
}

StarPolynomial StarPolynomial::constant(int size, const Rational& c) {
  StarPolynomial p(size);
  p.add_term({}, c);
  return p;
}

StarPolynomial StarPolynomial::variable(int size, int i, int j, bool star) {
  StarPolynomial p(size);
  p.add_term({StarVariable{static_cast<std::uint16_t>(i), static_cast<std::uint16_t>(j), star}}, 1);
  return p;
}

int StarPolynomial::degree() const {
  int d = 0;
  for (const auto& [w, c] : terms_) d = std::max(d, static_cast<int>(w.size()));
  return d;
}

void StarPolynomial::add_term(const StarWord& w, const Rational& c) {
  if (c == 0) return;
  for (const auto& v : w)
    if (v.i < 1 || v.i > size_ || v.j < 1 || v.j > size_)
      throw contract_error("variable index out of range");
  auto [it, inserted] = terms_.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

StarPolynomial& StarPolynomial::operator+=(const StarPolynomial& other) {
  for (const auto& [w, c] : other.terms_) add_term(w, c);
  return *this;
}

StarPolynomial& StarPolynomial::operator-=(const StarPolynomial& other) {
  for (const auto& [w, c] : other.terms_) add_term(w, -c);
  return *this;
}

StarPolynomial& StarPolynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, coeff] : terms_) coeff *= c;
  return *this;
}

StarPolynomial operator*(const StarPolynomial& a, const StarPolynomial& b) {
  StarPolynomial out(a.size());
  for (const auto& [wa, ca] : a.terms()) {
    for (const auto& [wb, cb] : b.terms()) {
      StarWord w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out.add_term(w, ca * cb);
    }
  }
  return out;
}

std::string StarPolynomial::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (first) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    Rational a = c < 0 ? Rational(-c) : c;
    if (a != 1 || w.empty()) s += to_string(a);
    for (const auto& v : w) {
      s += "X" + std::to_string(v.i) + std::to_string(v.j);
      if (v.star) s += "*";
    }
    first = false;
  }
  return s;
}

StarPolynomial row_sum_minus_one(int size, int i) {
  StarPolynomial p(size);
  for (int j = 1; j <= size; ++j) p += StarPolynomial::variable(size, i, j);
  p -= StarPolynomial::constant(size, 1);
  return p;
}

StarPolynomial random_star_polynomial(std::mt19937_64& rng, int size, int max_degree,
                                      int max_terms, bool include_adjoints) {
  std::uniform_int_distribution<int> term_count(1, max_terms);
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<int> index(1, size);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 9);
  std::uniform_int_distribution<int> star(0, 1);
  StarPolynomial p(size);
  const int terms = term_count(rng);
  for (int t = 0; t < terms; ++t) {
    StarWord w(static_cast<std::size_t>(deg(rng)));
    for (auto& v : w) {
      v.i = static_cast<std::uint16_t>(index(rng));
      v.j = static_cast<std::uint16_t>(index(rng));
      v.star = include_adjoints && star(rng) == 1;
    }
    int n = num(rng);
    if (n == 0) n = 1;
    p.add_term(w, Rational(n, den(rng)));
  }
  return p;
}

TensorElement poly_eval(const StarPolynomial& p, const MagicMatrix& m,
                        std::size_t term_budget) {
  if (p.size() != m.size())
    throw contract_error("polynomial size does not match matrix size");
  TensorElement out(m.legs());
  for (const auto& [w, c] : p.terms()) {
    TensorElement prod = TensorElement::unit(m.legs());
    for (const auto& v : w) {
      const TensorElement& entry = m.at(v.i - 1, v.j - 1);
      prod = v.star ? mul_budgeted(prod, entry.adjoint(), term_budget)
                    : mul_budgeted(prod, entry, term_budget);
      if (prod.is_zero()) break;
    }
    out += prod * c;
    if (out.term_count() > term_budget)
      throw budget_error("polynomial evaluation exceeds term budget");
  }
  return out;
}

TensorElement poly_eval_operp(const StarPolynomial& p, const MagicMatrix& a,
                              const MagicMatrix& b, std::size_t term_budget,
                              Exec exec) {
  return poly_eval(p, operp_product(a, b, term_budget, exec), term_budget);
}

TensorElement sigma_product(const MagicMatrix& m, const std::vector<int>& sigma,
                            std::size_t term_budget) {
  if (static_cast<int>(sigma.size()) != m.size())
    throw contract_error("permutation size does not match matrix size");
  TensorElement prod = TensorElement::unit(m.legs());
  for (int i = 0; i < m.size(); ++i) {
    prod = mul_budgeted(prod, m.at(i, sigma[i]), term_budget);
    if (prod.is_zero()) break;
  }
  return prod;
}

}  // namespace operp
