#include "operp/morphisms.hpp"

#include <algorithm>
#include <numeric>

namespace operp {

Permutation identity_perm(int n) {
  Permutation p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Permutation inverse(const Permutation& sigma) {
  Permutation inv(sigma.size());
  for (std::size_t i = 0; i < sigma.size(); ++i) inv[static_cast<std::size_t>(sigma[i])] = static_cast<int>(i);
  return inv;
}

Permutation compose(const Permutation& f, const Permutation& g) {
  Permutation out(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) out[i] = f[static_cast<std::size_t>(g[i])];
  return out;
}

bool is_permutation(const Permutation& sigma) {
  std::vector<bool> seen(sigma.size(), false);
  for (int v : sigma) {
    if (v < 0 || v >= static_cast<int>(sigma.size()) || seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = true;
  }
  return true;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  Permutation p = identity_perm(n);
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::size_t lex_rank(const Permutation& sigma) {
  const std::size_t n = sigma.size();
  std::size_t rank = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t smaller = 0;
    for (std::size_t j = i + 1; j < n; ++j)
      if (sigma[j] < sigma[i]) ++smaller;
    std::size_t fact = 1;
    for (std::size_t k = 2; k <= n - 1 - i; ++k) fact *= k;
    rank += smaller * fact;
  }
  return rank;
}

std::string perm_str(const Permutation& sigma) {
  std::string s = "[";
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(sigma[i] + 1);
  }
  return s + "]";
}

TranspositionDecomposition decompose_inverse(const Permutation& sigma) {
  if (!is_permutation(sigma)) throw contract_error("not a permutation");
  TranspositionDecomposition out;
  out.target = sigma;
  const Permutation inv = inverse(sigma);
  std::vector<bool> visited(sigma.size(), false);
  for (std::size_t start = 0; start < inv.size(); ++start) {
    if (visited[start]) continue;
    // Walk the cycle of sigma^{-1} through start.
    std::vector<int> cycle;
    int cur = static_cast<int>(start);
    while (!visited[static_cast<std::size_t>(cur)]) {
      visited[static_cast<std::size_t>(cur)] = true;
      cycle.push_back(cur);
      cur = inv[static_cast<std::size_t>(cur)];
    }
    for (std::size_t i = 0; i + 1 < cycle.size(); ++i) {
      int a = cycle[i], b = cycle[i + 1];
      out.factors.emplace_back(std::min(a, b), std::max(a, b));
    }
  }
  return out;
}

CharacterTuple nu_character(const OperpChain& m1) {
  CharacterTuple chars = all_chi11(static_cast<std::size_t>(m1.legs()));
  if (!m1.char_apply(chars).is_identity())
    throw contract_error("chi11 does not collapse this block to the identity");
  return chars;
}

CharacterTuple nu_character(const MagicMatrix& m1) {
  CharacterTuple chars = all_chi11(static_cast<std::size_t>(m1.legs()));
  if (!char_apply(m1, chars).is_identity())
    throw contract_error("chi11 does not collapse this block to the identity");
  return chars;
}

CharacterTuple mu_sigma(const Permutation& sigma, const OperpChain& m1) {
  if (static_cast<int>(sigma.size()) != m1.size())
    throw contract_error("permutation size does not match chain size");
  const auto decomposition = decompose_inverse(sigma);
  const int pairs = m1.size() * (m1.size() - 1) / 2;
  const int rounds = m1.legs_per_block() ? m1.legs_per_block() / pairs : m1.legs() / pairs;
  if (static_cast<int>(decomposition.factors.size()) > rounds)
    throw contract_error("decomposition longer than the available rounds");
  CharacterTuple chars = all_chi11(static_cast<std::size_t>(m1.legs()));
  for (std::size_t i = 0; i < decomposition.factors.size(); ++i) {
    const auto [a, b] = decomposition.factors[i];
    const int leg = m1.leg_of(static_cast<int>(i) + 1, a + 1, b + 1);
    chars[static_cast<std::size_t>(leg)] = Character::chi01;
  }
  return chars;
}

RationalMatrix char_apply(const MagicMatrix& m, const CharacterTuple& per_leg) {
  RationalMatrix out(static_cast<std::size_t>(m.size()), static_cast<std::size_t>(m.size()));
  for (int i = 0; i < m.size(); ++i)
    for (int j = 0; j < m.size(); ++j) out.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = char_eval(per_leg, m.at(i, j));
  return out;
}

RationalMatrix permutation_matrix(const Permutation& sigma) {
  RationalMatrix m(sigma.size(), sigma.size());
  for (std::size_t j = 0; j < sigma.size(); ++j) m.at(static_cast<std::size_t>(sigma[j]), j) = 1;
  return m;
}

TensorElement pi_map(const TensorElement& x, int block_legs) {
  if (block_legs <= 0 || x.legs() < block_legs)
    throw contract_error("pi_map block exceeds leg count");
  return char_eval_partial(x, static_cast<std::size_t>(x.legs() - block_legs),
                           all_chi11(static_cast<std::size_t>(block_legs)));
}

MagicMatrix pi_map(const MagicMatrix& m, int block_legs) {
  MagicMatrix out(m.size(), m.legs() - block_legs);
  for (int i = 0; i < m.size(); ++i)
    for (int j = 0; j < m.size(); ++j) out.at(i, j) = pi_map(m.at(i, j), block_legs);
  return out;
}

OperpChain pi_map(const OperpChain& tower_chain) {
  const int block = tower_chain.legs_per_block();
  if (block <= 0 || tower_chain.legs() <= block || tower_chain.legs() % block != 0)
    throw contract_error("pi_map needs a chain of at least two blocks");
  OperpChain out(tower_chain.size(), block);
  for (int f = 0; f + block < tower_chain.legs(); ++f)
    out.append(tower_chain.factors()[static_cast<std::size_t>(f)]);
  return out;
}

SeparationResult separation_matrix(int N, int L, Exec exec) {
  const OperpChain chain = build_M1_general(N, L);
  const auto perms = all_permutations(N);
  const std::size_t count = perms.size();
  SeparationResult result;
  result.N = N;
  result.L = chain.legs() / (N * (N - 1) / 2);
  result.table = RationalMatrix(count, count);

  auto row = [&](std::size_t t) {
    const RationalMatrix scalar = chain.char_apply(mu_sigma(perms[t], chain));
    for (std::size_t s = 0; s < count; ++s) {
      Rational v = 1;
      for (int i = 0; i < N && v != 0; ++i)
        v *= scalar.at(static_cast<std::size_t>(i), static_cast<std::size_t>(perms[s][i]));
      result.table.at(t, s) = v;
    }
  };
  indexed_loop(count, exec, row);

  result.is_identity = true;
  for (std::size_t t = 0; t < count && result.is_identity; ++t) {
    for (std::size_t s = 0; s < count; ++s) {
      const Rational expected(t == s ? 1 : 0);
      if (result.table.at(t, s) != expected) {
        result.is_identity = false;
        result.first_violation = "tau=" + perm_str(perms[t]) + " sigma=" + perm_str(perms[s]) +
                                 " value=" + to_string(result.table.at(t, s));
        break;
      }
    }
  }
  return result;
}

Rational eval_at_permutation(const TensorElement& x, const Permutation& sigma,
                             const OperpChain& m1) {
  return char_eval(mu_sigma(inverse(sigma), m1), x);
}

Rational eval_at_permutation(const StarPolynomial& p, const Permutation& sigma,
                             const OperpChain& m1) {
  const RationalMatrix scalar = m1.char_apply(mu_sigma(inverse(sigma), m1));
  Rational out = 0;
  for (const auto& [w, c] : p.terms()) {
    Rational prod = 1;
    for (const auto& v : w) {
      // Scalar matrix entries are real rationals; the adjoint is trivial.
      prod *= scalar.at(static_cast<std::size_t>(v.i - 1), static_cast<std::size_t>(v.j - 1));
      if (prod == 0) break;
    }
    out += c * prod;
  }
  return out;
}

PermutationTable function_table(const StarPolynomial& p, const OperpChain& m1) {
  const auto perms = all_permutations(m1.size());
  PermutationTable table;
  table.N = m1.size();
  table.values.reserve(perms.size());
  for (const auto& sigma : perms) table.values.push_back(eval_at_permutation(p, sigma, m1));
  return table;
}

PermutationTable function_table(const TensorElement& x, const OperpChain& m1) {
  const auto perms = all_permutations(m1.size());
  PermutationTable table;
  table.N = m1.size();
  table.values.reserve(perms.size());
  for (const auto& sigma : perms) table.values.push_back(eval_at_permutation(x, sigma, m1));
  return table;
}

}  // namespace operp
