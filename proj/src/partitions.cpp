#include "operp/partitions.hpp"

#include <algorithm>
#include <cctype>

namespace operp {

void TwoColouredPartition::validate() const {
  const int n = points();
  std::vector<int> seen(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& block : blocks) {
    if (block.empty()) throw contract_error("empty block");
    for (int pt : block) {
      if (pt < 1 || pt > n)
        throw contract_error("block point " + std::to_string(pt) + " out of range 1.." +
                             std::to_string(n));
      if (++seen[static_cast<std::size_t>(pt)] > 1)
        throw contract_error("point " + std::to_string(pt) + " appears in two blocks");
    }
  }
  for (int pt = 1; pt <= n; ++pt)
    if (!seen[static_cast<std::size_t>(pt)])
      throw contract_error("point " + std::to_string(pt) + " is not covered by any block");
}

void TwoColouredPartition::canonicalize() {
  for (auto& block : blocks) std::sort(block.begin(), block.end());
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
}

std::string TwoColouredPartition::str() const {
  auto colors = [](const std::vector<PointColor>& cs) {
    std::string s;
    for (std::size_t i = 0; i < cs.size(); ++i) {
      if (i) s += " ";
      s += cs[i] == PointColor::white ? "w" : "b";
    }
    return s;
  };
  std::string s = colors(upper_colors) + " ; " + colors(lower_colors) + " ; ";
  for (const auto& block : blocks) {
    s += "(";
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (i) s += " ";
      s += std::to_string(block[i]);
    }
    s += ")";
  }
  return s;
}

namespace {

std::vector<PointColor> parse_colors(std::string_view text, std::size_t offset) {
  std::vector<PointColor> out;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == 'w')
      out.push_back(PointColor::white);
    else if (c == 'b')
      out.push_back(PointColor::black);
    else
      throw parse_error("expected colour letter 'w' or 'b' at position " +
                        std::to_string(offset + i));
  }
  return out;
}

}  // namespace

TwoColouredPartition parse_partition(std::string_view text) {
  const std::size_t first = text.find(';');
  if (first == std::string_view::npos)
    throw parse_error("expected `upper ; lower ; blocks`: no ';' found");
  const std::size_t second = text.find(';', first + 1);
  if (second == std::string_view::npos)
    throw parse_error("expected `upper ; lower ; blocks`: only one ';' found");

  TwoColouredPartition p;
  p.upper_colors = parse_colors(text.substr(0, first), 0);
  p.lower_colors = parse_colors(text.substr(first + 1, second - first - 1), first + 1);

  std::size_t i = second + 1;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(')
      throw parse_error("expected '(' at position " + std::to_string(i));
    ++i;
    std::vector<int> block;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw parse_error("expected point number at position " + std::to_string(i));
      int v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        v = v * 10 + (text[i++] - '0');
      block.push_back(v);
      skip_ws();
    }
    if (i >= text.size())
      throw parse_error("unterminated block: expected ')'");
    ++i;  // ')'
    if (block.empty()) throw parse_error("empty block before position " + std::to_string(i));
    p.blocks.push_back(std::move(block));
    skip_ws();
  }
  p.canonicalize();
  p.validate();
  return p;
}

int delta(const TwoColouredPartition& p, const std::vector<int>& upper_labels,
          const std::vector<int>& lower_labels) {
  if (upper_labels.size() != static_cast<std::size_t>(p.upper()) ||
      lower_labels.size() != static_cast<std::size_t>(p.lower()))
    throw contract_error("label length does not match the partition");
  auto label_of = [&](int pt) {
    return pt <= p.upper() ? upper_labels[static_cast<std::size_t>(pt - 1)]
                           : lower_labels[static_cast<std::size_t>(pt - p.upper() - 1)];
  };
  for (const auto& block : p.blocks) {
    const int v = label_of(block.front());
    for (int pt : block)
      if (label_of(pt) != v) return 0;
  }
  return 1;
}

namespace {

const TensorElement& entry_power(const MagicMatrix& m, int row, int col,
                                 PointColor color, ColorConvention cc,
                                 TensorElement& scratch) {
  const TensorElement& e = m.at(row - 1, col - 1);
  const bool adjoint = (cc == ColorConvention::white_plain_black_adjoint)
                           ? color == PointColor::black
                           : color == PointColor::white;
  if (!adjoint) return e;
  scratch = e.adjoint();
  return scratch;
}

// Odometer over [N]^len, 1-based labels, lexicographic.
bool advance(std::vector<int>& tuple, int N) {
  for (std::size_t i = tuple.size(); i-- > 0;) {
    if (tuple[i] < N) {
      ++tuple[i];
      std::fill(tuple.begin() + static_cast<std::ptrdiff_t>(i) + 1, tuple.end(), 1);
      return true;
    }
  }
  return false;
}

}  // namespace

TensorElement relation_residual(const TwoColouredPartition& p, const MagicMatrix& m,
                                const std::vector<int>& gamma,
                                const std::vector<int>& gamma_prime,
                                ColorConvention cc, std::size_t term_budget) {
  const int N = m.size();
  const int k = p.upper(), l = p.lower();
  if (gamma.size() != static_cast<std::size_t>(k) ||
      gamma_prime.size() != static_cast<std::size_t>(l))
    throw contract_error("free index length does not match the partition");

  TensorElement lhs(m.legs());
  {
    std::vector<int> t(static_cast<std::size_t>(k), 1);
    do {
      if (delta(p, t, gamma_prime)) {
        TensorElement prod = TensorElement::unit(m.legs());
        TensorElement scratch;
        for (int i = 0; i < k && !prod.is_zero(); ++i)
          prod = mul_budgeted(
              prod,
              entry_power(m, t[static_cast<std::size_t>(i)], gamma[static_cast<std::size_t>(i)],
                          p.upper_colors[static_cast<std::size_t>(i)], cc, scratch),
              term_budget);
        lhs += prod;
      }
    } while (advance(t, N));
  }

  TensorElement rhs(m.legs());
  {
    std::vector<int> t(static_cast<std::size_t>(l), 1);
    do {
      if (delta(p, gamma, t)) {
        TensorElement prod = TensorElement::unit(m.legs());
        TensorElement scratch;
        for (int i = 0; i < l && !prod.is_zero(); ++i)
          prod = mul_budgeted(
              prod,
              entry_power(m, gamma_prime[static_cast<std::size_t>(i)],
                          t[static_cast<std::size_t>(i)],
                          p.lower_colors[static_cast<std::size_t>(i)], cc, scratch),
              term_budget);
        rhs += prod;
      }
    } while (advance(t, N));
  }

  return lhs - rhs;
}

namespace {

std::vector<int> nth_tuple(std::size_t idx, int len, int N) {
  std::vector<int> t(static_cast<std::size_t>(len), 1);
  for (int i = len - 1; i >= 0; --i) {
    t[static_cast<std::size_t>(i)] = static_cast<int>(idx % static_cast<std::size_t>(N)) + 1;
    idx /= static_cast<std::size_t>(N);
  }
  return t;
}

std::size_t pow_size(int N, int len) {
  std::size_t out = 1;
  for (int i = 0; i < len; ++i) out *= static_cast<std::size_t>(N);
  return out;
}

}  // namespace

std::vector<TensorElement> relation_residuals(const TwoColouredPartition& p,
                                              const MagicMatrix& m, ColorConvention cc,
                                              std::size_t term_budget, Exec exec) {
  p.validate();
  const int N = m.size();
  const std::size_t n_gamma = pow_size(N, p.upper());
  const std::size_t n_gamma_prime = pow_size(N, p.lower());
  const std::size_t total = n_gamma * n_gamma_prime;
  std::vector<TensorElement> out(total);
  indexed_loop(total, exec, [&](std::size_t idx) {
    const std::vector<int> gamma = nth_tuple(idx / n_gamma_prime, p.upper(), N);
    const std::vector<int> gamma_prime = nth_tuple(idx % n_gamma_prime, p.lower(), N);
    out[idx] = relation_residual(p, m, gamma, gamma_prime, cc, term_budget);
  });
  return out;
}

RelationReport check_relations(const TwoColouredPartition& p, const MagicMatrix& m,
                               ColorConvention cc, std::size_t term_budget, Exec exec) {
  RelationReport report;
  report.partition = p.name.empty() ? p.str() : p.name;
  report.N = m.size();
  const auto residuals = relation_residuals(p, m, cc, term_budget, exec);
  const std::size_t n_gamma_prime = pow_size(m.size(), p.lower());
  for (std::size_t i = 0; i < residuals.size(); ++i) {
    if (!residuals[i].is_zero()) {
      report.holds = false;
      report.first_violation =
          ResidualViolation{nth_tuple(i / n_gamma_prime, p.upper(), m.size()),
                            nth_tuple(i % n_gamma_prime, p.lower(), m.size()), residuals[i]};
      return report;
    }
  }
  report.holds = true;
  return report;
}

RelationSet preset_SNplus(int N) {
  if (N < 1) throw contract_error("preset requires N >= 1");
  RelationSet set;
  set.name = "snplus";
  set.N = N;
  auto add = [&](const char* name, const char* text) {
    TwoColouredPartition p = parse_partition(text);
    p.name = name;
    set.partitions.push_back(std::move(p));
  };
  add("unitarity-lower-wb", "; w b ; (1 2)");
  add("unitarity-lower-bw", "; b w ; (1 2)");
  add("unitarity-upper-wb", "w b ; ; (1 2)");
  add("unitarity-upper-bw", "b w ; ; (1 2)");
  add("singleton-w", "; w ; (1)");
  add("fourblock-wwww", "; w w w w ; (1 2 3 4)");
  return set;
}

PropagationReport propagation_check(const TwoColouredPartition& p, const MagicMatrix& a,
                                    const MagicMatrix& b, ColorConvention cc,
                                    std::size_t term_budget, Exec exec) {
  PropagationReport report;
  const RelationReport on_a = check_relations(p, a, cc, term_budget, exec);
  const RelationReport on_b = check_relations(p, b, cc, term_budget, exec);
  if (!on_a.holds || !on_b.holds) {
    report.applicable = false;
    report.detail = "not applicable: the relation fails on an input factor";
    return report;
  }
  report.applicable = true;
  const RelationReport on_product =
      check_relations(p, operp_product(a, b, term_budget, exec), cc, term_budget, exec);
  report.holds = on_product.holds;
  if (!on_product.holds && on_product.first_violation) {
    std::string g, gp;
    for (int v : on_product.first_violation->gamma) g += std::to_string(v) + " ";
    for (int v : on_product.first_violation->gamma_prime) gp += std::to_string(v) + " ";
    report.detail = "first failing pair: gamma = [" + g + "], gamma' = [" + gp + "]";
  }
  return report;
}

}  // namespace operp
