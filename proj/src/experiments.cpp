#include "operp/experiments.hpp"

#include <algorithm>
#include <map>

namespace operp {

MonomialBasis monomial_basis(int N, int degree, bool include_adjoints, std::size_t cap) {
  if (degree < 0) throw contract_error("degree must be >= 0");
  MonomialBasis basis;
  basis.N = N;
  basis.degree = degree;
  basis.adjoints = include_adjoints;

  std::vector<StarVariable> letters;
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j) {
      letters.push_back({static_cast<std::uint16_t>(i), static_cast<std::uint16_t>(j), false});
      if (include_adjoints)
        letters.push_back({static_cast<std::uint16_t>(i), static_cast<std::uint16_t>(j), true});
    }
  std::sort(letters.begin(), letters.end());

  basis.words.push_back({});
  std::vector<StarWord> current{{}};
  for (int d = 1; d <= degree; ++d) {
    std::vector<StarWord> next;
    next.reserve(current.size() * letters.size());
    for (const auto& w : current) {
      for (const auto& v : letters) {
        StarWord longer = w;
        longer.push_back(v);
        next.push_back(std::move(longer));
      }
    }
    for (const auto& w : next) {
      basis.words.push_back(w);
      if (basis.words.size() > cap)
        throw budget_error("monomial basis exceeds cap of " + std::to_string(cap));
    }
    current = std::move(next);
  }
  return basis;
}

EvaluationMatrix evaluation_matrix(const MagicMatrix& m, const MonomialBasis& basis,
                                   std::size_t term_budget, Exec exec) {
  if (basis.N != m.size())
    throw contract_error("basis size does not match matrix size");
  const std::size_t cols = basis.words.size();
  std::vector<TensorElement> images(cols);
  indexed_loop(cols, exec, [&](std::size_t j) {
    StarPolynomial p(basis.N);
    p.add_term(basis.words[j], 1);
    images[j] = poly_eval(p, m, term_budget);
  });

  // Canonical row order: the sorted union of all tensor words that occur.
  std::map<TensorWord, std::size_t> row_index;
  for (const auto& img : images)
    for (const auto& [w, c] : img.terms()) row_index.emplace(w, 0);
  EvaluationMatrix out;
  out.cols = cols;
  out.row_words.reserve(row_index.size());
  for (auto& [w, idx] : row_index) {
    idx = out.row_words.size();
    out.row_words.push_back(w);
  }
  out.columns.resize(cols);
  for (std::size_t j = 0; j < cols; ++j) {
    auto& col = out.columns[j];
    col.reserve(images[j].term_count());
    for (const auto& [w, c] : images[j].terms()) col.emplace_back(row_index.at(w), c);
    std::sort(col.begin(), col.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
  }
  return out;
}

namespace {

Int lcm_int(const Int& a, const Int& b) {
  if (a == 0 || b == 0) return 0;
  return a / boost::multiprecision::gcd(a, b) * b;
}

}  // namespace

NullspaceResult nullspace(const EvaluationMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols;

  // Integer matrix after clearing row denominators (row scaling does not
  // change the kernel).
  std::vector<std::vector<Int>> a(rows, std::vector<Int>(cols, 0));
  std::vector<Int> row_scale(rows, 1);
  for (std::size_t j = 0; j < cols; ++j)
    for (const auto& [r, c] : m.columns[j]) row_scale[r] = lcm_int(row_scale[r], denominator(c));
  for (std::size_t j = 0; j < cols; ++j)
    for (const auto& [r, c] : m.columns[j])
      a[r][j] = numerator(c) * (row_scale[r] / denominator(c));

  // Fraction-free forward elimination: entries stay integers, every division
  // below is exact.
  std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, col)
  std::vector<bool> pivot_col(cols, false);
  Int prev = 1;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t pr = row;
    while (pr < rows && a[pr][col] == 0) ++pr;
    if (pr == rows) continue;
    std::swap(a[row], a[pr]);
    const Int pivot = a[row][col];
    for (std::size_t i = row + 1; i < rows; ++i) {
      // The division by the previous pivot is exact and must be applied to
      // every row below, also where the eliminated entry is already zero.
      const Int factor = a[i][col];
      for (std::size_t j2 = col + 1; j2 < cols; ++j2)
        a[i][j2] = (pivot * a[i][j2] - factor * a[row][j2]) / prev;
      a[i][col] = 0;
    }
    prev = pivot;
    pivots.emplace_back(row, col);
    pivot_col[col] = true;
    ++row;
  }

  NullspaceResult result;
  result.rank = pivots.size();
  for (std::size_t free_col = 0; free_col < cols; ++free_col) {
    if (pivot_col[free_col]) continue;
    std::vector<Rational> x(cols, 0);
    x[free_col] = 1;
    for (std::size_t p = pivots.size(); p-- > 0;) {
      const auto [pr2, pc] = pivots[p];
      if (pc > free_col) continue;
      Rational acc = 0;
      for (std::size_t j2 = pc + 1; j2 <= free_col; ++j2) {
        if (x[j2] == 0) continue;
        acc += Rational(a[pr2][j2]) * x[j2];
      }
      x[pc] = -acc / Rational(a[pr2][pc]);
    }
    // Primitive integer form, positive leading entry.
    Int scale = 1;
    for (const auto& v : x) scale = lcm_int(scale, denominator(v));
    Int g = 0;
    for (auto& v : x) {
      v *= Rational(scale);
      g = boost::multiprecision::gcd(g, numerator(v));
    }
    if (g > 1)
      for (auto& v : x) v /= Rational(g);
    for (const auto& v : x) {
      if (v == 0) continue;
      if (v < 0)
        for (auto& u : x) u = -u;
      break;
    }
    result.basis.push_back(std::move(x));
  }
  return result;
}

std::vector<Rational> apply_columns(const EvaluationMatrix& m,
                                    const std::vector<Rational>& coeffs) {
  if (coeffs.size() != m.cols)
    throw contract_error("coefficient vector length does not match column count");
  std::vector<Rational> out(m.rows(), 0);
  for (std::size_t j = 0; j < m.cols; ++j) {
    if (coeffs[j] == 0) continue;
    for (const auto& [r, c] : m.columns[j]) out[r] += coeffs[j] * c;
  }
  return out;
}

StarPolynomial polynomial_from_vector(const MonomialBasis& basis,
                                      const std::vector<Rational>& coeffs) {
  StarPolynomial p(basis.N);
  for (std::size_t j = 0; j < coeffs.size(); ++j)
    if (coeffs[j] != 0) p.add_term(basis.words[j], coeffs[j]);
  return p;
}

KernelSearchResult kernel_search(const MagicMatrix& level_n, const MagicMatrix& level_next,
                                 int N, const std::string& track, int n, int degree,
                                 std::size_t basis_cap, std::size_t term_budget,
                                 std::size_t certificate_cap, Exec exec) {
  KernelSearchResult result;
  result.N = N;
  result.track = track;
  result.n = n;
  result.degree = degree;

  const MonomialBasis basis = monomial_basis(N, degree, false, basis_cap);
  result.basis_size = basis.words.size();

  const EvaluationMatrix at_n = evaluation_matrix(level_n, basis, term_budget, exec);
  const EvaluationMatrix at_next = evaluation_matrix(level_next, basis, term_budget, exec);

  const NullspaceResult kernel_n = nullspace(at_n);
  result.rank_n = kernel_n.rank;
  result.nullity_n = kernel_n.basis.size();
  result.nullity_next = nullspace(at_next).basis.size();

  for (const auto& vec : kernel_n.basis) {
    const std::vector<Rational> image = apply_columns(at_next, vec);
    std::size_t witness_row = image.size();
    for (std::size_t r = 0; r < image.size(); ++r) {
      if (image[r] != 0) {
        witness_row = r;
        break;
      }
    }
    if (witness_row == image.size()) continue;  // vanishes one level up as well
    ++result.certificate_count;
    if (result.certificates.size() >= certificate_cap) {
      result.truncated = true;
      continue;
    }
    KernelCertificate cert;
    cert.N = N;
    cert.track = track;
    cert.n = n;
    cert.degree = degree;
    cert.polynomial = polynomial_from_vector(basis, vec);
    cert.witness = at_next.row_words[witness_row];
    cert.witness_coeff = image[witness_row];
    result.certificates.push_back(std::move(cert));
  }
  return result;
}

}  // namespace operp
