#include "operp/serialize.hpp"

#include <nlohmann/json.hpp>
#include <fstream>

namespace operp {

json rational_to_json(const Rational& r) {
  return json{{"num", numerator(r).str()}, {"den", denominator(r).str()}};
}

Rational rational_from_json(const json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den"))
    throw parse_error("rational must be {num, den}");
  const Int n(j.at("num").get<std::string>());
  const Int d(j.at("den").get<std::string>());
  if (d <= 0) throw parse_error("rational denominator must be positive");
  return Rational(n, d);
}

json tensor_word_to_json(const TensorWord& w) {
  json arr = json::array();
  for (const auto& a : w) arr.push_back(a.str());
  return arr;
}

TensorWord tensor_word_from_json(const json& j) {
  if (!j.is_array()) throw parse_error("tensor word must be an array of word strings");
  TensorWord w;
  w.reserve(j.size());
  for (const auto& s : j) {
    auto parsed = AltWord::parse(s.get<std::string>());
    if (!parsed) throw parse_error("invalid word: " + s.get<std::string>());
    w.push_back(*parsed);
  }
  return w;
}

json tensor_element_to_json(const TensorElement& x) {
  json terms = json::array();
  for (const auto& [w, c] : x.terms())
    terms.push_back(json{{"word", tensor_word_to_json(w)}, {"coeff", rational_to_json(c)}});
  return json{{"legs", x.legs()}, {"terms", std::move(terms)}};
}

TensorElement tensor_element_from_json(const json& j) {
  TensorElement x(j.at("legs").get<int>());
  for (const auto& t : j.at("terms"))
    x.add_term(tensor_word_from_json(t.at("word")), rational_from_json(t.at("coeff")));
  return x;
}

json star_polynomial_to_json(const StarPolynomial& p) {
  json terms = json::array();
  for (const auto& [w, c] : p.terms()) {
    json word = json::array();
    for (const auto& v : w) word.push_back(json::array({v.i, v.j, v.star}));
    terms.push_back(json{{"word", std::move(word)}, {"coeff", rational_to_json(c)}});
  }
  return json{{"size", p.size()}, {"terms", std::move(terms)}};
}

StarPolynomial star_polynomial_from_json(const json& j) {
  StarPolynomial p(j.at("size").get<int>());
  for (const auto& t : j.at("terms")) {
    StarWord w;
    for (const auto& v : t.at("word"))
      w.push_back({v.at(0).get<std::uint16_t>(), v.at(1).get<std::uint16_t>(),
                   v.at(2).get<bool>()});
    p.add_term(w, rational_from_json(t.at("coeff")));
  }
  return p;
}

json permutation_to_json(const Permutation& sigma) {
  json arr = json::array();
  for (int v : sigma) arr.push_back(v + 1);
  return arr;
}

Permutation permutation_from_json(const json& j) {
  Permutation sigma;
  for (const auto& v : j) sigma.push_back(v.get<int>() - 1);
  if (!is_permutation(sigma)) throw parse_error("not a permutation");
  return sigma;
}

json matrix_cache_to_json(const MatrixCache& c) {
  json j{{"version", c.version}, {"N", c.N},      {"track", c.track},
         {"L", c.L},             {"n", c.n},      {"leg_count", c.leg_count}};
  if (c.lazy) {
    json meta = json::array();
    for (const auto& f : c.factor_metadata)
      meta.push_back(json{{"round", f.round}, {"a", f.a}, {"b", f.b}, {"c", f.c}, {"d", f.d}});
    j["factor_metadata"] = std::move(meta);
    j["entries"] = "lazy";
  } else {
    json entries = json::array();
    for (int i = 0; i < c.matrix.size(); ++i)
      for (int k = 0; k < c.matrix.size(); ++k)
        entries.push_back(tensor_element_to_json(c.matrix.at(i, k)));
    j["entries"] = std::move(entries);
  }
  return j;
}

MatrixCache matrix_cache_from_json(const json& j) {
  MatrixCache c;
  c.version = j.at("version").get<int>();
  if (c.version != kCacheVersion)
    throw parse_error("cache version " + std::to_string(c.version) +
                      " does not match expected " + std::to_string(kCacheVersion));
  c.N = j.at("N").get<int>();
  c.track = j.at("track").get<std::string>();
  c.L = j.at("L").get<int>();
  c.n = j.at("n").get<int>();
  c.leg_count = j.at("leg_count").get<int>();
  if (j.at("entries").is_string()) {
    if (j.at("entries").get<std::string>() != "lazy")
      throw parse_error("entries must be an array or \"lazy\"");
    c.lazy = true;
    for (const auto& f : j.at("factor_metadata")) {
      ChainFactor factor;
      factor.round = f.at("round").get<int>();
      factor.a = f.at("a").get<int>();
      factor.b = f.at("b").get<int>();
      factor.c = f.at("c").get<int>();
      factor.d = f.at("d").get<int>();
      factor.matrix = build_R_abcd(c.N, factor.a, factor.b, factor.c, factor.d);
      c.factor_metadata.push_back(std::move(factor));
    }
  } else {
    c.lazy = false;
    const auto& entries = j.at("entries");
    if (entries.size() != static_cast<std::size_t>(c.N) * static_cast<std::size_t>(c.N))
      throw parse_error("entry count does not match N*N");
    c.matrix = MagicMatrix(c.N, c.leg_count);
    std::size_t idx = 0;
    for (int i = 0; i < c.N; ++i)
      for (int k = 0; k < c.N; ++k) c.matrix.at(i, k) = tensor_element_from_json(entries[idx++]);
  }
  return c;
}

void save_json(const json& j, const std::filesystem::path& path) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw parse_error("cannot open " + path.string() + " for writing");
  out << j.dump(2) << "\n";
}

json load_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open " + path.string());
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw parse_error("invalid JSON in " + path.string() + ": " + e.what());
  }
  return j;
}

MatrixCache make_rr_cache(int n, const MagicMatrix& m) {
  MatrixCache c;
  c.N = m.size();
  c.track = "rr";
  c.L = 0;
  c.n = n;
  c.leg_count = m.legs();
  c.lazy = false;
  c.matrix = m;
  return c;
}

MatrixCache make_general_cache(int N, int L, int n, const OperpChain& chain) {
  MatrixCache c;
  c.N = N;
  c.track = "general";
  c.L = L;
  c.n = n;
  c.leg_count = chain.legs();
  c.lazy = true;
  c.factor_metadata = chain.factors();
  return c;
}

OperpChain chain_from_cache(const MatrixCache& c) {
  if (!c.lazy) throw contract_error("cache does not hold a chain");
  const int pairs = c.N * (c.N - 1) / 2;
  OperpChain chain(c.N, c.L * pairs);
  for (const auto& f : c.factor_metadata) chain.append(f);
  if (chain.legs() != c.leg_count)
    throw parse_error("factor metadata does not match leg_count");
  return chain;
}

json norm_report(const std::string& element_id, int legs, const NormEstimate& e,
                 double wall_ms) {
  return json{{"element_id", element_id},
              {"k", legs},
              {"grid", e.grid},
              {"refine", e.evaluations},
              {"value", e.value},
              {"argmax_theta", e.argmax.theta},
              {"wall_ms", wall_ms}};
}

json separation_report(const SeparationResult& r, const std::string& track) {
  json j{{"N", r.N}, {"track", track}, {"L", r.L}, {"is_identity", r.is_identity}};
  if (!r.is_identity) j["first_violation"] = r.first_violation;
  return j;
}

json relation_report(const RelationReport& r) {
  json j{{"partition", r.partition}, {"N", r.N}, {"holds", r.holds}};
  if (r.first_violation) {
    json terms = json::array();
    for (const auto& [w, c] : r.first_violation->residual.terms())
      terms.push_back(json{{"word", tensor_word_to_json(w)}, {"coeff", rational_to_json(c)}});
    j["first_violation"] = json{{"gamma", r.first_violation->gamma},
                                {"gamma_prime", r.first_violation->gamma_prime},
                                {"residual_terms", std::move(terms)}};
  }
  return j;
}

json certificate_to_json(const KernelCertificate& c) {
  return json{{"N", c.N},
              {"track", c.track},
              {"n", c.n},
              {"degree", c.degree},
              {"polynomial", star_polynomial_to_json(c.polynomial)},
              {"witness", tensor_word_to_json(c.witness)},
              {"witness_coeff", rational_to_json(c.witness_coeff)}};
}

KernelCertificate certificate_from_json(const json& j) {
  KernelCertificate c;
  c.N = j.at("N").get<int>();
  c.track = j.at("track").get<std::string>();
  c.n = j.at("n").get<int>();
  c.degree = j.at("degree").get<int>();
  c.polynomial = star_polynomial_from_json(j.at("polynomial"));
  c.witness = tensor_word_from_json(j.at("witness"));
  c.witness_coeff = rational_from_json(j.at("witness_coeff"));
  return c;
}

json kernel_result_to_json(const KernelSearchResult& r) {
  json certs = json::array();
  for (const auto& c : r.certificates) certs.push_back(certificate_to_json(c));
  return json{{"N", r.N},
              {"track", r.track},
              {"n", r.n},
              {"degree", r.degree},
              {"basis_size", r.basis_size},
              {"rank_n", r.rank_n},
              {"nullity_n", r.nullity_n},
              {"nullity_next", r.nullity_next},
              {"certificate_count", r.certificate_count},
              {"truncated", r.truncated},
              {"certificates", std::move(certs)}};
}

}  // namespace operp
