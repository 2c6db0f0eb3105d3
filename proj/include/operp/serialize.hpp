#pragma once

#include <nlohmann/json_fwd.hpp>
#include <filesystem>
#include <string>

#include "operp/experiments.hpp"
#include "operp/magic.hpp"
#include "operp/morphisms.hpp"
#include "operp/numerics.hpp"
#include "operp/partitions.hpp"

namespace operp {

using json = nlohmann::json;

inline constexpr int kCacheVersion = 1;

// Exact values serialize as canonical decimal digit strings:
// {"num": "...", "den": "..."} with den > 0 and gcd(num, den) = 1.
json rational_to_json(const Rational& r);
Rational rational_from_json(const json& j);

// Words: "1" or the letter string; tensor words: arrays of word strings.
json tensor_word_to_json(const TensorWord& w);
TensorWord tensor_word_from_json(const json& j);

json tensor_element_to_json(const TensorElement& x);
TensorElement tensor_element_from_json(const json& j);

json star_polynomial_to_json(const StarPolynomial& p);
StarPolynomial star_polynomial_from_json(const json& j);

// Permutations serialize 1-based one-line: [sigma(1), ..., sigma(N)].
json permutation_to_json(const Permutation& sigma);
Permutation permutation_from_json(const json& j);

// Versioned matrix cache. Expanded tracks store every entry; chain-backed
// matrices store the factor metadata and "lazy" entries. A version mismatch
// is rejected, never reinterpreted.
struct MatrixCache {
  int version = kCacheVersion;
  int N = 0;
  std::string track;  // "rr" | "general"
  int L = 0;          // general track rounds; 0 on the rr track
  int n = 0;          // tower level
  int leg_count = 0;
  bool lazy = false;
  MagicMatrix matrix;           // when !lazy
  std::vector<ChainFactor> factor_metadata;  // when lazy (matrices rebuilt on load)
};

json matrix_cache_to_json(const MatrixCache& c);
MatrixCache matrix_cache_from_json(const json& j);

void save_json(const json& j, const std::filesystem::path& path);
json load_json(const std::filesystem::path& path);

MatrixCache make_rr_cache(int n, const MagicMatrix& m);
MatrixCache make_general_cache(int N, int L, int n, const OperpChain& chain);
OperpChain chain_from_cache(const MatrixCache& c);

// Report payloads of the verification commands.
json norm_report(const std::string& element_id, int legs, const NormEstimate& e,
                 double wall_ms);
json separation_report(const SeparationResult& r, const std::string& track);
json relation_report(const RelationReport& r);

json certificate_to_json(const KernelCertificate& c);
KernelCertificate certificate_from_json(const json& j);
json kernel_result_to_json(const KernelSearchResult& r);

}  // namespace operp
