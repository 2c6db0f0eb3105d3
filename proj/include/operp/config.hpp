#pragma once

#include <cstddef>
#include <filesystem>
#include <string>

#include "operp/errors.hpp"

namespace operp {

// Validated run configuration shared by the commands; every report echoes
// it for reproducibility.
struct RunConfig {
  int N = 4;
  std::string track = "rr";  // "rr" | "general"
  int L = -1;                // general-track rounds; -1 resolves to N-1
  int n = 1;                 // tower level
  int n_max = 2;             // upper level for sequences
  int degree = 2;            // polynomial degree bound
  int grid = 0;              // points per leg; 0 = default by leg count
  std::size_t refine = 2000;
  std::size_t term_budget = kDefaultTermBudget;
  std::size_t basis_cap = kDefaultBasisCap;
  std::size_t certificate_cap = kDefaultCertificateCap;
  int rep_leg_cap = kDefaultRepLegCap;
  int count = 20;            // sample count for randomized checks
  std::uint64_t seed = 1;
  int threads = 0;           // 0 = hardware default
  std::filesystem::path cache_dir = "operp-cache";
  std::filesystem::path out_dir = "operp-out";

  // Throws contract_error on invalid combinations.
  void validate() const;

  int resolved_L() const { return L < 0 ? N - 1 : L; }
};

}  // namespace operp
