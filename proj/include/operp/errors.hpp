#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace operp {

// Raised when an expansion would exceed a configured cap. Expansions either
// complete exactly or throw; there is no silent truncation.
class budget_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Violated precondition or failed validation (size mismatch, index out of
// range, a character that does not send the matrix to the identity, ...).
class contract_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Malformed textual input: partition grammar, config files, cache files.
class parse_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Default caps. All of them are overridable through RunConfig / function
// arguments; hitting a cap raises budget_error.
inline constexpr std::size_t kDefaultTermBudget = std::size_t{1} << 22;
inline constexpr std::size_t kDefaultBasisCap = 100000;
inline constexpr std::size_t kDefaultCertificateCap = 32;
inline constexpr int kDefaultRepLegCap = 12;
inline constexpr int kDenseNormDimLimit = 256;

}  // namespace operp
