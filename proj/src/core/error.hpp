#ifndef MONFACES_ERROR_HPP
#define MONFACES_ERROR_HPP

#include <stdexcept>
#include <string>

namespace monfaces {

/// Error taxonomy. Validation errors (bad input, mismatched dimensions,
/// invalid maps) are distinguished from budget errors (caps on generator
/// counts, oracle boxes, parallelepiped volumes) because the CLI maps them to
/// different exit codes (2 vs. 3).
enum class ErrorCode {
  parse_error,
  dimension_mismatch,
  invalid_argument,
  invalid_map,
  invalid_prime,
  not_integral,
  containment,
  generator_cap,
  oracle_too_large,
  volume_cap,
  rank_cap,
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::parse_error: return "parse-error";
    case ErrorCode::dimension_mismatch: return "dimension-mismatch";
    case ErrorCode::invalid_argument: return "invalid-argument";
    case ErrorCode::invalid_map: return "invalid-map";
    case ErrorCode::invalid_prime: return "invalid-prime";
    case ErrorCode::not_integral: return "not-integral";
    case ErrorCode::containment: return "containment";
    case ErrorCode::generator_cap: return "generator-cap";
    case ErrorCode::oracle_too_large: return "oracle-too-large";
    case ErrorCode::volume_cap: return "volume-cap";
    case ErrorCode::rank_cap: return "rank-cap";
  }
  return "unknown";
}

inline bool is_budget_error(ErrorCode c) {
  switch (c) {
    case ErrorCode::generator_cap:
    case ErrorCode::oracle_too_large:
    case ErrorCode::volume_cap:
    case ErrorCode::rank_cap: return true;
    default: return false;
  }
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message, std::string witness = "")
      : std::runtime_error(std::move(message)),
        code_(code),
        witness_(std::move(witness)) {}

  ErrorCode code() const { return code_; }

  /// Optional machine-readable detail (a rendered relation, a ray, ...).
  const std::string& witness() const { return witness_; }

 private:
  ErrorCode code_;
  std::string witness_;
};

/// Resource caps threaded through every operation that can blow up
/// combinatorially. The defaults keep everything at desk scale; operations
/// past a cap fail loudly instead of grinding.
struct Caps {
  int max_generators = 24;          // subset enumeration refuses above this
  long long oracle_cell_cap = 1000000;   // lattice points in an oracle box
  long long volume_cap = 1000000;        // parallelepiped enumeration cells
  int ambient_rank_cap = 12;        // cone computations refuse above this
};

}  // namespace monfaces

#endif
