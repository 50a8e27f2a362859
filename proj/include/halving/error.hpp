#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace halving {

enum class ErrorCode {
  odd_n,
  invalid_n,
  general_position_violation,
  k_out_of_range,
  zero_leading_coefficient,
  rejection_budget_exhausted,
  malformed_file,
  even_degree_found,
  invalid_argument,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::odd_n: return "odd-n";
    case ErrorCode::invalid_n: return "invalid-n";
    case ErrorCode::general_position_violation: return "general-position-violation";
    case ErrorCode::k_out_of_range: return "k-out-of-range";
    case ErrorCode::zero_leading_coefficient: return "zero-leading-coefficient";
    case ErrorCode::rejection_budget_exhausted: return "rejection-budget-exhausted";
    case ErrorCode::malformed_file: return "malformed-file";
    case ErrorCode::even_degree_found: return "even-degree-found";
    case ErrorCode::invalid_argument: return "invalid-argument";
  }
  return "unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace halving
