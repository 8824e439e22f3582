#pragma once

#include <stdexcept>
#include <string>

namespace fxl {

enum class ErrorCode {
  invalid_argument,
  io,
  parse,
  domain_escape,
  invalid_constants,
  non_finite_value,
  missing_fixed_point,
  schedule_floor_violated,
  scheme_mismatch,
  malformed_witness,
  unknown_family,
  fixed_point_contradiction,
};

/// Library-wide exception carrying a stable code for the C boundary.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

inline const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::invalid_argument: return "invalid_argument";
    case ErrorCode::io: return "io";
    case ErrorCode::parse: return "parse";
    case ErrorCode::domain_escape: return "domain_escape";
    case ErrorCode::invalid_constants: return "invalid_constants";
    case ErrorCode::non_finite_value: return "non_finite_value";
    case ErrorCode::missing_fixed_point: return "missing_fixed_point";
    case ErrorCode::schedule_floor_violated: return "schedule_floor_violated";
    case ErrorCode::scheme_mismatch: return "scheme_mismatch";
    case ErrorCode::malformed_witness: return "malformed_witness";
    case ErrorCode::unknown_family: return "unknown_family";
    case ErrorCode::fixed_point_contradiction: return "fixed_point_contradiction";
  }
  return "unknown";
}

}  // namespace fxl
