#pragma once

#include <stdexcept>
#include <string>

namespace chromhom {

enum class ErrorCode {
  ParseError,
  InvalidArgument,
  NotInSpan,
  NonIntegerSolution,
  ComplexNotExact,
  DimensionMismatch,
  NotASubgraph,
  PlanarInput,
  LiftFailed,
  SizeBoundExceeded,
  InvariantViolation,
};

const char* to_string(ErrorCode code) noexcept;

/// Every failure inside the library is reported as an Error carrying a code;
/// the C API maps codes onto status values.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace chromhom
