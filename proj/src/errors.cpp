#include "chromhom/errors.hpp"

namespace chromhom {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ParseError: return "parse error";
    case ErrorCode::InvalidArgument: return "invalid argument";
    case ErrorCode::NotInSpan: return "not in span";
    case ErrorCode::NonIntegerSolution: return "non-integer solution";
    case ErrorCode::ComplexNotExact: return "complex not exact";
    case ErrorCode::DimensionMismatch: return "dimension mismatch";
    case ErrorCode::NotASubgraph: return "not a subgraph";
    case ErrorCode::PlanarInput: return "planar input";
    case ErrorCode::LiftFailed: return "lift failed";
    case ErrorCode::SizeBoundExceeded: return "size bound exceeded";
    case ErrorCode::InvariantViolation: return "invariant violation";
  }
  return "unknown error";
}

}  // namespace chromhom
