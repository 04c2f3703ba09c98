#include "legfill/error.hpp"

namespace legfill {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::Parse: return "ParseError";
    case ErrorCode::GeneratorOutOfRange: return "GeneratorOutOfRange";
    case ErrorCode::SweepViolation: return "SweepViolation";
    case ErrorCode::MalformedDiagram: return "MalformedDiagram";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::PatternMismatch: return "PatternMismatch";
    case ErrorCode::NotFillableByThisMethod: return "NotFillableByThisMethod";
    case ErrorCode::Internal: return "InternalError";
    case ErrorCode::UnknownLabel: return "UnknownLabel";
    case ErrorCode::NotAKnot: return "NotAKnot";
  }
  return "UnknownError";
}

Error::Error(ErrorCode code, const std::string& what, std::size_t position)
    : std::runtime_error(std::string(to_string(code)) + ": " + what),
      code_(code),
      position_(position) {}

bool Error::is_input_error() const noexcept {
  switch (code_) {
    case ErrorCode::Parse:
    case ErrorCode::GeneratorOutOfRange:
    case ErrorCode::SweepViolation:
    case ErrorCode::MalformedDiagram:
    case ErrorCode::IndexOutOfRange:
    case ErrorCode::UnknownLabel:
      return true;
    default:
      return false;
  }
}

}  // namespace legfill
