#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace legfill {

enum class ErrorCode {
  Parse,
  GeneratorOutOfRange,
  SweepViolation,
  MalformedDiagram,
  ZeroPolynomial,
  IndexOutOfRange,
  PatternMismatch,
  NotFillableByThisMethod,
  Internal,
  UnknownLabel,
  NotAKnot,
};

const char* to_string(ErrorCode code) noexcept;

// Every library failure is reported through this type. `position` carries the
// offending event, letter, line or step index when one exists.
class Error : public std::runtime_error {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  Error(ErrorCode code, const std::string& what, std::size_t position = npos);

  ErrorCode code() const noexcept { return code_; }
  std::size_t position() const noexcept { return position_; }
  bool has_position() const noexcept { return position_ != npos; }

  // True for errors caused by bad user input rather than a failed computation.
  bool is_input_error() const noexcept;

 private:
  ErrorCode code_;
  std::size_t position_;
};

}  // namespace legfill
