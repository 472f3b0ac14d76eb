#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace masure {

enum class ErrorCode {
  NotSquare,
  DiagonalNotTwo,
  PositiveOffDiagonal,
  AsymmetricZero,
  InvalidRealization,
  IndexOutOfRange,
  DimensionMismatch,
  NotARealRoot,
  EmptyInput,
  DegenerateSegment,
  OutOfRange,
  NotOnWall,
  IllegalFold,
  InvalidPath,
  NotInApartment,
  PrecisionExhausted,
  WindowTooSmall,
  InvalidField,
  SingularMatrix,
  NotPiecewiseAffine,
  ParseError,
  ConfigError,
};

std::string_view to_string(ErrorCode code);

/// Single exception type for the toolkit; `code()` is the machine-readable part.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace masure
