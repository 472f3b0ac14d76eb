#include "masure/error.hpp"

namespace masure {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::DiagonalNotTwo: return "DiagonalNotTwo";
    case ErrorCode::PositiveOffDiagonal: return "PositiveOffDiagonal";
    case ErrorCode::AsymmetricZero: return "AsymmetricZero";
    case ErrorCode::InvalidRealization: return "InvalidRealization";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotARealRoot: return "NotARealRoot";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::DegenerateSegment: return "DegenerateSegment";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::NotOnWall: return "NotOnWall";
    case ErrorCode::IllegalFold: return "IllegalFold";
    case ErrorCode::InvalidPath: return "InvalidPath";
    case ErrorCode::NotInApartment: return "NotInApartment";
    case ErrorCode::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorCode::WindowTooSmall: return "WindowTooSmall";
    case ErrorCode::InvalidField: return "InvalidField";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::NotPiecewiseAffine: return "NotPiecewiseAffine";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ConfigError: return "ConfigError";
  }
  return "Unknown";
}

}  // namespace masure
