#include "lsurf/error.hpp"

namespace lsurf {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NullDivisor: return "NullDivisor";
    case ErrorCode::GridTooSmall: return "GridTooSmall";
    case ErrorCode::NotUnitSpinor: return "NotUnitSpinor";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::InconsistentInitialData: return "InconsistentInitialData";
    case ErrorCode::ResidualTooLarge: return "ResidualTooLarge";
    case ErrorCode::PathDependence: return "PathDependence";
    case ErrorCode::DegenerateMetric: return "DegenerateMetric";
    case ErrorCode::NullChi1: return "NullChi1";
    case ErrorCode::DetDrift: return "DetDrift";
    case ErrorCode::DegenerateImmersion: return "DegenerateImmersion";
    case ErrorCode::NotSplit: return "NotSplit";
    case ErrorCode::NotUnitDeterminant: return "NotUnitDeterminant";
    case ErrorCode::DegenerateTangent: return "DegenerateTangent";
    case ErrorCode::NullNormalDirection: return "NullNormalDirection";
    case ErrorCode::NotConformal: return "NotConformal";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::MalformedInput: return "MalformedInput";
  }
  return "Unknown";
}

}  // namespace lsurf
