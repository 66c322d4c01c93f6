#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lsurf {

enum class ErrorCode {
  NullDivisor,
  GridTooSmall,
  NotUnitSpinor,
  NotHermitian,
  InconsistentInitialData,
  ResidualTooLarge,
  PathDependence,
  DegenerateMetric,
  NullChi1,
  DetDrift,
  DegenerateImmersion,
  NotSplit,
  NotUnitDeterminant,
  DegenerateTangent,
  NullNormalDirection,
  NotConformal,
  InvalidArgument,
  ParseError,
  MalformedInput,
};

std::string_view error_name(ErrorCode code);

// Recoverable failure carrying a machine-readable code; callers branch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace lsurf
