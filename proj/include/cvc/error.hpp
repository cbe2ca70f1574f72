#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cvc {

enum class ErrorCode {
  MalformedInput,
  NotPositiveDefinite,
  NotOrthonormal,
  NotUnimodular,
  JacobiViolation,
  DegeneratePlane,
  NotUnit,
  IsotropicPoint,
  NotCvcExtremal,
  DegenerateA0,
  ParameterOutOfRange,
  IsotropicModel,
  EllNonpositive,
  InvalidInitialData,
  NotGeodesicDirection,
  UnsupportedModel,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedInput: return "MALFORMED_INPUT";
    case ErrorCode::NotPositiveDefinite: return "NOT_POSITIVE_DEFINITE";
    case ErrorCode::NotOrthonormal: return "NOT_ORTHONORMAL";
    case ErrorCode::NotUnimodular: return "NOT_UNIMODULAR";
    case ErrorCode::JacobiViolation: return "JACOBI_VIOLATION";
    case ErrorCode::DegeneratePlane: return "DEGENERATE_PLANE";
    case ErrorCode::NotUnit: return "NOT_UNIT";
    case ErrorCode::IsotropicPoint: return "ISOTROPIC_POINT";
    case ErrorCode::NotCvcExtremal: return "NOT_CVC_EXTREMAL";
    case ErrorCode::DegenerateA0: return "DEGENERATE_A0";
    case ErrorCode::ParameterOutOfRange: return "PARAMETER_OUT_OF_RANGE";
    case ErrorCode::IsotropicModel: return "ISOTROPIC_MODEL";
    case ErrorCode::EllNonpositive: return "ELL_NONPOSITIVE";
    case ErrorCode::InvalidInitialData: return "INVALID_INITIAL_DATA";
    case ErrorCode::NotGeodesicDirection: return "NOT_GEODESIC_DIRECTION";
    case ErrorCode::UnsupportedModel: return "UNSUPPORTED_MODEL";
  }
  return "UNKNOWN";
}

/// Exception carrying a machine-readable code; what() is "<CODE>: <detail>".
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace cvc
