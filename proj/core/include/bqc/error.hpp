#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bqc {

enum class ErrorCode {
  InvalidLayout,
  OccupationOutOfRange,
  LengthMismatch,
  ModeOutOfRange,
  DimensionMismatch,
  LayoutMismatch,
  NotHermitian,
  NotUnitary,
  EigenFailure,
  NonFinite,
  ConvergenceFailure,
  InvalidParams,
  NearSingularity,
  UnequalCouplings,
  FreePhaseMismatch,
  TruncationTooSmall,
  NotNormalized,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised when the factorized propagator is requested too close to a pole of
/// tan(sqrt(gamma)/2). Carries the distance to the nearest odd multiple of pi.
class NearSingularityError : public Error {
 public:
  NearSingularityError(double margin, const std::string& what)
      : Error(ErrorCode::NearSingularity, what), margin_(margin) {}

  double margin() const noexcept { return margin_; }

 private:
  double margin_;
};

}  // namespace bqc
