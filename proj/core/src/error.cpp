#include "bqc/error.hpp"

namespace bqc {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidLayout: return "InvalidLayout";
    case ErrorCode::OccupationOutOfRange: return "OccupationOutOfRange";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::ModeOutOfRange: return "ModeOutOfRange";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::LayoutMismatch: return "LayoutMismatch";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NotUnitary: return "NotUnitary";
    case ErrorCode::EigenFailure: return "EigenFailure";
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::NearSingularity: return "NearSingularity";
    case ErrorCode::UnequalCouplings: return "UnequalCouplings";
    case ErrorCode::FreePhaseMismatch: return "FreePhaseMismatch";
    case ErrorCode::TruncationTooSmall: return "TruncationTooSmall";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace bqc
