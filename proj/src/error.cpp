#include "lensspec/error.hpp"

namespace lensspec {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidOrder: return "InvalidOrder";
    case ErrorKind::ZeroRotation: return "ZeroRotation";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::UnsupportedRank: return "UnsupportedRank";
    case ErrorKind::UnsupportedPadding: return "UnsupportedPadding";
    case ErrorKind::UnsupportedShape: return "UnsupportedShape";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::PoleEvaluation: return "PoleEvaluation";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::NotADivisor: return "NotADivisor";
    case ErrorKind::SingularRotation: return "SingularRotation";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

}  // namespace lensspec
