#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lensspec {

enum class ErrorKind {
  InvalidOrder,
  ZeroRotation,
  DimensionMismatch,
  UnsupportedRank,
  UnsupportedPadding,
  UnsupportedShape,
  ShapeMismatch,
  PoleEvaluation,
  PreconditionViolated,
  NotADivisor,
  SingularRotation,
  InvariantViolation,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every failure raised by the library carries a kind so callers (the CLI in
// particular) can map it onto an exit code without parsing messages.
class LensError : public std::runtime_error {
public:
  LensError(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

}  // namespace lensspec
