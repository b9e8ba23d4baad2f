#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sectoria {

enum class ErrorKind {
  NotSquare,
  DimensionMismatch,
  NonFinite,
  NotHermitian,
  NotConverged,
  Singular,
  SingularLeadingBlock,
  SingularBlock,
  IndexOutOfRange,
  NotPositiveDefinite,
  NotAccretive,
  NotAccretiveDissipative,
  NotSectorial,
  OmegaPrimeEmpty,
  TooLarge,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Raised by every library routine whose precondition fails. The kind is the
/// stable, machine-readable part; the message is for humans.
class MathError : public std::runtime_error {
 public:
  MathError(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace sectoria
