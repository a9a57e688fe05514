#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace toriclogk {

enum class ErrorCode {
  EmptyInput,
  NotFullDimensional,
  DimensionMismatch,
  NotLattice,
  ZeroDirection,
  OriginNotInterior,
  NotReflexive,
  BarycenterAtOrigin,
  BetaOutOfRange,
  AlphaOutOfRange,
  NotPolynomial,
  ZeroB0,
  IndexOutOfRange,
  UnsupportedDimension,
  Overflow,
  ParseError,
};

std::string_view error_name(ErrorCode code) noexcept;

/// Domain error raised by every toolkit operation. The code is stable and is
/// what the CLI reports in its error JSON.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace toriclogk
