#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bezroot {

/// Every failure the library reports carries one of these codes; the CLI
/// prints the name verbatim.
enum class Errc {
  ParseError,
  BadArgument,
  DivisionByZeroPoly,
  BadOrder,
  BadExponents,
  NotSymmetric,
  ZeroPolynomial,
  DegreeTooSmall,
  DegenerateFamily,
  NotSeparable,
  DegreeOrder,
  IdenticallyZero,
  ThresholdViolation,
  BadSign,
  ZeroXi,
  NotTotallyComplex,
  BadParity,
  BadLeadingSign,
  OutOfRange,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& what);

}  // namespace bezroot
