#include "bezroot/error.hpp"

namespace bezroot {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::ParseError: return "ParseError";
    case Errc::BadArgument: return "BadArgument";
    case Errc::DivisionByZeroPoly: return "DivisionByZeroPoly";
    case Errc::BadOrder: return "BadOrder";
    case Errc::BadExponents: return "BadExponents";
    case Errc::NotSymmetric: return "NotSymmetric";
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    case Errc::DegreeTooSmall: return "DegreeTooSmall";
    case Errc::DegenerateFamily: return "DegenerateFamily";
    case Errc::NotSeparable: return "NotSeparable";
    case Errc::DegreeOrder: return "DegreeOrder";
    case Errc::IdenticallyZero: return "IdenticallyZero";
    case Errc::ThresholdViolation: return "ThresholdViolation";
    case Errc::BadSign: return "BadSign";
    case Errc::ZeroXi: return "ZeroXi";
    case Errc::NotTotallyComplex: return "NotTotallyComplex";
    case Errc::BadParity: return "BadParity";
    case Errc::BadLeadingSign: return "BadLeadingSign";
    case Errc::OutOfRange: return "OutOfRange";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace bezroot
