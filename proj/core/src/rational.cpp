#include "bezroot/rational.hpp"

#include "bezroot/error.hpp"

#include <cctype>

namespace bezroot {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational::Rational(long num, long den) {
  if (den == 0) fail(Errc::BadArgument, "zero denominator");
  v_ = mpq_class(num, 1);
  v_ /= den;
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const std::string original(text);
  bool negative = false;
  static constexpr std::string_view kUnicodeMinus = "\xE2\x88\x92";
  if (text.starts_with('-')) {
    negative = true;
    text.remove_prefix(1);
  } else if (text.starts_with(kUnicodeMinus)) {
    negative = true;
    text.remove_prefix(kUnicodeMinus.size());
  }
  std::string_view num = text;
  std::string_view den = "1";
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  if (!all_digits(num) || !all_digits(den)) {
    fail(Errc::ParseError, "malformed rational '" + original + "'");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) fail(Errc::ParseError, "zero denominator in '" + original + "'");
  if (negative) n = -n;
  return Rational(mpq_class(n, d));
}

std::string Rational::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(v_))); }

Rational Rational::inverse() const {
  if (is_zero()) fail(Errc::BadArgument, "inverse of zero");
  return Rational(mpq_class(1 / v_));
}

Rational& Rational::operator+=(const Rational& o) {
  v_ += o.v_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  v_ -= o.v_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  v_ *= o.v_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) fail(Errc::BadArgument, "division by zero");
  v_ /= o.v_;
  return *this;
}

}  // namespace bezroot
