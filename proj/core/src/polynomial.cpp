#include "bezroot/polynomial.hpp"

#include <sstream>

namespace bezroot {

QPolyDivision divrem(const QPoly& f, const QPoly& g) {
  if (g.is_zero()) fail(Errc::DivisionByZeroPoly, "divisor is the zero polynomial");
  if (f.is_zero() || f.deg() < g.deg()) return {QPoly(), f};

  std::vector<Rational> rem = f.coeffs();
  const std::size_t dg = g.deg();
  const Rational inv_lead = g.lead().inverse();
  std::vector<Rational> quot(f.deg() - dg + 1);
  for (std::size_t k = quot.size(); k-- > 0;) {
    const Rational q = rem[k + dg] * inv_lead;
    quot[k] = q;
    if (q.is_zero()) continue;
    for (std::size_t j = 0; j <= dg; ++j) rem[k + j] -= q * g.coeffs()[j];
  }
  rem.resize(dg);
  return {QPoly(std::move(quot)), QPoly(std::move(rem))};
}

QPoly make_monic(const QPoly& f) {
  if (f.is_zero()) return f;
  return f.lead().inverse() * f;
}

QPoly gcd(QPoly a, QPoly b) {
  while (!b.is_zero()) {
    QPoly r = divrem(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a);
}

QPoly exact_div(const QPoly& a, const QPoly& b) {
  auto [q, r] = divrem(a, b);
  if (!r.is_zero()) fail(Errc::BadArgument, "inexact polynomial division");
  return q;
}

std::size_t trailing_zero_power(const QPoly& f) {
  if (f.is_zero()) fail(Errc::ZeroPolynomial, "t-adic valuation of zero");
  std::size_t k = 0;
  while (f.coeffs()[k].is_zero()) ++k;
  return k;
}

QPoly shift_down(const QPoly& f, std::size_t k) {
  if (f.is_zero()) return f;
  return QPoly(std::vector<Rational>(f.coeffs().begin() + static_cast<std::ptrdiff_t>(k), f.coeffs().end()));
}

namespace {

std::string term(const Rational& c, std::size_t k, const std::string& var, bool first) {
  std::ostringstream os;
  const Rational mag = c.abs();
  if (first) {
    if (c.sign() < 0) os << "-";
  } else {
    os << (c.sign() < 0 ? " - " : " + ");
  }
  const bool unit = mag == Rational(1);
  if (k == 0) {
    os << mag;
  } else {
    if (!unit) os << mag << "*";
    os << var;
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

}  // namespace

std::string to_string(const QPoly& f, const std::string& var) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t k = f.coeffs().size(); k-- > 0;) {
    const Rational& c = f.coeffs()[k];
    if (c.is_zero()) continue;
    out += term(c, k, var, first);
    first = false;
  }
  return out;
}

std::string to_string(const QtPoly& f, const std::string& var, const std::string& param) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t k = f.coeffs().size(); k-- > 0;) {
    const QPoly& c = f.coeffs()[k];
    if (c.is_zero()) continue;
    if (!first) out += " + ";
    out += "(" + to_string(c, param) + ")";
    if (k > 0) out += "*" + var + (k > 1 ? "^" + std::to_string(k) : "");
    first = false;
  }
  return out;
}

QPoly qpoly(std::initializer_list<Rational> coeffs) { return QPoly(std::vector<Rational>(coeffs)); }

}  // namespace bezroot
