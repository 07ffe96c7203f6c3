#pragma once

#include "bezroot/error.hpp"
#include "bezroot/rational.hpp"

#include <concepts>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace bezroot {

/// Commutative ring element usable as a polynomial or matrix coefficient.
/// A default-constructed value is the ring's zero.
template <class R>
concept RingElement = std::regular<R> && requires(const R& a, const R& b, long k) {
  { a + b } -> std::convertible_to<R>;
  { a - b } -> std::convertible_to<R>;
  { a * b } -> std::convertible_to<R>;
  { -a } -> std::convertible_to<R>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { R::one() } -> std::convertible_to<R>;
  { R::from_int(k) } -> std::convertible_to<R>;
};

/// Dense univariate polynomial, coefficients in ascending degree. The zero
/// polynomial is the empty sequence; every other value has a nonzero
/// leading coefficient.
template <RingElement R>
class UniPoly {
 public:
  using coeff_type = R;

  UniPoly() = default;

  explicit UniPoly(std::vector<R> coeffs) : c_(std::move(coeffs)) { trim(); }

  /// Constant polynomial.
  explicit UniPoly(const R& c) {
    if (!c.is_zero()) c_.push_back(c);
  }

  static UniPoly zero() { return UniPoly(); }
  static UniPoly one() { return UniPoly(R::one()); }
  static UniPoly from_int(long v) { return UniPoly(R::from_int(v)); }

  /// c * x^k
  static UniPoly monomial(const R& c, std::size_t k) {
    if (c.is_zero()) return UniPoly();
    std::vector<R> v(k + 1);
    v[k] = c;
    return UniPoly(std::move(v));
  }

  static UniPoly x() { return monomial(R::one(), 1); }

  bool is_zero() const { return c_.empty(); }

  /// nullopt stands for the zero polynomial's degree (minus infinity).
  std::optional<std::size_t> degree() const {
    if (c_.empty()) return std::nullopt;
    return c_.size() - 1;
  }

  /// Degree of a polynomial known to be nonzero.
  std::size_t deg() const {
    if (c_.empty()) fail(Errc::ZeroPolynomial, "degree of the zero polynomial");
    return c_.size() - 1;
  }

  /// Coefficient of x^k; zero past the degree.
  R coeff(std::size_t k) const { return k < c_.size() ? c_[k] : R(); }

  const std::vector<R>& coeffs() const { return c_; }

  /// Leading coefficient ("led"); zero for the zero polynomial.
  R lead() const { return c_.empty() ? R() : c_.back(); }

  bool is_constant() const { return c_.size() <= 1; }

  UniPoly operator-() const {
    UniPoly r = *this;
    for (auto& a : r.c_) a = -a;
    return r;
  }

  UniPoly& operator+=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
    trim();
    return *this;
  }

  UniPoly& operator-=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
    trim();
    return *this;
  }

  UniPoly& operator*=(const UniPoly& o) {
    *this = *this * o;
    return *this;
  }

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }

  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<R> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        out[i + j] = out[i + j] + a.c_[i] * b.c_[j];
      }
    }
    return UniPoly(std::move(out));
  }

  /// Scalar multiple.
  friend UniPoly operator*(const R& s, const UniPoly& p) {
    if (s.is_zero()) return UniPoly();
    std::vector<R> out = p.c_;
    for (auto& a : out) a = s * a;
    return UniPoly(std::move(out));
  }

  friend bool operator==(const UniPoly&, const UniPoly&) = default;

  /// Horner evaluation at a point of the coefficient ring.
  R eval(const R& at) const {
    R acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
    return acc;
  }

  /// Applies `fn` to every coefficient; used to specialise a symbolic
  /// coefficient ring (e.g. Q[t] -> Q by t := xi).
  template <class Fn>
  auto map_coeffs(Fn&& fn) const {
    using S = std::decay_t<decltype(fn(std::declval<const R&>()))>;
    std::vector<S> out;
    out.reserve(c_.size());
    for (const auto& a : c_) out.push_back(fn(a));
    return UniPoly<S>(std::move(out));
  }

  /// p(-x)
  UniPoly reflect() const {
    UniPoly r = *this;
    for (std::size_t i = 1; i < r.c_.size(); i += 2) r.c_[i] = -r.c_[i];
    return r;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<R> c_;
};

using QPoly = UniPoly<Rational>;
/// Polynomials in x whose coefficients are polynomials in a parameter t.
using QtPoly = UniPoly<QPoly>;

template <RingElement R>
UniPoly<R> derivative(const UniPoly<R>& f) {
  const auto& c = f.coeffs();
  if (c.size() <= 1) return UniPoly<R>();
  std::vector<R> out(c.size() - 1);
  for (std::size_t k = 1; k < c.size(); ++k) out[k - 1] = R::from_int(static_cast<long>(k)) * c[k];
  return UniPoly<R>(std::move(out));
}

template <RingElement R>
UniPoly<R> pow(UniPoly<R> base, unsigned e) {
  UniPoly<R> acc = UniPoly<R>::one();
  while (e != 0) {
    if (e & 1U) acc *= base;
    e >>= 1U;
    if (e != 0) base *= base;
  }
  return acc;
}

struct QPolyDivision {
  QPoly quotient;
  QPoly remainder;
};

/// Euclidean division over Q: f = q*g + r with deg r < deg g.
QPolyDivision divrem(const QPoly& f, const QPoly& g);

/// Monic gcd over Q (zero only when both inputs are zero).
QPoly gcd(QPoly a, QPoly b);

QPoly make_monic(const QPoly& f);

/// Exact quotient in Q[t]; throws BadArgument when b does not divide a.
QPoly exact_div(const QPoly& a, const QPoly& b);

/// Largest k with t^k dividing f (f nonzero).
std::size_t trailing_zero_power(const QPoly& f);

/// f / t^k, assuming t^k divides f.
QPoly shift_down(const QPoly& f, std::size_t k);

/// Human-readable form, e.g. "x^2 - 2*x + 1/2"; `var` names the variable.
std::string to_string(const QPoly& f, const std::string& var = "x");
std::string to_string(const QtPoly& f, const std::string& var = "x", const std::string& param = "t");

inline std::ostream& operator<<(std::ostream& os, const QPoly& p) { return os << to_string(p); }

/// Q-polynomial from ascending coefficients.
QPoly qpoly(std::initializer_list<Rational> coeffs);

}  // namespace bezroot
