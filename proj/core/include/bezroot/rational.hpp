#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <ostream>
#include <string>
#include <string_view>

namespace bezroot {

/// Exact rational number, always stored in lowest terms with a positive
/// denominator. Text form is "p" or "p/q" (see parse/str).
class Rational {
 public:
  Rational() = default;

  template <std::integral I>
  Rational(I v) : v_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)

  Rational(long num, long den);

  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  /// Accepts "p", "-p", "p/q" with an ASCII '-' or U+2212 minus sign.
  /// The denominator must be nonzero; the result is canonicalized.
  static Rational parse(std::string_view text);

  static Rational zero() { return Rational(); }
  static Rational one() { return Rational(1); }
  static Rational from_int(long v) { return Rational(v); }

  std::string str() const;

  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }
  bool is_integer() const { return v_.get_den() == 1; }

  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  Rational abs() const;
  Rational inverse() const;

  Rational operator-() const { return Rational(mpq_class(-v_)); }

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class v_;
};

inline Rational exact_div(const Rational& a, const Rational& b) { return a / b; }

}  // namespace bezroot
