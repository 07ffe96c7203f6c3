#pragma once

#include "bezroot/bezout.hpp"
#include "bezroot/error.hpp"
#include "bezroot/family_spec.hpp"
#include "bezroot/matrix.hpp"
#include "bezroot/polynomial.hpp"

#include <cstddef>
#include <optional>

namespace bezroot {

/// Sylvester matrix of f and g: deg g rows of f's coefficients followed by
/// deg f rows of g's, highest degree first, each row shifted right by one.
template <RingElement R>
SquareMatrix<R> sylvester_matrix(const UniPoly<R>& f, const UniPoly<R>& g) {
  if (f.is_zero() || g.is_zero()) fail(Errc::ZeroPolynomial, "Sylvester matrix of a zero polynomial");
  const std::size_t m = f.deg();
  const std::size_t k = g.deg();
  SquareMatrix<R> s(m + k);
  for (std::size_t row = 0; row < k; ++row)
    for (std::size_t d = 0; d <= m; ++d) s(row, row + (m - d)) = f.coeff(d);
  for (std::size_t row = 0; row < m; ++row)
    for (std::size_t d = 0; d <= k; ++d) s(k + row, row + (k - d)) = g.coeff(d);
  return s;
}

/// Res(f, g) = det of the Sylvester matrix, so Res(x - a, x - b) = a - b.
/// Two constants give 1 (empty determinant).
template <RingElement R>
R resultant(const UniPoly<R>& f, const UniPoly<R>& g) {
  return determinant(sylvester_matrix(f, g));
}

/// D_f = (-1)^{n(n-1)/2} Res(f, f') / led(f).
template <RingElement R>
R discriminant(const UniPoly<R>& f) {
  if (f.is_zero() || f.deg() < 2) fail(Errc::DegreeTooSmall, "discriminant needs degree >= 2");
  const std::size_t n = f.deg();
  R res = exact_div(resultant(f, derivative(f)), f.lead());
  return ((n * (n - 1) / 2) % 2 == 1) ? -res : res;
}

struct BezoutDiscCheck {
  Rational det_bezout;
  Rational disc;
  /// det_bezout / disc; absent when disc = 0.
  std::optional<Rational> ratio;
};

/// det M_n(f) next to D_f. Measured law: det M_n(f) = led(f)^2 D_f, so the
/// ratio is 1 exactly for monic f.
BezoutDiscCheck bezout_disc_check(const QPoly& f);

struct DiscInT {
  QPoly full;        ///< D_{(f,x)}(t) for f = x^n + t g(x)
  QPoly stripped;    ///< full / t^t_power
  std::size_t t_power = 0;
  std::size_t expected_power = 0;  ///< n - 1
  std::size_t min_power = 0;       ///< n - s - 1
  bool power_matches_expected() const { return t_power == expected_power; }
  bool meets_min_power() const { return t_power >= min_power && t_power >= 1; }
  /// full / t^{n-1} when that division is exact.
  std::optional<QPoly> quotient_p() const;
};

/// Discriminant of x^n + t g_r(x) with respect to x, as a polynomial in t.
DiscInT disc_in_t(const FamilySpec& spec);

}  // namespace bezroot
