#pragma once

// Random generators and independent oracles shared by the unit and
// acceptance suites. Nothing here calls the code path it is used to check.

#include "bezroot/family.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

namespace testkit {

using namespace bezroot;
using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline Rational rand_rational(Rng& rng, long num = 9, long den = 9) {
  return Rational(uniform(rng, -num, num), uniform(rng, 1, den));
}

inline Rational rand_nonzero(Rng& rng, long num = 9, long den = 9) {
  for (;;) {
    Rational q = rand_rational(rng, num, den);
    if (!q.is_zero()) return q;
  }
}

/// Exactly degree `deg` (nonzero leading coefficient); about a third of the
/// lower coefficients are zero.
inline QPoly rand_poly(Rng& rng, std::size_t deg, long num = 9, long den = 9) {
  std::vector<Rational> c(deg + 1);
  for (auto& x : c) x = uniform(rng, 0, 2) == 0 ? Rational(0) : rand_rational(rng, num, den);
  c[deg] = rand_nonzero(rng, num, den);
  return QPoly(std::move(c));
}

inline QPoly rand_poly_upto(Rng& rng, std::size_t max_deg) {
  if (uniform(rng, 0, 9) == 0) return QPoly{};
  return rand_poly(rng, static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(max_deg))));
}

/// lead * prod (x - a_i) * prod (x^2 + b_j): distinct real roots known.
inline QPoly from_roots(const std::vector<Rational>& roots, const std::vector<Rational>& quad_b = {},
                        const Rational& lead = Rational(1)) {
  QPoly f = QPoly(lead);
  for (const auto& a : roots) f = f * QPoly({-a, Rational(1)});
  for (const auto& b : quad_b) f = f * QPoly({b, Rational(0), Rational(1)});
  return f;
}

inline std::vector<Rational> distinct_rationals(Rng& rng, std::size_t k) {
  std::vector<Rational> out;
  while (out.size() < k) {
    Rational q(uniform(rng, -30, 30), uniform(rng, 1, 6));
    if (std::find(out.begin(), out.end(), q) == out.end()) out.push_back(q);
  }
  return out;
}

inline QSymMatrix rand_sym(Rng& rng, std::size_t n) {
  QMatrix m(n);
  const long density = uniform(rng, 1, 4);  // 1 = sparse, 4 = dense
  const bool zero_diag = uniform(rng, 0, 4) == 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      if (i == j && zero_diag) continue;
      if (uniform(rng, 0, 4) >= density) continue;
      m(i, j) = m(j, i) = rand_rational(rng, 6, 4);
    }
  if (uniform(rng, 0, 3) == 0 && n > 1) {
    // force a rank defect: last row/column copies a combination of the first
    const Rational c = rand_rational(rng, 3, 2);
    for (std::size_t j = 0; j < n; ++j) m(n - 1, j) = c * m(0, j);
    for (std::size_t j = 0; j < n; ++j) m(j, n - 1) = m(n - 1, j);
    m(n - 1, n - 1) = c * c * m(0, 0);
  }
  return QSymMatrix(std::move(m));
}

inline QMatrix rand_invertible(Rng& rng, std::size_t n) {
  for (;;) {
    QMatrix s(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) s(i, j) = rand_rational(rng, 5, 3);
    if (!determinant(s).is_zero()) return s;
  }
}

/// Bezoutian by direct division of f1(x) f2(y) - f1(y) f2(x) by (x - y).
/// Bivariate coefficients c[i][j] of x^i y^j; returns alpha with
/// B = sum alpha_ij x^{n-i} y^{n-j} (1-based i, j) stored 0-based.
inline QMatrix bezout_by_division(const QPoly& f1, const QPoly& f2, std::size_t n) {
  const std::size_t d = n + 1;
  std::vector<std::vector<Rational>> c(d, std::vector<Rational>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) c[i][j] = f1.coeff(i) * f2.coeff(j) - f1.coeff(j) * f2.coeff(i);
  // F as a polynomial in x with coefficients P_i(y) = c[i][*]; synthetic
  // division by x - y: Q_{i-1} = P_i + y Q_i.
  std::vector<std::vector<Rational>> q(d, std::vector<Rational>(d + 1));
  std::vector<Rational> carry(d + 1);
  for (std::size_t i = d; i-- > 1;) {
    std::vector<Rational> next(d + 1);
    for (std::size_t j = 0; j < d; ++j) next[j] += c[i][j];
    for (std::size_t j = 0; j < d; ++j) next[j + 1] += carry[j];
    q[i - 1] = next;
    carry = next;
  }
  std::vector<Rational> rem(d + 1);
  for (std::size_t j = 0; j < d; ++j) rem[j] += c[0][j];
  for (std::size_t j = 0; j < d; ++j) rem[j + 1] += carry[j];
  for (const auto& r : rem)
    if (!r.is_zero()) throw std::logic_error("x - y does not divide the Bezout numerator");
  QMatrix alpha(n);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j) alpha(i - 1, j - 1) = q[n - i][n - j];
  return alpha;
}

/// led^{2n-2} prod_{i<j} (a_i - a_j)^2 for f = led * prod (x - a_i).
inline Rational disc_from_roots(const std::vector<Rational>& roots, const Rational& lead) {
  Rational out(1);
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = i + 1; j < roots.size(); ++j) out *= (roots[i] - roots[j]) * (roots[i] - roots[j]);
  for (std::size_t k = 0; k + 2 < 2 * roots.size(); ++k) out *= lead;
  return out;
}

inline Rational rpow(const Rational& x, std::size_t e) {
  Rational out(1);
  for (std::size_t i = 0; i < e; ++i) out *= x;
  return out;
}

}  // namespace testkit
