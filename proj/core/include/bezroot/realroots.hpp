#pragma once

#include "bezroot/polynomial.hpp"
#include "bezroot/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace bezroot {

/// Half-open interval (lo, hi] holding exactly one distinct real root, or the
/// point lo == hi when that root is rational and was hit exactly.
struct IsolatingInterval {
  Rational lo;
  Rational hi;
  bool exact = false;

  Rational width() const { return hi - lo; }
  friend bool operator==(const IsolatingInterval&, const IsolatingInterval&) = default;
};

/// Endpoint of a counting range; nullopt means -inf (lower) or +inf (upper).
using Bound = std::optional<Rational>;

/// p0 = f, p1 = f', p_{k+1} = -rem(p_{k-1}, p_k); the last entry is the
/// (scaled) gcd of f and f'.
std::vector<QPoly> sturm_sequence(const QPoly& f);

/// f / gcd(f, f').
QPoly square_free_part(const QPoly& f);

/// Number of distinct real roots of f in (lo, hi].
std::size_t count_real_roots(const QPoly& f, const Bound& lo = std::nullopt, const Bound& hi = std::nullopt);

/// 1 + max|a_i| / |a_n|: every root has absolute value strictly below it.
Rational cauchy_bound(const QPoly& f);

/// Disjoint isolating intervals for the distinct real roots, ascending.
/// With `max_width`, every inexact interval is refined below that width.
std::vector<IsolatingInterval> isolate_real_roots(const QPoly& f, const std::optional<Rational>& max_width = std::nullopt);

/// Bisects an isolating interval of the square-free polynomial `f` until
/// its width is at most `max_width` or the root is hit exactly.
IsolatingInterval refine(const QPoly& f, IsolatingInterval iv, const Rational& max_width);

enum class BoundMode { max_root, max_abs_root };

/// A rational strictly above the largest real root (max_root) or the largest
/// |real root| (max_abs_root). Without real roots the answer is 1, a strict
/// bound for {0}.
Rational strict_upper_rational(const QPoly& f, BoundMode mode);

/// True when xi is strictly greater than every real root of f
/// (max_root), or than every |real root| (max_abs_root). Decided exactly.
bool strictly_above_roots(const QPoly& f, const Rational& xi, BoundMode mode);

}  // namespace bezroot
