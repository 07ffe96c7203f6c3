#pragma once

#include "bezroot/matrix.hpp"
#include "bezroot/polynomial.hpp"

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <vector>

namespace bezroot {

/// Counts of positive, negative and zero eigenvalues of a real symmetric
/// matrix. The signature pos - neg is what Hermite's theorem relates to the
/// number of distinct real roots.
struct Inertia {
  std::size_t pos = 0;
  std::size_t neg = 0;
  std::size_t zero = 0;

  long signature() const { return static_cast<long>(pos) - static_cast<long>(neg); }
  std::size_t order() const { return pos + neg + zero; }
  std::size_t rank() const { return pos + neg; }

  friend bool operator==(const Inertia&, const Inertia&) = default;
};

std::ostream& operator<<(std::ostream& os, const Inertia& in);

/// det(xI - M), computed with Berkowitz's division-free recurrence so that
/// it works over any commutative ring (in particular Q[t]).
template <RingElement R>
UniPoly<R> charpoly(const SquareMatrix<R>& a) {
  const std::size_t n = a.order();
  // Descending coefficients of the characteristic polynomial of the leading
  // r x r block, extended one row/column at a time.
  std::vector<R> c{R::one()};
  for (std::size_t r = 0; r < n; ++r) {
    // Toeplitz column: 1, -a_rr, -R S, -R A S, -R A^2 S, ...
    std::vector<R> t(r + 2);
    t[0] = R::one();
    t[1] = -a(r, r);
    std::vector<R> col(r);
    for (std::size_t i = 0; i < r; ++i) col[i] = a(i, r);
    for (std::size_t k = 0; k < r; ++k) {
      R dot;
      for (std::size_t j = 0; j < r; ++j) dot = dot + a(r, j) * col[j];
      t[k + 2] = -dot;
      if (k + 1 < r) {
        std::vector<R> next(r);
        for (std::size_t i = 0; i < r; ++i) {
          R acc;
          for (std::size_t j = 0; j < r; ++j) {
            if (!a(i, j).is_zero() && !col[j].is_zero()) acc = acc + a(i, j) * col[j];
          }
          next[i] = std::move(acc);
        }
        col = std::move(next);
      }
    }
    std::vector<R> nc(r + 2);
    for (std::size_t i = 0; i < r + 2; ++i) {
      R acc;
      for (std::size_t j = 0; j <= std::min(i, r); ++j) {
        if (!t[i - j].is_zero() && !c[j].is_zero()) acc = acc + t[i - j] * c[j];
      }
      nc[i] = std::move(acc);
    }
    c = std::move(nc);
  }
  std::reverse(c.begin(), c.end());
  return UniPoly<R>(std::move(c));
}

/// Symmetric Gaussian elimination (congruence diagonalisation). When every
/// remaining diagonal entry vanishes, the lexicographically smallest nonzero
/// off-diagonal (i,j) is used: row/column j is added into row/column i.
Inertia inertia_by_congruence(const QSymMatrix& m);

/// Reads the inertia off the characteristic polynomial: the multiplicity of
/// the root 0, and Descartes' sign variations on the rest. Exact only
/// because a symmetric matrix has a real spectrum.
Inertia inertia_by_charpoly(const QSymMatrix& m);

inline Inertia inertia(const QSymMatrix& m) { return inertia_by_congruence(m); }

}  // namespace bezroot
