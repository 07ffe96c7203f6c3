#include "bezroot/inertia.hpp"

namespace bezroot {

std::ostream& operator<<(std::ostream& os, const Inertia& in) {
  return os << "(" << in.pos << "," << in.neg << "," << in.zero << ")";
}

Inertia inertia_by_congruence(const QSymMatrix& m) {
  QMatrix a = m.matrix();
  const std::size_t n = a.order();
  Inertia out;

  auto swap_index = [&](std::size_t p, std::size_t q) {
    if (p == q) return;
    for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(q, j));
    for (std::size_t i = 0; i < n; ++i) std::swap(a(i, p), a(i, q));
  };

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a(piv, piv).is_zero()) ++piv;

    if (piv == n) {
      // Zero diagonal on the active block: find the first nonzero a_ij.
      std::size_t pi = n;
      std::size_t pj = n;
      for (std::size_t i = k; i < n && pi == n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (!a(i, j).is_zero()) {
            pi = i;
            pj = j;
            break;
          }
      if (pi == n) {
        out.zero += n - k;
        break;
      }
      // Column i += column j, then row i += row j: a_ii becomes 2 a_ij.
      for (std::size_t r = 0; r < n; ++r) a(r, pi) += a(r, pj);
      for (std::size_t c = 0; c < n; ++c) a(pi, c) += a(pj, c);
      piv = pi;
    }

    swap_index(k, piv);
    const Rational pivot = a(k, k);
    const Rational inv = pivot.inverse();
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k).is_zero()) continue;
      const Rational f = a(i, k) * inv;
      for (std::size_t j = k + 1; j < n; ++j) {
        if (!a(k, j).is_zero()) a(i, j) -= f * a(k, j);
      }
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      a(i, k) = Rational();
      a(k, i) = Rational();
    }
    (pivot.sign() > 0 ? out.pos : out.neg) += 1;
  }
  return out;
}

Inertia inertia_by_charpoly(const QSymMatrix& m) {
  const QPoly p = charpoly(m.matrix());
  Inertia out;
  const auto& c = p.coeffs();
  std::size_t z = 0;
  while (z < c.size() && c[z].is_zero()) ++z;
  out.zero = z;
  int last = 0;
  for (std::size_t k = z; k < c.size(); ++k) {
    const int s = c[k].sign();
    if (s == 0) continue;
    if (last != 0 && s != last) ++out.pos;
    last = s;
  }
  out.neg = m.order() - out.pos - out.zero;
  return out;
}

}  // namespace bezroot
