#pragma once

// Bezoutian matrices M_n(f1, f2): the coefficient matrix (alpha_ij) of
//
//   (f1(x) f2(y) - f1(y) f2(x)) / (x - y) = sum_{i,j=1..n} alpha_ij x^{n-i} y^{n-j}.
//
// The construction expands f1, f2 into monomials and adds the closed-form
// Bezoutian of each monomial pair, so no bivariate arithmetic is needed.

#include "bezroot/error.hpp"
#include "bezroot/matrix.hpp"
#include "bezroot/polynomial.hpp"

#include <algorithm>
#include <cstddef>
#include <string>

namespace bezroot {

namespace detail {

/// Adds c * M_order(x^mu, x^nu) into `m` for mu > nu. The ones of the
/// monomial Bezoutian sit at 1-based (order-mu+k, order-nu-k+1), k=1..mu-nu,
/// i.e. on i+j = 2*order-(mu+nu)+1 inside order-mu+1 <= i,j <= order-nu.
template <RingElement R>
void add_monomial_bezout(SquareMatrix<R>& m, std::size_t mu, std::size_t nu, const R& c) {
  const std::size_t n = m.order();
  for (std::size_t k = 1; k <= mu - nu; ++k) {
    const std::size_t i = n - mu + k - 1;
    const std::size_t j = n - nu - k;
    m(i, j) = m(i, j) + c;
  }
}

}  // namespace detail

/// Closed-form monomial Bezoutian M_lambda(x^mu, x^nu), lambda >= mu > nu >= 0.
SquareMatrix<Rational> bezout_monomial(long lambda, long mu, long nu);

/// M_n(f1, f2) for n >= max(deg f1, deg f2).
template <RingElement R>
SymMatrix<R> bezout_matrix(const UniPoly<R>& f1, const UniPoly<R>& f2, std::size_t n) {
  const std::size_t d1 = f1.degree().value_or(0);
  const std::size_t d2 = f2.degree().value_or(0);
  if (n < std::max(d1, d2) || n == 0) {
    fail(Errc::BadOrder, "order " + std::to_string(n) + " below max degree " + std::to_string(std::max(d1, d2)));
  }
  SquareMatrix<R> m(n);
  const auto& a = f1.coeffs();
  const auto& b = f2.coeffs();
  // B(f1,f2) = sum_{p,q} a_p b_q B(x^p, x^q), and B(x^p, x^q) = -B(x^q, x^p).
  for (std::size_t p = 0; p < a.size(); ++p) {
    if (a[p].is_zero()) continue;
    for (std::size_t q = 0; q < b.size(); ++q) {
      if (p == q || b[q].is_zero()) continue;
      const R c = a[p] * b[q];
      if (p > q) {
        detail::add_monomial_bezout(m, p, q, c);
      } else {
        detail::add_monomial_bezout(m, q, p, -c);
      }
    }
  }
  return SymMatrix<R>(std::move(m));
}

/// M_n(f) = M_n(f, f'), the Bezoutian matrix of f.
template <RingElement R>
SymMatrix<R> bezout_of(const UniPoly<R>& f, std::size_t n) {
  if (f.is_zero() || f.deg() < 1) fail(Errc::DegreeTooSmall, "Bezoutian of f needs deg f >= 1");
  return bezout_matrix(f, derivative(f), n);
}

template <RingElement R>
SymMatrix<R> bezout_of(const UniPoly<R>& f) {
  return bezout_of(f, f.is_zero() ? 0 : f.deg());
}

/// M'_n(f1, f2), indexed by x^{i-1} y^{j-1}; equals J_n^T M_n J_n.
template <RingElement R>
SymMatrix<R> reversed_bezout(const UniPoly<R>& f1, const UniPoly<R>& f2, std::size_t n) {
  const auto m = bezout_matrix(f1, f2, n);
  SquareMatrix<R> out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = m(n - 1 - i, n - 1 - j);
  return SymMatrix<R>(std::move(out));
}

}  // namespace bezroot
