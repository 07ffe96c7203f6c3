#pragma once

#include "bezroot/error.hpp"
#include "bezroot/polynomial.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace bezroot {

/// Dense square matrix over a commutative ring, row-major, 0-based.
template <RingElement R>
class SquareMatrix {
 public:
  using value_type = R;

  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t order) : n_(order), a_(order * order) {}

  /// Rows must all have `rows.size()` entries.
  explicit SquareMatrix(const std::vector<std::vector<R>>& rows) : SquareMatrix(rows.size()) {
    for (std::size_t i = 0; i < n_; ++i) {
      if (rows[i].size() != n_) fail(Errc::BadArgument, "matrix rows must be square");
      for (std::size_t j = 0; j < n_; ++j) (*this)(i, j) = rows[i][j];
    }
  }

  static SquareMatrix identity(std::size_t order) {
    SquareMatrix m(order);
    for (std::size_t i = 0; i < order; ++i) m(i, i) = R::one();
    return m;
  }

  std::size_t order() const { return n_; }

  R& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const R& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  bool is_symmetric() const {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j)
        if (!((*this)(i, j) == (*this)(j, i))) return false;
    return true;
  }

  bool is_zero() const {
    for (const auto& v : a_)
      if (!v.is_zero()) return false;
    return true;
  }

  SquareMatrix transpose() const {
    SquareMatrix t(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  /// Entrywise map into another ring (e.g. evaluate Q[t] entries at t = xi).
  template <class Fn>
  auto map(Fn&& fn) const {
    using S = std::decay_t<decltype(fn(std::declval<const R&>()))>;
    SquareMatrix<S> out(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) out(i, j) = fn((*this)(i, j));
    return out;
  }

  SquareMatrix& operator+=(const SquareMatrix& o) {
    check_same(o);
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] = a_[k] + o.a_[k];
    return *this;
  }

  SquareMatrix& operator-=(const SquareMatrix& o) {
    check_same(o);
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] = a_[k] - o.a_[k];
    return *this;
  }

  friend SquareMatrix operator+(SquareMatrix a, const SquareMatrix& b) { return a += b; }
  friend SquareMatrix operator-(SquareMatrix a, const SquareMatrix& b) { return a -= b; }

  SquareMatrix operator-() const {
    SquareMatrix r = *this;
    for (auto& v : r.a_) v = -v;
    return r;
  }

  friend SquareMatrix operator*(const R& s, SquareMatrix m) {
    for (auto& v : m.a_) v = s * v;
    return m;
  }

  friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
    a.check_same(b);
    const std::size_t n = a.n_;
    SquareMatrix c(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        const R& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) c(i, j) = c(i, j) + aik * b(k, j);
      }
    return c;
  }

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

 private:
  void check_same(const SquareMatrix& o) const {
    if (o.n_ != n_) fail(Errc::BadArgument, "matrix order mismatch");
  }

  std::size_t n_ = 0;
  std::vector<R> a_;
};

/// Symmetric square matrix; symmetry is verified on construction.
template <RingElement R>
class SymMatrix {
 public:
  SymMatrix() = default;

  explicit SymMatrix(SquareMatrix<R> m) : m_(std::move(m)) {
    if (!m_.is_symmetric()) fail(Errc::NotSymmetric, "matrix is not symmetric");
  }

  std::size_t order() const { return m_.order(); }
  const R& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  const SquareMatrix<R>& matrix() const { return m_; }

  template <class Fn>
  auto map(Fn&& fn) const {
    return SymMatrix<std::decay_t<decltype(fn(std::declval<const R&>()))>>(m_.map(std::forward<Fn>(fn)));
  }

  /// Congruence S^T M S, which stays symmetric.
  SymMatrix congruence(const SquareMatrix<R>& s) const { return SymMatrix(s.transpose() * m_ * s); }

  friend bool operator==(const SymMatrix&, const SymMatrix&) = default;

 private:
  SquareMatrix<R> m_;
};

using QMatrix = SquareMatrix<Rational>;
using QSymMatrix = SymMatrix<Rational>;

/// Q_m(k;c): identity with the (k,k) entry replaced by c (0-based k).
template <RingElement R>
SquareMatrix<R> scale_matrix(std::size_t m, std::size_t k, const R& c) {
  auto q = SquareMatrix<R>::identity(m);
  q(k, k) = c;
  return q;
}

/// R_m(k,l;c): identity plus c at (k,l), k != l (0-based).
template <RingElement R>
SquareMatrix<R> shear_matrix(std::size_t m, std::size_t k, std::size_t l, const R& c) {
  if (k == l) fail(Errc::BadArgument, "shear needs distinct indices");
  auto r = SquareMatrix<R>::identity(m);
  r(k, l) = c;
  return r;
}

/// J_n: ones on the anti-diagonal.
template <RingElement R>
SquareMatrix<R> anti_identity(std::size_t n) {
  SquareMatrix<R> j(n);
  for (std::size_t i = 0; i < n; ++i) j(i, n - 1 - i) = R::one();
  return j;
}

/// Fraction-free (Bareiss) determinant with row pivoting. Needs an exact
/// division `exact_div(a, b)` in the ring.
template <RingElement R>
R determinant(SquareMatrix<R> a) {
  const std::size_t n = a.order();
  if (n == 0) return R::one();
  bool negate = false;
  R prev = R::one();
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k).is_zero()) {
      std::size_t p = k + 1;
      while (p < n && a(p, k).is_zero()) ++p;
      if (p == n) return R();
      for (std::size_t j = k; j < n; ++j) std::swap(a(k, j), a(p, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = exact_div(a(i, j) * a(k, k) - a(i, k) * a(k, j), prev);
      }
      a(i, k) = R();
    }
    prev = a(k, k);
  }
  R d = a(n - 1, n - 1);
  return negate ? -d : d;
}

/// Rank by fraction-free elimination with full column search.
template <RingElement R>
std::size_t rank(SquareMatrix<R> a) {
  const std::size_t n = a.order();
  std::size_t r = 0;
  R prev = R::one();
  for (std::size_t col = 0; col < n && r < n; ++col) {
    std::size_t p = r;
    while (p < n && a(p, col).is_zero()) ++p;
    if (p == n) continue;
    for (std::size_t j = 0; j < n; ++j) std::swap(a(r, j), a(p, j));
    for (std::size_t i = r + 1; i < n; ++i) {
      for (std::size_t j = col + 1; j < n; ++j) {
        a(i, j) = exact_div(a(i, j) * a(r, col) - a(i, col) * a(r, j), prev);
      }
      a(i, col) = R();
    }
    prev = a(r, col);
    ++r;
  }
  return r;
}

}  // namespace bezroot
