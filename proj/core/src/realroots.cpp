#include "bezroot/realroots.hpp"

#include "bezroot/error.hpp"

#include <algorithm>

namespace bezroot {

namespace {

void require_nonzero(const QPoly& f) {
  if (f.is_zero()) fail(Errc::ZeroPolynomial, "real-root operations need a nonzero polynomial");
}

/// Sturm chain of a square-free polynomial with cached evaluation helpers.
class SturmChain {
 public:
  explicit SturmChain(const QPoly& square_free) : seq_(sturm_sequence(square_free)) {}

  const QPoly& base() const { return seq_.front(); }

  std::size_t variations_at(const Rational& a) const {
    int last = 0;
    std::size_t v = 0;
    for (const auto& p : seq_) {
      const int s = p.eval(a).sign();
      if (s == 0) continue;
      if (last != 0 && s != last) ++v;
      last = s;
    }
    return v;
  }

  std::size_t variations_at_infinity(bool positive) const {
    int last = 0;
    std::size_t v = 0;
    for (const auto& p : seq_) {
      int s = p.lead().sign();
      if (!positive && p.deg() % 2 == 1) s = -s;
      if (last != 0 && s != last) ++v;
      last = s;
    }
    return v;
  }

  std::size_t count(const Bound& lo, const Bound& hi) const {
    const std::size_t vlo = lo ? variations_at(*lo) : variations_at_infinity(false);
    const std::size_t vhi = hi ? variations_at(*hi) : variations_at_infinity(true);
    return vlo >= vhi ? vlo - vhi : 0;
  }

 private:
  std::vector<QPoly> seq_;
};

IsolatingInterval refine_with(const SturmChain& chain, IsolatingInterval iv, const Rational& max_width) {
  const Rational half(1, 2);
  while (!iv.exact && iv.width() > max_width) {
    const Rational mid = (iv.lo + iv.hi) * half;
    if (chain.base().eval(mid).is_zero()) return {mid, mid, true};
    if (chain.count(iv.lo, mid) >= 1) {
      iv.hi = mid;
    } else {
      iv.lo = mid;
    }
  }
  return iv;
}

void bisect(const SturmChain& chain, const Rational& lo, const Rational& hi, std::vector<IsolatingInterval>& out) {
  const std::size_t k = chain.count(lo, hi);
  if (k == 0) return;
  const Rational mid = (lo + hi) * Rational(1, 2);
  if (k == 1) {
    if (chain.base().eval(hi).is_zero()) {
      out.push_back({hi, hi, true});
    } else if (chain.base().eval(mid).is_zero()) {
      out.push_back({mid, mid, true});
    } else {
      out.push_back({lo, hi, false});
    }
    return;
  }
  bisect(chain, lo, mid, out);
  bisect(chain, mid, hi, out);
}

}  // namespace

std::vector<QPoly> sturm_sequence(const QPoly& f) {
  require_nonzero(f);
  std::vector<QPoly> seq{f};
  QPoly next = derivative(f);
  while (!next.is_zero()) {
    seq.push_back(next);
    const auto& a = seq[seq.size() - 2];
    const auto& b = seq.back();
    next = -divrem(a, b).remainder;
  }
  return seq;
}

QPoly square_free_part(const QPoly& f) {
  require_nonzero(f);
  const QPoly g = gcd(f, derivative(f));
  if (g.is_zero() || g.is_constant()) return f;
  return divrem(f, g).quotient;
}

std::size_t count_real_roots(const QPoly& f, const Bound& lo, const Bound& hi) {
  require_nonzero(f);
  if (lo && hi && *hi <= *lo) return 0;
  const QPoly sf = square_free_part(f);
  if (sf.is_constant()) return 0;
  return SturmChain(sf).count(lo, hi);
}

Rational cauchy_bound(const QPoly& f) {
  require_nonzero(f);
  const Rational lead = f.lead().abs();
  Rational best;
  for (std::size_t i = 0; i + 1 < f.coeffs().size(); ++i) best = std::max(best, f.coeffs()[i].abs());
  return Rational(1) + best / lead;
}

std::vector<IsolatingInterval> isolate_real_roots(const QPoly& f, const std::optional<Rational>& max_width) {
  require_nonzero(f);
  const QPoly sf = square_free_part(f);
  std::vector<IsolatingInterval> out;
  if (sf.is_constant()) return out;
  const SturmChain chain(sf);
  const Rational bound = cauchy_bound(sf);
  bisect(chain, -bound, bound, out);
  if (max_width) {
    for (auto& iv : out) iv = refine_with(chain, iv, *max_width);
  }
  return out;
}

IsolatingInterval refine(const QPoly& f, IsolatingInterval iv, const Rational& max_width) {
  require_nonzero(f);
  if (max_width.sign() <= 0) fail(Errc::BadArgument, "refinement width must be positive");
  const QPoly sf = square_free_part(f);
  if (sf.is_constant()) fail(Errc::BadArgument, "polynomial has no real roots to refine");
  return refine_with(SturmChain(sf), iv, max_width);
}

namespace {

Rational strict_upper_max_root(const QPoly& f) {
  const auto roots = isolate_real_roots(f);
  if (roots.empty()) return Rational(1);
  IsolatingInterval top = roots.back();
  if (!top.exact) top = refine(f, top, Rational(1, 2));
  if (top.exact) return top.hi + Rational(1);
  return top.hi;
}

}  // namespace

Rational strict_upper_rational(const QPoly& f, BoundMode mode) {
  require_nonzero(f);
  const Rational up = strict_upper_max_root(f);
  if (mode == BoundMode::max_root) return up;
  return std::max(up, strict_upper_max_root(f.reflect()));
}

bool strictly_above_roots(const QPoly& f, const Rational& xi, BoundMode mode) {
  require_nonzero(f);
  if (f.eval(xi).is_zero() || count_real_roots(f, xi, std::nullopt) != 0) return false;
  if (mode == BoundMode::max_root) return true;
  const Rational neg = -xi;
  if (f.eval(neg).is_zero()) return false;
  return count_real_roots(f, std::nullopt, neg) == 0;
}

}  // namespace bezroot
