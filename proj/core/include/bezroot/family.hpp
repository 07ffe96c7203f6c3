#pragma once

// The family f_r(t; x) = x^n + t * g_r(x): real-root count prediction beyond
// the discriminant threshold, plus the matrices used to justify it (B-bar,
// the Phi characteristic polynomial, the D block, the first sweep).

#include "bezroot/bezout.hpp"
#include "bezroot/family_spec.hpp"
#include "bezroot/inertia.hpp"
#include "bezroot/matrix.hpp"
#include "bezroot/polynomial.hpp"
#include "bezroot/realroots.hpp"
#include "bezroot/resdisc.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <type_traits>
#include <vector>

namespace bezroot {

struct FamilyBuild {
  FamilySpec spec;
  std::size_t gamma = 0;  ///< distinct real roots of g
};

/// True for deg g <= 1, otherwise D_g != 0.
bool is_separable(const QPoly& g);

/// Validates n > deg g >= 1 and separability; computes gamma.
FamilyBuild build_family(std::size_t n, const QPoly& g);

/// Re-checks a spec's invariants (throws the same errors as build_family).
void validate(const FamilySpec& spec);

/// P_r(t) = det M_n(f_r(t; x)), by Bareiss elimination over Q[t].
QPoly p_of_t(const FamilySpec& spec);

struct AlphaR {
  IsolatingInterval alpha_interval;  ///< largest real root of P_r
  Rational witness_above;            ///< strictly above alpha_r
};

/// Locates alpha_r = max real root of P_r(t). The interval is refined to
/// `width`; the witness is its right end (alpha_r + 1 when alpha_r is a
/// rational hit exactly).
AlphaR alpha_r(const FamilySpec& spec, const Rational& width = Rational(1, 2));

enum class Parity { odd, even };

struct Prediction {
  std::size_t gamma = 0;
  Parity parity = Parity::odd;  ///< of n - s
  int sign_rs = 1;
  std::size_t predicted_count = 0;
  Rational threshold;  ///< a rational strictly above the exact bound
  BoundMode threshold_mode = BoundMode::max_abs_root;
};

/// gamma+1 for n-s odd, gamma for n-s even with r_s > 0, gamma+2 otherwise.
std::size_t predicted_count(std::size_t gamma, std::size_t n, std::size_t s, int sign_rs);

/// max_root uses alpha_r; max_abs_root uses max |real root| of D_{(f,x)}(t).
Prediction predict(const FamilySpec& spec, BoundMode mode = BoundMode::max_abs_root);

struct XiCheck {
  Rational xi;
  std::size_t sturm_count = 0;
  long bezout_signature = 0;
  bool matches = false;
};

struct VerifyReport {
  Prediction prediction;
  std::vector<XiCheck> checks;
  bool passed = false;
};

/// Counts the real roots of f_r(xi; x) by Sturm and by Bezoutian signature
/// for each xi. Every xi must lie strictly above the exact bound of `mode`
/// (ThresholdViolation otherwise).
VerifyReport verify_prediction(const FamilySpec& spec, const std::vector<Rational>& xis,
                               BoundMode mode = BoundMode::max_abs_root);

/// B-bar for arbitrary coefficients: M_s(g) minus the rank-one correction
/// (s-i+1)(s-j+1)/n * c_{s-i+1} c_{s-j+1} (1-based i, j).
template <RingElement R>
SymMatrix<R> bbar_from_coeffs(std::size_t n, const std::vector<R>& coeffs) {
  const UniPoly<R> g(coeffs);
  const std::size_t s = g.deg();
  const auto b = bezout_of(g, s);
  SquareMatrix<R> out = b.matrix();
  const R inv_n = [&] {
    if constexpr (std::is_same_v<R, Rational>) {
      return Rational(1, static_cast<long>(n));
    } else {
      return R(Rational(1, static_cast<long>(n)));
    }
  }();
  for (std::size_t i = 1; i <= s; ++i) {
    for (std::size_t j = 1; j <= s; ++j) {
      const R w = R::from_int(static_cast<long>((s - i + 1) * (s - j + 1)));
      out(i - 1, j - 1) = out(i - 1, j - 1) - inv_n * w * g.coeff(s - i + 1) * g.coeff(s - j + 1);
    }
  }
  return SymMatrix<R>(std::move(out));
}

SymMatrix<Rational> bbar_matrix(const FamilySpec& spec);

/// Characteristic polynomial Phi_u(x) of B-bar for g_u = x^s + t1 x + 1
/// (g_u = t1 x + 1 when s = 1), with t1 symbolic; coefficients lie in Q[t1].
QtPoly phi_charpoly_u(std::size_t s, std::size_t n);

struct LeadingTerm {
  std::size_t degree = 0;
  Rational coefficient;
  std::string case_label;  ///< "a1", "a2", "a3", "b1", "b2" or "b3"
};

/// Closed-form leading term (in t1) of the coefficient of x^{s-k} in Phi_u,
/// by parity of s and k; valid for s >= 3, n > s, 1 <= k <= s.
LeadingTerm leading_term_h(std::size_t s, std::size_t n, std::size_t k);

struct BlockMatrices {
  QSymMatrix d;     ///< anti-diagonal form: 1, then -(n-s) r_s xi on i+j = n-s+2
  QSymMatrix dbar;  ///< 1, [lone diagonal when n-s even], then 2x2 hyperbolic blocks
};

/// The (n-s)x(n-s) upper-left block left after sweeping out the first n-s
/// rows of A_r(xi), in both forms.
BlockMatrices block_matrices_D(std::size_t n, std::size_t s, const Rational& r_s, const Rational& xi);

/// Inertia of the D block; signature 1 (n-s odd), 0 (even, r_s > 0), 2
/// (even, r_s < 0).
Inertia block_signature_D(std::size_t n, std::size_t s, const Rational& r_s, const Rational& xi);

struct Lemma52Report {
  Inertia b_inertia;     ///< of xi^2 B_r
  Inertia bbar_inertia;  ///< of xi^2 B-bar_r
  std::size_t gamma = 0;
  bool passed = false;
};

Lemma52Report lemma52_check(const FamilySpec& spec, const Rational& xi);

/// Entries of A(tau) = M_n(x^n + tau g(x)) predicted from the monomial
/// Bezoutian structure, for tau a number or the symbol t.
template <RingElement R>
SquareMatrix<R> predicted_bezout_structure(const FamilySpec& spec, const R& tau) {
  auto lift = [](const Rational& c) {
    if constexpr (std::is_same_v<R, Rational>) {
      return c;
    } else {
      return R(c);
    }
  };
  const std::size_t n = spec.n;
  const std::size_t s = spec.s();
  SquareMatrix<R> a(n);
  a(0, 0) = R::from_int(static_cast<long>(n));
  for (std::size_t k = 0; k <= s; ++k) {
    const std::size_t l = n - s + k + 2;  // 1-based anti-diagonal i + j = l
    const R rk = lift(spec.r[s - k]);
    if (k < s) {
      const R v = R::from_int(static_cast<long>(s - k)) * rk * tau;
      a(0, l - 2) = a(0, l - 2) + v;
      a(l - 2, 0) = a(l - 2, 0) + v;
    }
    const R w = -(R::from_int(static_cast<long>(l - 2)) * rk * tau);
    for (std::size_t i = 2; i + 2 <= l; ++i) {
      const std::size_t j = l - i;
      if (j < 2 || j > l - 2) continue;
      a(i - 1, j - 1) = a(i - 1, j - 1) + w;
    }
  }
  const auto b = bezout_of(spec.g(), s);
  const R tau2 = tau * tau;
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j) a(n - s + i, n - s + j) = a(n - s + i, n - s + j) + lift(b(i, j)) * tau2;
  return a;
}

struct SweepStepReport {
  bool structure_matches = false;  ///< A(xi) equals the predicted structure
  bool first_row_matches = false;  ///< (1,1) = n, (1, l_k - 1) = (s-k) r_{s-k} xi
  bool first_row_cleared = false;  ///< after the sweep: (n, 0, ..., 0)
  bool middle_rows_unchanged = false;
  bool c_block_matches_bbar = false;  ///< C_1 - xi^2 B-bar == C - xi^2 B
  Inertia before;
  Inertia after;
  QSymMatrix swept;
  bool passed = false;
};

/// First sweep A(xi) -> S^T A(xi) S with S = prod R_n(1, l_k - 1; -a_{1,l_k-1}/n).
SweepStepReport sweep_step_check(const FamilySpec& spec, const Rational& xi);

struct TotallyComplexResult {
  Rational beta;
  QPoly f;
  std::size_t sturm_count = 0;
  long bezout_signature = 0;
  bool certified = false;
};

/// f(beta, x) = x^n + beta g(x) with beta above every real root of
/// D_{(f,x)}(t); certified by a Sturm count and a Bezoutian signature.
TotallyComplexResult totally_complex_construct(std::size_t n, const QPoly& g);

// ---------------------------------------------------------------------------
// Seeded sweep over random specs.

struct SweepConfig {
  std::size_t n_min = 2;
  std::size_t n_max = 8;
  std::size_t s_min = 1;
  std::size_t s_max = 0;  ///< 0 = up to n - 1
  std::size_t trials = 20;
  std::uint64_t seed = 42;
  BoundMode mode = BoundMode::max_abs_root;
  unsigned threads = 1;
};

struct TrialRecord {
  std::size_t n = 0;
  std::size_t s = 0;
  std::size_t trial = 0;
  FamilySpec spec;
  std::size_t gamma = 0;
  std::size_t predicted = 0;
  Rational witness;
  std::vector<XiCheck> checks;
  bool passed = false;
  std::size_t t_power = 0;  ///< exact power of t dividing D_{(f,x)}(t)
  /// Probe just above alpha_r (max_root reading): Sturm counts matched?
  bool alpha_probe_matches = false;
  Rational alpha_probe_xi;
};

struct SweepReport {
  SweepConfig config;
  std::vector<TrialRecord> trials;  ///< ordered by (n, s, trial)
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t alpha_probe_mismatches = 0;
  bool all_passed() const { return failed == 0 && !trials.empty(); }
};

/// Random spec for cell (n, s): numerators in [-9, 9], denominators in
/// [1, 9], resampled until r_s != 0 and g is separable. Depends only on
/// (seed, n, s, trial).
FamilySpec random_spec(std::size_t n, std::size_t s, std::uint64_t seed, std::size_t trial);

SweepReport sweep_harness(const SweepConfig& config);

}  // namespace bezroot
