#include "bezroot/family.hpp"

#include "bezroot/error.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <random>
#include <thread>

namespace bezroot {

bool is_separable(const QPoly& g) {
  if (g.is_zero()) return false;
  if (g.deg() <= 1) return true;
  return !discriminant(g).is_zero();
}

void validate(const FamilySpec& spec) {
  const QPoly g = spec.g();
  if (spec.r.empty() || spec.r_s().is_zero()) fail(Errc::DegenerateFamily, "leading coefficient r_s is zero");
  if (g.deg() < 1) fail(Errc::DegreeTooSmall, "g_r must have degree >= 1");
  if (spec.n <= g.deg()) fail(Errc::DegreeOrder, "need n > s, got " + spec.describe());
  if (!is_separable(g)) fail(Errc::NotSeparable, "g_r has a repeated root: " + spec.describe());
}

FamilyBuild build_family(std::size_t n, const QPoly& g) {
  FamilyBuild out;
  out.spec.n = n;
  out.spec.r = g.coeffs();
  validate(out.spec);
  out.gamma = count_real_roots(g);
  return out;
}

QPoly p_of_t(const FamilySpec& spec) {
  validate(spec);
  return determinant(bezout_of(spec.f_symbolic(), spec.n).matrix());
}

AlphaR alpha_r(const FamilySpec& spec, const Rational& width) {
  const QPoly p = p_of_t(spec);
  if (p.is_zero()) fail(Errc::IdenticallyZero, "P_r(t) vanishes identically for " + spec.describe());
  const auto roots = isolate_real_roots(p);
  if (roots.empty()) fail(Errc::IdenticallyZero, "P_r(t) has no real root for " + spec.describe());
  AlphaR out;
  out.alpha_interval = roots.back().exact ? roots.back() : refine(p, roots.back(), width);
  out.witness_above = out.alpha_interval.exact ? out.alpha_interval.hi + Rational(1) : out.alpha_interval.hi;
  return out;
}

std::size_t predicted_count(std::size_t gamma, std::size_t n, std::size_t s, int sign_rs) {
  if ((n - s) % 2 == 1) return gamma + 1;
  return sign_rs > 0 ? gamma : gamma + 2;
}

namespace {

/// The polynomial whose real roots the threshold must clear.
QPoly threshold_poly(const FamilySpec& spec, BoundMode mode) {
  if (mode == BoundMode::max_root) {
    QPoly p = p_of_t(spec);
    if (p.is_zero()) fail(Errc::IdenticallyZero, "P_r(t) vanishes identically for " + spec.describe());
    return p;
  }
  return disc_in_t(spec).full;
}

Prediction predict_with(const FamilySpec& spec, BoundMode mode, const QPoly& bound_poly) {
  Prediction out;
  out.gamma = count_real_roots(spec.g());
  out.parity = (spec.n - spec.s()) % 2 == 1 ? Parity::odd : Parity::even;
  out.sign_rs = spec.r_s().sign();
  out.predicted_count = predicted_count(out.gamma, spec.n, spec.s(), out.sign_rs);
  out.threshold = strict_upper_rational(bound_poly, mode);
  out.threshold_mode = mode;
  return out;
}

XiCheck check_xi(const FamilySpec& spec, const Rational& xi, std::size_t predicted) {
  XiCheck c;
  c.xi = xi;
  const QPoly f = spec.f_at(xi);
  c.sturm_count = count_real_roots(f);
  c.bezout_signature = inertia(bezout_of(f)).signature();
  c.matches = c.sturm_count == predicted && c.bezout_signature == static_cast<long>(predicted);
  return c;
}

}  // namespace

Prediction predict(const FamilySpec& spec, BoundMode mode) {
  validate(spec);
  return predict_with(spec, mode, threshold_poly(spec, mode));
}

VerifyReport verify_prediction(const FamilySpec& spec, const std::vector<Rational>& xis, BoundMode mode) {
  validate(spec);
  const QPoly bound_poly = threshold_poly(spec, mode);
  VerifyReport out;
  out.prediction = predict_with(spec, mode, bound_poly);
  for (const auto& xi : xis) {
    if (!strictly_above_roots(bound_poly, xi, mode))
      fail(Errc::ThresholdViolation, "xi = " + xi.str() + " is not above the threshold for " + spec.describe());
  }
  out.passed = true;
  for (const auto& xi : xis) {
    out.checks.push_back(check_xi(spec, xi, out.prediction.predicted_count));
    out.passed = out.passed && out.checks.back().matches;
  }
  return out;
}

SymMatrix<Rational> bbar_matrix(const FamilySpec& spec) {
  validate(spec);
  return bbar_from_coeffs(spec.n, spec.r);
}

QtPoly phi_charpoly_u(std::size_t s, std::size_t n) {
  if (s < 1) fail(Errc::OutOfRange, "s must be >= 1");
  if (n <= s) fail(Errc::DegreeOrder, "need n > s");
  std::vector<QPoly> u(s + 1);
  u[0] = QPoly::one();
  u[1] = QPoly::x();
  if (s > 1) u[s] = QPoly::one();
  const auto bbar = bbar_from_coeffs(n, u);
  return charpoly(bbar.matrix());
}

namespace {

Rational binomial(long a, long b) {
  if (b < 0 || b > a) return Rational(0);
  Rational out(1);
  for (long i = 1; i <= b; ++i) out = out * Rational(a - b + i, i);
  return out;
}

Rational rpow(const Rational& x, long e) {
  Rational out(1);
  for (long i = 0; i < e; ++i) out *= x;
  return out;
}

}  // namespace

LeadingTerm leading_term_h(std::size_t s_, std::size_t n_, std::size_t k_) {
  if (s_ < 3) fail(Errc::OutOfRange, "closed-form leading terms need s >= 3");
  if (n_ <= s_) fail(Errc::DegreeOrder, "need n > s");
  if (k_ < 1 || k_ > s_) fail(Errc::OutOfRange, "k must lie in 1..s");
  const long s = static_cast<long>(s_);
  const long n = static_cast<long>(n_);
  const long k = static_cast<long>(k_);
  const Rational m = -Rational((s - 1) * (s - 1));
  const Rational lead_ratio = -Rational(n - 1, n);
  const Rational top = Rational(n - s, n) * rpow(Rational(s - 1), s - 1);

  LeadingTerm out;
  if (s % 2 == 1) {
    if (k == s) {
      out = {k_, (((s - 3) / 2) % 2 ? -top : top), "a2"};
    } else if (k % 2 == 1) {
      out = {k_ + 1, lead_ratio * binomial((s - 3) / 2, (k - 1) / 2) * rpow(m, (k - 1) / 2), "a1"};
    } else {
      out = {k_ + 1, lead_ratio * binomial((s - 3) / 2, (k - 2) / 2) * rpow(m, (k - 2) / 2) * Rational(s - 1), "a3"};
    }
  } else {
    if (k == s) {
      out = {k_, (((s - 2) / 2) % 2 ? -top : top), "b3"};
    } else if (k % 2 == 1) {
      out = {k_ + 1, lead_ratio * binomial((s - 2) / 2, (k - 1) / 2) * rpow(m, (k - 1) / 2), "b1"};
    } else {
      const long q = k + s * s - 4 * s + 2;
      const long cubic = -s * s * s + 4 * s * s - 5 * s + 2;
      const Rational c = Rational(s) * Rational((k * q + cubic) * n - k * q) / Rational(n * k * (s - 2));
      out = {k_, c * binomial((s - 2) / 2, (k - 2) / 2) * rpow(m, (k - 2) / 2), "b2"};
    }
  }
  return out;
}

BlockMatrices block_matrices_D(std::size_t n, std::size_t s, const Rational& r_s, const Rational& xi) {
  if (n <= s) fail(Errc::DegreeOrder, "need n > s");
  if (xi.sign() <= 0) fail(Errc::BadSign, "xi must be positive, got " + xi.str());
  if (r_s.is_zero()) fail(Errc::BadArgument, "r_s must be nonzero");
  const std::size_t m = n - s;
  const Rational c = -Rational(static_cast<long>(m)) * r_s * xi;

  QMatrix d(m);
  d(0, 0) = Rational(1);
  for (std::size_t i = 1; i < m; ++i) d(i, m - i) = c;

  QMatrix dbar(m);
  dbar(0, 0) = Rational(1);
  std::size_t i = 1;
  if (m % 2 == 0) dbar(i, i) = c, ++i;
  for (; i + 1 < m; i += 2) dbar(i, i + 1) = dbar(i + 1, i) = c;
  return {QSymMatrix(std::move(d)), QSymMatrix(std::move(dbar))};
}

Inertia block_signature_D(std::size_t n, std::size_t s, const Rational& r_s, const Rational& xi) {
  return inertia(block_matrices_D(n, s, r_s, xi).d);
}

Lemma52Report lemma52_check(const FamilySpec& spec, const Rational& xi) {
  validate(spec);
  if (xi.is_zero()) fail(Errc::ZeroXi, "xi must be nonzero");
  const Rational xi2 = xi * xi;
  const auto scale = [&](const Rational& v) { return xi2 * v; };
  Lemma52Report out;
  out.b_inertia = inertia(bezout_of(spec.g(), spec.s()).map(scale));
  out.bbar_inertia = inertia(bbar_matrix(spec).map(scale));
  out.gamma = count_real_roots(spec.g());
  out.passed = out.b_inertia == out.bbar_inertia && out.b_inertia.signature() == static_cast<long>(out.gamma);
  return out;
}

SweepStepReport sweep_step_check(const FamilySpec& spec, const Rational& xi) {
  validate(spec);
  if (xi.is_zero()) fail(Errc::ZeroXi, "xi must be nonzero");
  const std::size_t n = spec.n;
  const std::size_t s = spec.s();
  const std::size_t m = n - s;
  const QSymMatrix a = bezout_of(spec.f_at(xi), n);

  SweepStepReport out;
  out.structure_matches = a.matrix() == predicted_bezout_structure(spec, xi);

  out.first_row_matches = a(0, 0) == Rational(static_cast<long>(n));
  for (std::size_t j = 1; j < n; ++j) {
    Rational want;
    if (j >= m) want = Rational(static_cast<long>(n - j)) * spec.r[n - j] * xi;  // column l_k - 1, k = j - m
    out.first_row_matches = out.first_row_matches && a(0, j) == want;
  }

  QMatrix sweep = QMatrix::identity(n);
  const Rational inv_n(1, static_cast<long>(n));
  for (std::size_t j = m; j < n; ++j) sweep = sweep * shear_matrix<Rational>(n, 0, j, -a(0, j) * inv_n);
  out.swept = a.congruence(sweep);
  const QSymMatrix& a1 = out.swept;

  out.first_row_cleared = a1(0, 0) == Rational(static_cast<long>(n));
  for (std::size_t j = 1; j < n; ++j) out.first_row_cleared = out.first_row_cleared && a1(0, j).is_zero();

  out.middle_rows_unchanged = true;
  for (std::size_t i = 1; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      out.middle_rows_unchanged = out.middle_rows_unchanged && (j == 0 || a1(i, j) == a(i, j));

  const auto b = bezout_of(spec.g(), s);
  const auto bbar = bbar_matrix(spec);
  const Rational xi2 = xi * xi;
  out.c_block_matches_bbar = true;
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j)
      out.c_block_matches_bbar = out.c_block_matches_bbar &&
                                 a1(m + i, m + j) - xi2 * bbar(i, j) == a(m + i, m + j) - xi2 * b(i, j);

  out.before = inertia(a);
  out.after = inertia(a1);
  out.passed = out.structure_matches && out.first_row_matches && out.first_row_cleared && out.middle_rows_unchanged &&
               out.c_block_matches_bbar && out.before == out.after;
  return out;
}

TotallyComplexResult totally_complex_construct(std::size_t n, const QPoly& g) {
  if (g.is_zero() || g.deg() < 1) fail(Errc::DegreeTooSmall, "g must have degree >= 1");
  const std::size_t s = g.deg();
  if (n <= s) fail(Errc::DegreeOrder, "need n > deg g");
  if (count_real_roots(g) != 0) fail(Errc::NotTotallyComplex, "g has a real root");
  if (!is_separable(g)) fail(Errc::NotSeparable, "g has a repeated root");
  if ((n - s) % 2 != 0) fail(Errc::BadParity, "n - deg g must be even");
  if (g.lead().sign() <= 0) fail(Errc::BadLeadingSign, "leading coefficient of g must be positive");

  const FamilySpec spec{n, g.coeffs()};
  TotallyComplexResult out;
  out.beta = strict_upper_rational(disc_in_t(spec).full, BoundMode::max_root);
  out.f = spec.f_at(out.beta);
  out.sturm_count = count_real_roots(out.f);
  out.bezout_signature = inertia(bezout_of(out.f)).signature();
  out.certified = out.sturm_count == 0 && out.bezout_signature == 0;
  return out;
}

FamilySpec random_spec(std::size_t n, std::size_t s, std::uint64_t seed, std::size_t trial) {
  if (n <= s || s < 1) fail(Errc::DegreeOrder, "need n > s >= 1");
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(s), static_cast<std::uint32_t>(trial)};
  std::mt19937_64 rng(seq);
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 9);
  FamilySpec spec{n, std::vector<Rational>(s + 1)};
  for (;;) {
    for (auto& c : spec.r) c = Rational(num(rng), den(rng));
    if (!spec.r_s().is_zero() && is_separable(spec.g())) return spec;
  }
}

namespace {

TrialRecord run_trial(const SweepConfig& cfg, std::size_t n, std::size_t s, std::size_t trial) {
  TrialRecord rec;
  rec.n = n;
  rec.s = s;
  rec.trial = trial;
  rec.spec = random_spec(n, s, cfg.seed, trial);
  const auto disc = disc_in_t(rec.spec);
  rec.t_power = disc.t_power;

  const auto report = [&] {
    const QPoly bound_poly = cfg.mode == BoundMode::max_root ? threshold_poly(rec.spec, cfg.mode) : disc.full;
    VerifyReport out;
    out.prediction = predict_with(rec.spec, cfg.mode, bound_poly);
    const Rational w = out.prediction.threshold;
    out.passed = true;
    for (const auto& xi : {w, w + Rational(1), Rational(1000) * w}) {
      out.checks.push_back(check_xi(rec.spec, xi, out.prediction.predicted_count));
      out.passed = out.passed && out.checks.back().matches;
    }
    return out;
  }();
  rec.gamma = report.prediction.gamma;
  rec.predicted = report.prediction.predicted_count;
  rec.witness = report.prediction.threshold;
  rec.checks = report.checks;
  rec.passed = report.passed;

  const auto alpha = alpha_r(rec.spec, Rational(1, 64));
  rec.alpha_probe_xi = alpha.witness_above;
  rec.alpha_probe_matches = check_xi(rec.spec, rec.alpha_probe_xi, rec.predicted).matches;
  return rec;
}

}  // namespace

SweepReport sweep_harness(const SweepConfig& config) {
  if (config.trials < 1) fail(Errc::BadArgument, "trials must be >= 1");
  if (config.n_min < 2 || config.n_max < config.n_min) fail(Errc::BadArgument, "bad n range");
  if (config.s_min < 1) fail(Errc::BadArgument, "s_min must be >= 1");

  struct Task {
    std::size_t n, s, trial;
  };
  std::vector<Task> tasks;
  for (std::size_t n = config.n_min; n <= config.n_max; ++n) {
    const std::size_t s_hi = config.s_max == 0 ? n - 1 : std::min(config.s_max, n - 1);
    for (std::size_t s = config.s_min; s <= s_hi; ++s)
      for (std::size_t i = 0; i < config.trials; ++i) tasks.push_back({n, s, i});
  }

  SweepReport out;
  out.config = config;
  out.trials.resize(tasks.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        out.trials[i] = run_trial(config, tasks[i].n, tasks[i].s, tasks[i].trial);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  const unsigned threads = std::max(1u, config.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (error) std::rethrow_exception(error);

  for (const auto& rec : out.trials) {
    (rec.passed ? out.passed : out.failed)++;
    if (!rec.alpha_probe_matches) ++out.alpha_probe_mismatches;
  }
  return out;
}

}  // namespace bezroot
