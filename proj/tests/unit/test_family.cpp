#include "testkit.hpp"

#include <doctest.h>

using namespace bezroot;
using testkit::Rng;

namespace {

template <class F>
Errc code_of(F&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an exception");
  return Errc::BadArgument;
}

FamilySpec spec_of(std::size_t n, std::initializer_list<Rational> r) { return FamilySpec{n, std::vector<Rational>(r)}; }

}  // namespace

TEST_SUITE("family") {

TEST_CASE("build_family") {
  CHECK(build_family(4, qpoly({1, 0, 1})).gamma == 0);
  CHECK(build_family(3, qpoly({-1, 0, 1})).gamma == 2);
  CHECK(build_family(5, qpoly({0, -1, 0, 1})).spec.s() == 3);
  CHECK(code_of([] { build_family(3, qpoly({1, -2, 1})); }) == Errc::NotSeparable);
  CHECK(code_of([] { build_family(2, qpoly({1, 0, 1})); }) == Errc::DegreeOrder);
  CHECK(code_of([] { build_family(3, qpoly({1})); }) == Errc::DegreeTooSmall);
  CHECK(code_of([] { validate(spec_of(3, {1, 0})); }) == Errc::DegenerateFamily);
}

TEST_CASE("P_r(t) examples") {
  CHECK(p_of_t(spec_of(2, {0, 1})) == qpoly({0, 0, 1}));
  CHECK(p_of_t(spec_of(3, {0, 1})) == qpoly({0, 0, 0, -4}));
  Rng rng(601);
  for (int i = 0; i < 30; ++i) {
    const auto spec = random_spec(static_cast<std::size_t>(testkit::uniform(rng, 2, 6)), 1, 601, i);
    const QPoly p = p_of_t(spec);
    CHECK(p.eval(Rational(0)).is_zero());
    const Rational xi = testkit::rand_rational(rng);
    CHECK(p.eval(xi) == determinant(bezout_of(spec.f_at(xi), spec.n).matrix()));
  }
}

TEST_CASE("alpha_r") {
  const auto a = alpha_r(spec_of(2, {0, 1}));
  CHECK(a.alpha_interval.exact);
  CHECK(a.alpha_interval.hi == Rational(0));
  CHECK(a.witness_above == Rational(1));

  const FamilySpec sp = spec_of(4, {1, 0, 1});
  const auto b = alpha_r(sp);
  CHECK(b.witness_above > b.alpha_interval.hi - Rational(1, 1000000));
  for (const Rational& d : {Rational(0), Rational(1, 3), Rational(5), Rational(1000)})
    CHECK(count_real_roots(sp.f_at(b.witness_above + d)) == 0);

  Rng rng(602);
  for (int i = 0; i < 30; ++i) {
    const auto spec = random_spec(static_cast<std::size_t>(testkit::uniform(rng, 2, 6)), 1, 602, i);
    const auto al = alpha_r(spec);
    CHECK(strictly_above_roots(p_of_t(spec), al.witness_above, BoundMode::max_root));
    CHECK(al.alpha_interval.hi >= Rational(0));
  }
}

TEST_CASE("prediction table") {
  CHECK(predict(spec_of(5, {1, 0, 1})).predicted_count == 1);
  CHECK(predict(spec_of(4, {1, 0, 1})).predicted_count == 0);
  const auto p = predict(spec_of(4, {-1, 0, -1}));
  CHECK(p.predicted_count == 2);
  CHECK(p.parity == Parity::even);
  CHECK(p.sign_rs == -1);
  CHECK(p.threshold_mode == BoundMode::max_abs_root);
  CHECK(predict(spec_of(4, {-1, 0, -1}), BoundMode::max_root).threshold_mode == BoundMode::max_root);
  CHECK(predicted_count(2, 7, 4, 1) == 3);
  CHECK(predicted_count(2, 7, 5, 1) == 2);
  CHECK(predicted_count(2, 7, 5, -1) == 4);
}

TEST_CASE("all-real seed: the count is s+1, s or s+2") {
  Rng rng(603);
  for (std::size_t s = 1; s <= 4; ++s)
    for (std::size_t n = s + 1; n <= s + 3; ++n) {
      const auto roots = testkit::distinct_rationals(rng, s);
      const Rational lead = testkit::rand_nonzero(rng);
      const auto b = build_family(n, testkit::from_roots(roots, {}, lead));
      REQUIRE(b.gamma == s);
      const auto p = predict(b.spec);
      const std::size_t want = (n - s) % 2 ? s + 1 : (lead.sign() > 0 ? s : s + 2);
      REQUIRE(p.predicted_count == want);
      REQUIRE(verify_prediction(b.spec, {p.threshold, p.threshold * Rational(10)}).passed);
    }
}

TEST_CASE("verify_prediction examples") {
  auto r = verify_prediction(spec_of(4, {1, 0, 1}), {10});
  CHECK(r.passed);
  CHECK(r.checks[0].sturm_count == 0);
  r = verify_prediction(spec_of(5, {1, 0, 1}), {7});
  CHECK(r.passed);
  CHECK(r.checks[0].sturm_count == 1);
  r = verify_prediction(spec_of(3, {0, 1}), {1});
  CHECK(r.passed);
  CHECK(r.checks[0].sturm_count == 1);
  CHECK(r.checks[0].bezout_signature == 1);
  CHECK(code_of([] { verify_prediction(spec_of(4, {1, 0, 1}), {Rational(1)}); }) == Errc::ThresholdViolation);
  CHECK(code_of([] { verify_prediction(spec_of(3, {0, 1}), {Rational(0)}); }) == Errc::ThresholdViolation);
}

TEST_CASE("count is stable above the threshold") {
  Rng rng(604);
  for (int i = 0; i < 40; ++i) {
    const std::size_t n = static_cast<std::size_t>(testkit::uniform(rng, 2, 7));
    const std::size_t s = static_cast<std::size_t>(testkit::uniform(rng, 1, static_cast<long>(n) - 1));
    const auto spec = random_spec(n, s, 604, i);
    const auto p = predict(spec);
    std::vector<Rational> xis;
    for (Rational xi = p.threshold; xi < p.threshold * Rational(1000); xi = xi * Rational(3) + Rational(1, 7))
      xis.push_back(xi);
    REQUIRE(verify_prediction(spec, xis).passed);
  }
}

TEST_CASE("B-bar examples") {
  const auto b1 = bbar_matrix(spec_of(2, {1, 1}));
  CHECK(b1.order() == 1);
  CHECK(b1(0, 0) == Rational(1, 2));
  const auto b2 = bbar_matrix(spec_of(4, {1, 1, 1}));
  CHECK(b2(0, 0) == Rational(1));
  CHECK(b2(0, 1) == Rational(1, 2));
  CHECK(b2(1, 0) == Rational(1, 2));
  CHECK(b2(1, 1) == Rational(-5, 4));
}

TEST_CASE("B-bar first row") {
  Rng rng(605);
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = static_cast<std::size_t>(testkit::uniform(rng, 3, 9));
    const std::size_t s = static_cast<std::size_t>(testkit::uniform(rng, 1, static_cast<long>(n) - 1));
    const auto spec = random_spec(n, s, 605, i);
    const auto bb = bbar_matrix(spec);
    for (std::size_t j = 1; j <= s; ++j) {
      const Rational want = Rational(static_cast<long>(s - j + 1)) *
                            (Rational(1) - Rational(static_cast<long>(s), static_cast<long>(n))) * spec.r_s() *
                            spec.r[s - j + 1];
      REQUIRE(bb(0, j - 1) == want);
    }
  }
}

TEST_CASE("Phi for s = 2 and s = 1") {
  for (long n = 3; n <= 9; ++n) {
    const QtPoly phi = phi_charpoly_u(2, static_cast<std::size_t>(n));
    CHECK(phi.coeff(1) == QPoly({Rational(4, n), Rational(0), -Rational(n - 1, n)}));
    CHECK(phi.coeff(0) == QPoly({Rational(8 - 4 * n, n), Rational(0), Rational(n - 2, n)}));
  }
  const QtPoly phi1 = phi_charpoly_u(1, 4);
  CHECK(phi1.coeff(0) == QPoly({Rational(0), Rational(0), Rational(-3, 4)}));
  CHECK(code_of([] { phi_charpoly_u(0, 3); }) == Errc::OutOfRange);
  CHECK(code_of([] { phi_charpoly_u(3, 3); }) == Errc::DegreeOrder);
}

TEST_CASE("Phi constant terms of the worked examples") {
  CHECK(phi_charpoly_u(7, 10).coeff(0) == QPoly({Rational(2470629, 10), 0, 0, 0, 0, 0, 0, Rational(69984, 5)}));
  CHECK(phi_charpoly_u(8, 12).coeff(0) ==
        QPoly({Rational(16777216, 3), 0, 0, 0, 0, 0, 0, 0, Rational(-823543, 3)}));
}

TEST_CASE("leading terms") {
  const auto a2 = leading_term_h(7, 10, 7);
  CHECK(a2.case_label == "a2");
  CHECK(a2.degree == 7);
  CHECK(a2.coefficient == Rational(69984, 5));
  const auto b3 = leading_term_h(8, 12, 8);
  CHECK(b3.case_label == "b3");
  CHECK(b3.degree == 8);
  CHECK(b3.coefficient == Rational(-823543, 3));
  CHECK(code_of([] { leading_term_h(2, 4, 1); }) == Errc::OutOfRange);
  CHECK(code_of([] { leading_term_h(5, 8, 0); }) == Errc::OutOfRange);
  CHECK(code_of([] { leading_term_h(5, 8, 6); }) == Errc::OutOfRange);
  for (std::size_t s = 3; s <= 9; ++s)
    for (std::size_t n = s + 1; n <= s + 4; ++n) {
      const QtPoly phi = phi_charpoly_u(s, n);
      for (std::size_t k = 1; k <= s; ++k) {
        const auto lt = leading_term_h(s, n, k);
        CHECK(!lt.coefficient.is_zero());
        CHECK(lt.degree >= 1);
        const QPoly h = phi.coeff(s - k);
        REQUIRE(h.deg() == lt.degree);
        REQUIRE(h.lead() == lt.coefficient);
      }
    }
}

TEST_CASE("D block signatures") {
  CHECK(block_signature_D(3, 2, Rational(5), Rational(1)).signature() == 1);
  CHECK(block_signature_D(4, 2, Rational(1), Rational(1)).signature() == 0);
  CHECK(block_signature_D(4, 2, Rational(-1), Rational(1)).signature() == 2);
  for (std::size_t m = 1; m <= 8; ++m)
    for (int sg : {1, -1}) {
      const auto bm = block_matrices_D(m + 3, 3, Rational(sg * 2, 3), Rational(5, 2));
      REQUIRE(bm.d.order() == m);
      const Inertia in = inertia(bm.d);
      REQUIRE(in == inertia(bm.dbar));
      REQUIRE(in.zero == 0);
      REQUIRE(in.signature() == (m % 2 ? 1 : (sg > 0 ? 0 : 2)));
    }
  CHECK(code_of([] { block_signature_D(4, 2, Rational(1), Rational(0)); }) == Errc::BadSign);
  CHECK(code_of([] { block_signature_D(4, 2, Rational(1), Rational(-1)); }) == Errc::BadSign);
}

TEST_CASE("B and B-bar inertia on fixed specs") {
  auto r = lemma52_check(spec_of(4, {-1, 0, 1}), Rational(1));
  CHECK(r.passed);
  CHECK(r.b_inertia.signature() == 2);
  r = lemma52_check(spec_of(4, {1, 0, 1}), Rational(3));
  CHECK(r.passed);
  CHECK(r.bbar_inertia.signature() == 0);
  r = lemma52_check(spec_of(5, {0, -1, 0, 1}), Rational(-2));
  CHECK(r.passed);
  CHECK(r.gamma == 3);
  CHECK(r.b_inertia == lemma52_check(spec_of(5, {0, -1, 0, 1}), Rational(2)).b_inertia);
  CHECK(code_of([] { lemma52_check(spec_of(4, {1, 0, 1}), Rational(0)); }) == Errc::ZeroXi);
}

TEST_CASE("B and B-bar inertia on random specs") {
  Rng rng(606);
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = static_cast<std::size_t>(testkit::uniform(rng, 2, 9));
    const std::size_t s = static_cast<std::size_t>(testkit::uniform(rng, 1, static_cast<long>(n) - 1));
    REQUIRE(lemma52_check(random_spec(n, s, 606, i), testkit::rand_nonzero(rng)).passed);
  }
}

TEST_CASE("first sweep step") {
  Rng rng(607);
  for (std::size_t n = 2; n <= 8; ++n)
    for (std::size_t s = 1; s < n; ++s)
      for (std::size_t trial = 0; trial < 3; ++trial) {
        const auto spec = random_spec(n, s, 607, trial);
        const Rational xi = trial == 0 ? Rational(2) : testkit::rand_nonzero(rng);
        const auto r = sweep_step_check(spec, xi);
        REQUIRE(r.structure_matches);
        REQUIRE(r.first_row_matches);
        REQUIRE(r.first_row_cleared);
        REQUIRE(r.middle_rows_unchanged);
        REQUIRE(r.c_block_matches_bbar);
        REQUIRE(r.before == r.after);
        REQUIRE(r.passed);
      }
  CHECK(code_of([] { sweep_step_check(spec_of(4, {1, 0, 1}), Rational(0)); }) == Errc::ZeroXi);
}

TEST_CASE("signature splits into the D block and the B-bar block") {
  // Above the threshold the Bezoutian signature equals that of D plus gamma.
  Rng rng(608);
  for (int i = 0; i < 40; ++i) {
    const std::size_t n = static_cast<std::size_t>(testkit::uniform(rng, 2, 8));
    const std::size_t s = static_cast<std::size_t>(testkit::uniform(rng, 1, static_cast<long>(n) - 1));
    const auto spec = random_spec(n, s, 608, i);
    const auto p = predict(spec);
    const long d = block_signature_D(n, s, spec.r_s(), p.threshold).signature();
    const long total = inertia(bezout_of(spec.f_at(p.threshold))).signature();
    REQUIRE(total == d + static_cast<long>(p.gamma));
  }
}

TEST_CASE("totally complex construction") {
  auto r = totally_complex_construct(4, qpoly({1, 0, 1}));
  CHECK(r.certified);
  CHECK(r.beta > Rational(0));
  CHECK(r.f == qpoly({r.beta, 0, r.beta, 0, 1}));
  r = totally_complex_construct(6, qpoly({1, 0, 1, 0, 1}));
  CHECK(r.certified);
  CHECK(r.sturm_count == 0);
  CHECK(r.bezout_signature == 0);
  CHECK(code_of([] { totally_complex_construct(5, qpoly({1, 0, 1})); }) == Errc::BadParity);
  CHECK(code_of([] { totally_complex_construct(4, qpoly({-1, 0, 1})); }) == Errc::NotTotallyComplex);
  CHECK(code_of([] { totally_complex_construct(4, qpoly({-1, 0, -1})); }) == Errc::BadLeadingSign);
  CHECK(code_of([] { totally_complex_construct(6, qpoly({1, 0, 2, 0, 1})); }) == Errc::NotSeparable);
  CHECK(code_of([] { totally_complex_construct(2, qpoly({1, 0, 1})); }) == Errc::DegreeOrder);
}

TEST_CASE("random specs are valid and reproducible") {
  for (std::size_t n = 2; n <= 8; ++n)
    for (std::size_t s = 1; s < n; ++s) {
      const auto a = random_spec(n, s, 9, 3);
      CHECK(a == random_spec(n, s, 9, 3));
      CHECK(a.s() == s);
      CHECK_NOTHROW(validate(a));
      for (const auto& c : a.r) {
        CHECK(c.abs() <= Rational(9));
        CHECK(c.denominator() <= 9);
      }
    }
}

TEST_CASE("sweep harness") {
  SweepConfig cfg;
  cfg.n_max = 5;
  cfg.trials = 3;
  cfg.seed = 7;
  const auto a = sweep_harness(cfg);
  CHECK(a.all_passed());
  CHECK(a.trials.size() == 3 * (1 + 2 + 3 + 4));
  cfg.threads = 4;
  const auto b = sweep_harness(cfg);
  REQUIRE(a.trials.size() == b.trials.size());
  for (std::size_t i = 0; i < a.trials.size(); ++i) {
    CHECK(a.trials[i].spec == b.trials[i].spec);
    CHECK(a.trials[i].witness == b.trials[i].witness);
    CHECK(a.trials[i].passed == b.trials[i].passed);
  }
  cfg.trials = 0;
  CHECK(code_of([&] { sweep_harness(cfg); }) == Errc::BadArgument);
}

}
