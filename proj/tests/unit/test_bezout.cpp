#include "testkit.hpp"

#include <doctest.h>

using namespace bezroot;
using testkit::Rng;

namespace {

QMatrix mat(std::initializer_list<std::initializer_list<long>> rows) {
  QMatrix m(rows.size());
  std::size_t i = 0;
  for (const auto& r : rows) {
    std::size_t j = 0;
    for (long v : r) m(i, j++) = Rational(v);
    ++i;
  }
  return m;
}

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an exception");
  return Errc::BadArgument;
}

}  // namespace

TEST_SUITE("bezout") {

TEST_CASE("quadratic Bezoutian") {
  const QPoly f = qpoly({2, 3, 1});  // b = 3, c = 2
  CHECK(bezout_matrix(f, derivative(f), 2).matrix() == mat({{2, 3}, {3, 5}}));
  CHECK(bezout_matrix(f, f, 2).matrix().is_zero());
  CHECK(bezout_matrix(QPoly::x(), QPoly::one(), 1).matrix() == mat({{1}}));
}

TEST_CASE("general quadratic form [[2,b],[b,b^2-2c]]") {
  Rng rng(201);
  for (int i = 0; i < 100; ++i) {
    const Rational b = testkit::rand_rational(rng), c = testkit::rand_rational(rng);
    const auto m = bezout_of(QPoly({c, b, Rational(1)}));
    CHECK(m(0, 0) == Rational(2));
    CHECK(m(0, 1) == b);
    CHECK(m(1, 1) == b * b - Rational(2) * c);
  }
}

TEST_CASE("monomial Bezoutian") {
  QMatrix want(3);
  want(1, 1) = Rational(1);
  CHECK(bezout_monomial(3, 2, 1) == want);
  CHECK(bezout_monomial(2, 2, 1) == mat({{1, 0}, {0, 0}}));
  CHECK(bezout_monomial(2, 1, 0) == mat({{0, 0}, {0, 1}}));
  CHECK(code_of([] { bezout_monomial(2, 1, 1); }) == Errc::BadExponents);
  CHECK(code_of([] { bezout_monomial(2, 3, 1); }) == Errc::BadExponents);
  CHECK(code_of([] { bezout_monomial(3, 1, 2); }) == Errc::BadExponents);
}

TEST_CASE("monomial Bezoutian matches its generating function") {
  for (long lam = 1; lam <= 7; ++lam)
    for (long mu = 1; mu <= lam; ++mu)
      for (long nu = 0; nu < mu; ++nu) {
        const auto n = static_cast<std::size_t>(lam);
        const QMatrix oracle =
            testkit::bezout_by_division(QPoly::monomial(Rational(1), mu), QPoly::monomial(Rational(1), nu), n);
        REQUIRE(bezout_monomial(lam, mu, nu) == oracle);
      }
}

TEST_CASE("bezout_of examples") {
  CHECK(bezout_of(qpoly({1, 2, 1})).matrix() == mat({{2, 2}, {2, 2}}));
  CHECK(bezout_of(qpoly({0, 0, 1})).matrix() == mat({{2, 0}, {0, 0}}));
  CHECK(bezout_of(qpoly({-1, 0, 1})).matrix() == mat({{2, 0}, {0, 2}}));
  CHECK(code_of([] { bezout_of(qpoly({1})); }) == Errc::DegreeTooSmall);
  CHECK(code_of([] { bezout_of(qpoly({1, 0, 1}), 1); }) == Errc::BadOrder);
}

TEST_CASE("order below the degrees is rejected") {
  CHECK(code_of([] { bezout_matrix(qpoly({0, 0, 1}), qpoly({1}), 1); }) == Errc::BadOrder);
}

TEST_CASE("reversed variant is the anti-identity congruence") {
  Rng rng(202);
  for (int i = 0; i < 200; ++i) {
    const QPoly f1 = testkit::rand_poly_upto(rng, 5);
    const QPoly f2 = testkit::rand_poly_upto(rng, 5);
    const std::size_t n = std::max<std::size_t>({f1.degree().value_or(0), f2.degree().value_or(0), 1}) +
                          static_cast<std::size_t>(testkit::uniform(rng, 0, 2));
    const QMatrix j = anti_identity<Rational>(n);
    REQUIRE(reversed_bezout(f1, f2, n).matrix() == j.transpose() * bezout_matrix(f1, f2, n).matrix() * j);
  }
  const QPoly x2 = QPoly::monomial(Rational(1), 2);
  CHECK(reversed_bezout(x2, QPoly::x(), 3).matrix() == bezout_monomial(3, 2, 1));
  CHECK(reversed_bezout(x2, x2, 3).matrix().is_zero());
}

TEST_CASE("Bezoutian properties against the division oracle") {
  Rng rng(203);
  for (int i = 0; i < 300; ++i) {
    const QPoly f = testkit::rand_poly_upto(rng, 6);
    const QPoly g = testkit::rand_poly_upto(rng, 6);
    const QPoly h = testkit::rand_poly_upto(rng, 6);
    const std::size_t n = std::max<std::size_t>(
        {f.degree().value_or(0), g.degree().value_or(0), h.degree().value_or(0), std::size_t{1}});
    const auto bfh = bezout_matrix(f, h, n);
    REQUIRE(bfh.matrix().is_symmetric());
    REQUIRE(bfh.matrix() == testkit::bezout_by_division(f, h, n));
    REQUIRE(bezout_matrix(h, f, n).matrix() == -bfh.matrix());
    const Rational a = testkit::rand_rational(rng), b = testkit::rand_rational(rng);
    REQUIRE(bezout_matrix(a * f + b * g, h, n).matrix() ==
            a * bfh.matrix() + b * bezout_matrix(g, h, n).matrix());
    REQUIRE(bezout_matrix(h, a * f + b * g, n).matrix() ==
            a * bezout_matrix(h, f, n).matrix() + b * bezout_matrix(h, g, n).matrix());
  }
}

TEST_CASE("padding the order only adds zero rows in front") {
  const QPoly f = qpoly({1, -3, 0, 2});
  const auto m3 = bezout_of(f, 3);
  const auto m5 = bezout_of(f, 5);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) {
      const Rational want = (i >= 2 && j >= 2) ? m3(i - 2, j - 2) : Rational(0);
      REQUIRE(m5(i, j) == want);
    }
}

TEST_CASE("Bezoutian over Q[t] specializes to the numeric one") {
  Rng rng(204);
  for (int i = 0; i < 40; ++i) {
    const auto spec = random_spec(static_cast<std::size_t>(testkit::uniform(rng, 2, 7)), 1, 7, i);
    const auto sym = bezout_of(spec.f_symbolic(), spec.n);
    const Rational xi = testkit::rand_rational(rng);
    const auto at = sym.map([&](const QPoly& e) { return e.eval(xi); });
    REQUIRE(at.matrix() == bezout_of(spec.f_at(xi), spec.n).matrix());
  }
}

TEST_CASE("structure of A(t) over Q[t]") {
  Rng rng(205);
  for (std::size_t n = 2; n <= 8; ++n)
    for (std::size_t s = 1; s < n; ++s)
      for (std::size_t trial = 0; trial < 3; ++trial) {
        const FamilySpec spec = random_spec(n, s, 205, trial);
        const auto a = bezout_of(spec.f_symbolic(), n).matrix();
        REQUIRE(a == predicted_bezout_structure(spec, QPoly::x()));
        CHECK(a(0, 0) == QPoly::from_int(static_cast<long>(n)));
        for (std::size_t k = 0; k < s; ++k) {
          const std::size_t l = n - s + k + 2;
          CHECK(a(0, l - 2) == QPoly::monomial(Rational(static_cast<long>(s - k)) * spec.r[s - k], 1));
        }
      }
}

TEST_CASE("first row of M_s(g)") {
  Rng rng(206);
  for (int i = 0; i < 100; ++i) {
    const std::size_t s = static_cast<std::size_t>(testkit::uniform(rng, 1, 7));
    const QPoly g = testkit::rand_poly(rng, s);
    const auto b = bezout_of(g, s);
    for (std::size_t k = 0; k < s; ++k)
      REQUIRE(b(0, k) == Rational(static_cast<long>(s - k)) * g.coeff(s) * g.coeff(s - k));
  }
}

}
