#include "bezroot/bezout.hpp"

namespace bezroot {

SquareMatrix<Rational> bezout_monomial(long lambda, long mu, long nu) {
  if (!(lambda >= mu && mu > nu && nu >= 0)) {
    fail(Errc::BadExponents, "need lambda >= mu > nu >= 0, got (" + std::to_string(lambda) + "," +
                                 std::to_string(mu) + "," + std::to_string(nu) + ")");
  }
  const auto n = static_cast<std::size_t>(lambda);
  SquareMatrix<Rational> m(n);
  const long diag = 2 * lambda - (mu + nu) + 1;
  for (long i = lambda - mu + 1; i <= lambda - nu; ++i) {
    const long j = diag - i;
    if (j >= lambda - mu + 1 && j <= lambda - nu) {
      m(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = Rational(1);
    }
  }
  return m;
}

}  // namespace bezroot
