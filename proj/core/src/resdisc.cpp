#include "bezroot/resdisc.hpp"

namespace bezroot {

BezoutDiscCheck bezout_disc_check(const QPoly& f) {
  if (f.is_zero() || f.deg() < 2) fail(Errc::DegreeTooSmall, "discriminant needs degree >= 2");
  BezoutDiscCheck out;
  out.det_bezout = determinant(bezout_of(f).matrix());
  out.disc = discriminant(f);
  if (!out.disc.is_zero()) out.ratio = out.det_bezout / out.disc;
  return out;
}

std::optional<QPoly> DiscInT::quotient_p() const {
  if (t_power < expected_power) return std::nullopt;
  return shift_down(full, expected_power);
}

DiscInT disc_in_t(const FamilySpec& spec) {
  const QPoly g = spec.g();
  if (g.is_zero()) fail(Errc::DegenerateFamily, "g_r is the zero polynomial");
  const std::size_t s = g.deg();
  if (spec.n <= s) fail(Errc::DegreeOrder, "need n > deg g, got " + spec.describe());

  DiscInT out;
  out.full = discriminant(spec.f_symbolic());
  out.expected_power = spec.n - 1;
  out.min_power = spec.n - s - 1;
  if (out.full.is_zero()) fail(Errc::DegenerateFamily, "discriminant vanishes identically for " + spec.describe());
  out.t_power = trailing_zero_power(out.full);
  out.stripped = shift_down(out.full, out.t_power);
  return out;
}

}  // namespace bezroot
