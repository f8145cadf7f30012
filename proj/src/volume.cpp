#include "tamagawa/volume.hpp"

#include <cmath>

#include "tamagawa/errors.hpp"
#include "tamagawa/finite_groups.hpp"

namespace tamagawa {

Rational local_volume(const RootDatum& datum, const BigInt& q_x) {
  const Rational from_count =
      Rational(steinberg_count(datum, q_x)) / ipow(q_x, static_cast<std::uint64_t>(datum.dim_g));
  Rational from_degrees = 1;
  for (int d : datum.degrees.degrees) from_degrees *= 1 - rpow(Rational(q_x), -d);
  if (from_count != from_degrees) {
    throw InvariantViolation("local volume of " + datum.summary() + " at q_x=" + q_x.str() +
                             ": point count gives " + to_string(from_count) +
                             " but the degree product gives " + to_string(from_degrees));
  }
  return from_count;
}

Rational vol_k_exact(const RootDatum& datum, const CurveZeta& curve) {
  Rational vol = rpow(Rational(curve.q()), static_cast<std::int64_t>(1 - curve.genus()) * datum.dim_g);
  for (int d : datum.degrees.degrees) vol /= curve.zeta_special_value(d);
  return vol;
}

TruncatedVolume vol_k_truncated(const RootDatum& datum, const CurveZeta& curve, int bound) {
  if (bound < 1) throw InvalidInput("Euler product truncation must be at least 1");
  TruncatedVolume out;
  out.bound = bound;
  double log_value =
      log_of(rpow(Rational(curve.q()), static_cast<std::int64_t>(1 - curve.genus()) * datum.dim_g));
  BigInt q_m = 1;
  for (int m = 1; m <= bound; ++m) {
    q_m *= curve.q();
    EulerFactorRow row;
    row.degree = m;
    row.closed_points = curve.closed_points(m);
    row.local_volume = local_volume(datum, q_m);
    // log1p of the exact deficit keeps precision once 1 - vol < 1e-16
    row.log_contribution =
        to_double(row.closed_points) * std::log1p(to_double(row.local_volume - 1));
    log_value += row.log_contribution;
    out.rows.push_back(std::move(row));
  }
  out.value = std::exp(log_value);
  return out;
}

std::int64_t tamagawa_number(const RootDatum& datum) { return fundamental_group_order(datum); }

Rational siegel_mass(const RootDatum& datum, const CurveZeta& curve) {
  return Rational(tamagawa_number(datum)) / vol_k_exact(datum, curve);
}

BaseChangeCheck base_change_invariance_check(const RootDatum& datum, const CurveZeta& curve,
                                             int max_m) {
  if (max_m < 1) throw InvalidInput("base change check needs max_m >= 1");
  BaseChangeCheck check;
  const std::int64_t tau = tamagawa_number(datum);
  for (int m = 1; m <= max_m; ++m) {
    const CurveZeta xm = curve.base_change(m);
    BaseChangeRow row;
    row.degree = m;
    row.q = xm.q();
    row.tamagawa_number = tamagawa_number(datum);
    row.vol_k = vol_k_exact(datum, xm);
    row.siegel_mass = siegel_mass(datum, xm);
    row.mass_times_volume = row.siegel_mass * row.vol_k;
    if (row.tamagawa_number != tau || row.mass_times_volume != tau) check.ok = false;
    check.rows.push_back(std::move(row));
  }
  return check;
}

}  // namespace tamagawa
