#pragma once

#include <cstdint>
#include <vector>

#include "tamagawa/curve_zeta.hpp"
#include "tamagawa/exact.hpp"
#include "tamagawa/root_datum.hpp"

namespace tamagawa {

/// Volume of G(O_x) for a point with residue field of size q_x:
/// q_x^{-dim G} |G(F_{q_x})|. Evaluated both from the point count and as
/// prod_i (1 - q_x^{-d_i}); a mismatch raises InvariantViolation.
Rational local_volume(const RootDatum& datum, const BigInt& q_x);

/// vol(K) = q^{(1-g) dim G} prod_i Z(X, d_i)^{-1}, product over the
/// Chevalley degrees with multiplicity. For split G the degree-n invariants
/// carry trivial Frobenius action, so L_n(X, n) = Z(X, n)^{dim V_n}.
Rational vol_k_exact(const RootDatum& datum, const CurveZeta& curve);

struct EulerFactorRow {
  int degree = 0;           // m
  BigInt closed_points;     // b_m
  Rational local_volume;    // at q_x = q^m
  double log_contribution;  // b_m * log(local_volume)
};

struct TruncatedVolume {
  double value = 0;
  int bound = 0;
  std::vector<EulerFactorRow> rows;
};

inline constexpr int kDefaultEulerTruncation = 25;

/// q^{(1-g) dim G} prod_{m=1}^{B} local_volume(q^m)^{b_m} in floating
/// point, accumulated in log space in ascending m.
TruncatedVolume vol_k_truncated(const RootDatum& datum, const CurveZeta& curve,
                                int bound = kDefaultEulerTruncation);

/// tau(G) for split G: Ono's formula with trivial Galois action gives
/// |pi_1(G)|, assuming Weil's conjecture (tau = 1) for the simply connected
/// cover. Both assumptions are recorded in the report.
std::int64_t tamagawa_number(const RootDatum& datum);

/// Predicted sum over isomorphism classes of G-torsors of 1/|Aut|:
/// tau(G) / vol(K).
Rational siegel_mass(const RootDatum& datum, const CurveZeta& curve);

struct BaseChangeRow {
  int degree = 0;
  BigInt q;
  std::int64_t tamagawa_number = 0;
  Rational vol_k;
  Rational siegel_mass;
  Rational mass_times_volume;
};

struct BaseChangeCheck {
  bool ok = true;
  std::vector<BaseChangeRow> rows;
};

/// Recomputes tau and mass * vol over X_m = X x F_{q^m} for m = 1..max_m and
/// checks both stay equal to tau(G).
BaseChangeCheck base_change_invariance_check(const RootDatum& datum, const CurveZeta& curve,
                                             int max_m);

}  // namespace tamagawa
