#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tamagawa/bundle_oracle.hpp"
#include "tamagawa/config.hpp"
#include "tamagawa/curve_zeta.hpp"
#include "tamagawa/root_datum.hpp"
#include "tamagawa/volume.hpp"

namespace tamagawa {

struct OracleComponent {
  Parity parity;
  Rational partial_sum;
  Rational tail;
  Rational expected;  // 1 / vol(K)
  bool limit_matches = false;
};

/// Brute-force enumeration of torsors on P^1 compared with the mass formula.
struct OracleSection {
  TorsorGroup group;
  int cutoff = 0;
  Rational partial_sum;
  Rational tail;
  Rational predicted;  // siegel mass
  Rational gap;        // predicted - partial_sum
  bool limit_matches = false;
  std::vector<OracleComponent> components;  // PGL2 only
  std::vector<StratumRecord> strata;
};

struct MassReport {
  RootDatum datum;
  CurveZeta curve;
  std::vector<BigInt> point_counts;  // N_1..N_{max(g,1)}
  std::int64_t tamagawa_number = 0;
  Rational vol_k;
  Rational siegel_mass;
  std::int64_t component_count = 0;
  TruncatedVolume vol_k_truncated;
  BaseChangeCheck base_change;
  std::optional<OracleSection> oracle;
  std::vector<std::string> assumptions;
};

/// Runs every computation and cross-check requested by the config.
/// Throws InvalidInput, InvariantViolation or ResourceLimit.
MassReport build_report(const Config& config);

std::string render_text(const MassReport& report, bool verbose);
/// JSON; keys in a fixed order, rationals as "p/q" strings, floats rounded
/// to 12 significant digits.
std::string render_structured(const MassReport& report, bool verbose);

}  // namespace tamagawa
