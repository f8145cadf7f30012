#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "tamagawa/exact.hpp"
#include "tamagawa/root_datum.hpp"
#include "tamagawa/volume.hpp"

namespace tamagawa {

struct CurveSpec {
  BigInt q;
  int genus = 0;
  std::optional<std::vector<BigInt>> l_coeffs;
  std::optional<std::vector<BigInt>> point_counts;
};

/// Run configuration, read from a JSON document:
///
///   {
///     "group": {"type": "A", "rank": 1,
///               "isogeny": "simply_connected" | "adjoint" |
///                          {"quotient_order": k, "d_even_tag": "special_orthogonal" | "half_spin"}},
///     "curve": {"q": 2, "genus": 1, "l_coeffs": [1, 2, 2]}      // or "point_counts": [5]
///     "euler_truncation": 25,
///     "oracle": {"enabled": true, "cutoff": 20},
///     "base_change_check_max": 5,
///     "weyl_bound": 10000000
///   }
///
/// Big integers may be given as JSON integers or decimal strings. Unknown
/// keys are rejected.
struct Config {
  DynkinType type{Letter::A, 1};
  Isogeny isogeny;
  CurveSpec curve;
  int euler_truncation = kDefaultEulerTruncation;
  std::optional<bool> oracle_enabled;  // unset: on exactly for A_1 over genus 0
  int oracle_cutoff = 20;
  int base_change_check_max = 5;
  std::uint64_t weyl_bound = kDefaultWeylBound;
};

/// Throws InvalidInput on syntax or schema errors.
Config parse_config(const std::string& json_text);
Config load_config(const std::filesystem::path& path);

}  // namespace tamagawa
