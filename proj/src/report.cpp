#include "tamagawa/report.hpp"

#include <cmath>
#include <sstream>

#include "json.hpp"
#include "tamagawa/errors.hpp"

namespace tamagawa {

namespace {

CurveZeta make_curve(const CurveSpec& spec) {
  if (spec.l_coeffs) {
    CurveZeta curve = CurveZeta::from_l_coeffs(spec.q, *spec.l_coeffs);
    if (curve.genus() != spec.genus) {
      throw InvalidInput("invalid curve: curve.genus = " + std::to_string(spec.genus) +
                         " but l_coeffs has degree " + std::to_string(2 * curve.genus()));
    }
    return curve;
  }
  return CurveZeta::from_point_counts(spec.q, spec.genus, spec.point_counts.value());
}

std::optional<TorsorGroup> oracle_group(const RootDatum& datum, const CurveZeta& curve) {
  if (datum.type != DynkinType{Letter::A, 1} || curve.genus() != 0) return std::nullopt;
  return datum.pi1_order == 1 ? TorsorGroup::SL2 : TorsorGroup::PGL2;
}

OracleSection run_oracle(TorsorGroup group, const CurveZeta& curve, int cutoff,
                         const Rational& predicted, const Rational& vol) {
  OracleSection o;
  o.group = group;
  o.cutoff = cutoff;
  o.partial_sum = mass_partial_sum(group, curve.q(), cutoff);
  o.tail = mass_tail(group, curve.q(), cutoff);
  o.predicted = predicted;
  o.gap = predicted - o.partial_sum;
  o.limit_matches = o.partial_sum + o.tail == predicted;
  o.strata = stratum_table(group, curve.q(), cutoff);

  if (group == TorsorGroup::PGL2) {
    Rational component_total = 0;
    for (Parity p : {Parity::even, Parity::odd}) {
      OracleComponent c{p, mass_partial_sum(group, curve.q(), cutoff, p),
                        mass_tail(group, curve.q(), cutoff, p), 1 / vol, false};
      c.limit_matches = c.partial_sum + c.tail == c.expected;
      component_total += c.partial_sum;
      o.components.push_back(std::move(c));
    }
    if (component_total != o.partial_sum) {
      throw InvariantViolation("PGL2 component masses do not add up to the total mass");
    }
  }
  return o;
}

std::string join(const std::vector<BigInt>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? " " : "") + xs[i].str();
  return s;
}

std::string join(const std::vector<int>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? " " : "") + std::to_string(xs[i]);
  return s;
}

double rounded(double x) { return std::stod(to_decimal(x)); }

BigInt weyl_order(const RootDatum& d) {
  BigInt w = 0;
  for (auto c : d.poincare) w += c;
  return w;
}

}  // namespace

MassReport build_report(const Config& config) {
  RootDatum datum = make_root_datum(config.type, config.isogeny, config.weyl_bound);
  CurveZeta curve = make_curve(config.curve);

  const auto group = oracle_group(datum, curve);
  const bool want_oracle = config.oracle_enabled.value_or(group.has_value());
  if (want_oracle && !group) {
    throw InvalidInput("oracle is only available for type A_1 over a genus-0 curve");
  }

  MassReport r{std::move(datum), std::move(curve), {}, 0, 0, 0, 0, {}, {}, std::nullopt, {}};
  for (int m = 1; m <= std::max(r.curve.genus(), 1); ++m) r.point_counts.push_back(r.curve.point_count(m));

  r.tamagawa_number = tamagawa_number(r.datum);
  r.vol_k = vol_k_exact(r.datum, r.curve);
  r.siegel_mass = siegel_mass(r.datum, r.curve);
  r.component_count = r.tamagawa_number;
  r.vol_k_truncated = vol_k_truncated(r.datum, r.curve, config.euler_truncation);
  r.assumptions = {
      "split group: trivial Galois action on the dual of pi_1, so Ono's formula gives tau = |pi_1| "
      "with trivial Sha",
      "Weil's conjecture tau = 1 for the simply connected cover",
  };

  if (r.siegel_mass * r.vol_k != r.tamagawa_number) {
    throw InvariantViolation("siegel mass * vol(K) != tau");
  }
  r.base_change = base_change_invariance_check(r.datum, r.curve, config.base_change_check_max);
  if (!r.base_change.ok) throw InvariantViolation("tau changed under base change of the curve");

  if (want_oracle) {
    r.oracle = run_oracle(*group, r.curve, config.oracle_cutoff, r.siegel_mass, r.vol_k);
    if (!r.oracle->limit_matches) {
      throw InvariantViolation("oracle mass plus closed-form tail differs from the Siegel mass");
    }
    for (const auto& c : r.oracle->components) {
      if (!c.limit_matches) {
        throw InvariantViolation("PGL2 component mass differs from 1/vol(K)");
      }
    }
  }
  return r;
}

std::string render_text(const MassReport& r, bool verbose) {
  std::ostringstream out;
  const auto& d = r.datum;
  out << "group: " << d.summary() << "\n";
  out << "  rank: " << d.rank() << "\n";
  out << "  dim: " << d.dim_g << "\n";
  out << "  roots: " << d.num_roots() << " (" << d.num_positive() << " positive)\n";
  out << "  invariant degrees: " << join(d.degrees.degrees) << "\n";
  out << "  weyl order: " << weyl_order(d) << "\n";
  out << "  pi1 order: " << d.pi1_order << "\n";
  out << "curve: " << r.curve.summary() << "\n";
  out << "  point counts: " << join(r.point_counts) << "\n";
  out << "tamagawa number: " << r.tamagawa_number << "\n";
  for (const auto& a : r.assumptions) out << "  assumes: " << a << "\n";
  out << "vol(K): " << to_string(r.vol_k) << " = " << to_decimal(r.vol_k) << "\n";
  out << "vol(K) euler product (B=" << r.vol_k_truncated.bound
      << "): " << to_decimal(r.vol_k_truncated.value) << "\n";
  out << "  relative error: "
      << to_decimal(std::abs(r.vol_k_truncated.value / to_double(r.vol_k) - 1)) << "\n";
  out << "siegel mass: " << to_string(r.siegel_mass) << " = " << to_decimal(r.siegel_mass) << "\n";
  out << "component count: " << r.component_count << "\n";
  out << "base change check (m <= " << r.base_change.rows.size()
      << "): " << (r.base_change.ok ? "ok" : "FAILED") << "\n";
  for (const auto& row : r.base_change.rows) {
    out << "  m=" << row.degree << " q=" << row.q << " tau=" << row.tamagawa_number
        << " vol=" << to_string(row.vol_k) << " mass=" << to_string(row.siegel_mass)
        << " mass*vol=" << to_string(row.mass_times_volume) << "\n";
  }

  if (verbose) {
    out << "euler factors:\n";
    for (const auto& row : r.vol_k_truncated.rows) {
      out << "  m=" << row.degree << " b_m=" << row.closed_points
          << " local_volume=" << to_decimal(row.local_volume)
          << " log_factor=" << to_decimal(row.log_contribution) << "\n";
    }
  }

  if (r.oracle) {
    const auto& o = *r.oracle;
    out << "oracle: " << to_string(o.group) << " torsors on P^1, cutoff " << o.cutoff << "\n";
    out << "  partial mass: " << to_string(o.partial_sum) << " = " << to_decimal(o.partial_sum) << "\n";
    out << "  predicted mass: " << to_string(o.predicted) << "\n";
    out << "  gap: " << to_decimal(o.gap) << "\n";
    out << "  closed-form tail: " << to_string(o.tail) << "\n";
    out << "  partial + tail = predicted: " << (o.limit_matches ? "yes" : "no") << "\n";
    for (const auto& c : o.components) {
      out << "  component " << to_string(c.parity) << ": partial " << to_decimal(c.partial_sum)
          << ", limit " << to_string(c.partial_sum + c.tail) << ", 1/vol(K) " << to_string(c.expected)
          << ", match " << (c.limit_matches ? "yes" : "no") << "\n";
    }
    if (verbose) {
      out << "  strata:\n";
      for (const auto& s : o.strata) {
        out << "    n=" << s.n << " m=" << s.instability_degree << " r_u=" << s.r_u_dim
            << " codim=" << s.codim << " |Aut|=" << s.aut_order << " mass=" << to_string(s.mass)
            << "\n";
      }
    }
  }
  return out.str();
}

std::string render_structured(const MassReport& r, bool verbose) {
  using nlohmann::ordered_json;
  const auto& d = r.datum;
  ordered_json j;

  ordered_json group;
  group["type"] = d.type.name();
  group["isogeny"] = d.isogeny.name();
  group["rank"] = d.rank();
  group["dim"] = d.dim_g;
  group["num_roots"] = d.num_roots();
  group["num_positive_roots"] = d.num_positive();
  group["invariant_degrees"] = d.degrees.degrees;
  group["weyl_order"] = weyl_order(d).str();
  group["pi1_order"] = d.pi1_order;
  j["group"] = group;

  ordered_json curve;
  curve["q"] = r.curve.q().str();
  curve["genus"] = r.curve.genus();
  ordered_json coeffs = ordered_json::array();
  for (const auto& a : r.curve.l_coeffs()) coeffs.push_back(a.str());
  curve["l_coeffs"] = coeffs;
  ordered_json counts = ordered_json::array();
  for (const auto& n : r.point_counts) counts.push_back(n.str());
  curve["point_counts"] = counts;
  j["curve"] = curve;

  j["tamagawa_number"] = r.tamagawa_number;
  j["assumptions"] = r.assumptions;
  j["vol_k"] = to_string(r.vol_k);
  j["vol_k_decimal"] = rounded(to_double(r.vol_k));
  ordered_json trunc;
  trunc["bound"] = r.vol_k_truncated.bound;
  trunc["value"] = rounded(r.vol_k_truncated.value);
  trunc["relative_error"] = rounded(std::abs(r.vol_k_truncated.value / to_double(r.vol_k) - 1));
  if (verbose) {
    ordered_json rows = ordered_json::array();
    for (const auto& row : r.vol_k_truncated.rows) {
      ordered_json e;
      e["m"] = row.degree;
      e["closed_points"] = row.closed_points.str();
      e["local_volume"] = to_string(row.local_volume);
      e["log_factor"] = rounded(row.log_contribution);
      rows.push_back(e);
    }
    trunc["euler_factors"] = rows;
  }
  j["vol_k_truncated"] = trunc;
  j["siegel_mass"] = to_string(r.siegel_mass);
  j["siegel_mass_decimal"] = rounded(to_double(r.siegel_mass));
  j["component_count"] = r.component_count;

  ordered_json bc;
  bc["ok"] = r.base_change.ok;
  ordered_json bc_rows = ordered_json::array();
  for (const auto& row : r.base_change.rows) {
    ordered_json e;
    e["m"] = row.degree;
    e["q"] = row.q.str();
    e["tamagawa_number"] = row.tamagawa_number;
    e["vol_k"] = to_string(row.vol_k);
    e["siegel_mass"] = to_string(row.siegel_mass);
    e["mass_times_volume"] = to_string(row.mass_times_volume);
    bc_rows.push_back(e);
  }
  bc["rows"] = bc_rows;
  j["base_change_check"] = bc;

  if (r.oracle) {
    const auto& o = *r.oracle;
    ordered_json oj;
    oj["group"] = to_string(o.group);
    oj["cutoff"] = o.cutoff;
    oj["partial_mass"] = to_string(o.partial_sum);
    oj["predicted_mass"] = to_string(o.predicted);
    oj["gap"] = rounded(to_double(o.gap));
    oj["tail"] = to_string(o.tail);
    oj["limit_matches"] = o.limit_matches;
    ordered_json comps = ordered_json::array();
    for (const auto& c : o.components) {
      ordered_json e;
      e["parity"] = to_string(c.parity);
      e["partial_mass"] = to_string(c.partial_sum);
      e["tail"] = to_string(c.tail);
      e["expected"] = to_string(c.expected);
      e["limit_matches"] = c.limit_matches;
      comps.push_back(e);
    }
    oj["components"] = comps;
    if (verbose) {
      ordered_json strata = ordered_json::array();
      for (const auto& s : o.strata) {
        ordered_json e;
        e["n"] = s.n;
        e["instability_degree"] = s.instability_degree;
        e["r_u_dim"] = s.r_u_dim;
        e["codim"] = s.codim;
        e["aut_order"] = s.aut_order.str();
        e["mass"] = to_string(s.mass);
        strata.push_back(e);
      }
      oj["strata"] = strata;
    }
    j["oracle"] = oj;
  }
  return j.dump(2) + "\n";
}

}  // namespace tamagawa
