// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures/weyl_fixture.hpp"
#include "tamagawa/bundle_oracle.hpp"
#include "tamagawa/curve_zeta.hpp"
#include "tamagawa/finite_groups.hpp"
#include "tamagawa/root_datum.hpp"
#include "tamagawa/volume.hpp"

using namespace tamagawa;

namespace {

struct Failure {
  std::string what;
};

void require(bool cond, const std::string& what) {
  if (!cond) throw Failure{what};
}

RootDatum datum(char letter, int rank, Isogeny iso = Isogeny::simply_connected()) {
  return make_root_datum(DynkinType::make(letter, rank), iso);
}

std::vector<CurveZeta> test_curves() {
  return {CurveZeta::projective_line(2), CurveZeta::from_l_coeffs(2, {1, 2, 2}),
          CurveZeta::from_l_coeffs(2, {1, 0, 2})};
}

void ac1() {
  for (int q : {2, 3}) {
    const auto curve = CurveZeta::projective_line(q);
    const auto a1 = datum('A', 1);
    const Rational mass = siegel_mass(a1, curve);
    require(mass == 1 / vol_k_exact(a1, curve), "mass != 1/vol_k_exact at q=" + std::to_string(q));
    if (q == 2) require(mass == Rational(1, 3), "siegel_mass(A_1 sc, P^1/F_2) != 1/3");
    const double gap = std::abs(to_double(mass - mass_partial_sum(TorsorGroup::SL2, q, 20)));
    require(gap < 1e-10, "partial sum gap " + to_decimal(gap) + " at q=" + std::to_string(q));
  }
}

void ac2() {
  const auto curve = CurveZeta::projective_line(2);
  const auto adj = datum('A', 1, Isogeny::adjoint());
  require(tamagawa_number(adj) == 2, "tau(PGL_2) != 2");
  const Rational mass = siegel_mass(adj, curve);
  require(mass == Rational(2, 3), "siegel mass != 2/3");
  const Rational total = mass_partial_sum(TorsorGroup::PGL2, 2, 20);
  require(std::abs(to_double(mass - total)) < 1e-6, "total oracle mass far from 2/3");
  require(total + mass_tail(TorsorGroup::PGL2, 2, 20) == mass, "total oracle mass limit != 2/3");
  const Rational component = 1 / vol_k_exact(adj, curve);
  for (Parity p : {Parity::even, Parity::odd}) {
    const Rational part = mass_partial_sum(TorsorGroup::PGL2, 2, 20, p);
    require(std::abs(to_double(component - part)) < 1e-6, to_string(p) + " component gap too large");
  }
}

void ac3() {
  struct Case {
    MatrixFamily family;
    int n;
    int q;
  };
  const std::vector<Case> cases = {
      {MatrixFamily::SL, 2, 2},  {MatrixFamily::SL, 2, 3},  {MatrixFamily::SL, 2, 5},
      {MatrixFamily::PGL, 2, 2}, {MatrixFamily::PGL, 2, 3}, {MatrixFamily::PGL, 2, 5},
      {MatrixFamily::SL, 3, 2},  {MatrixFamily::SL, 3, 3},
  };
  for (const auto& c : cases) {
    const auto d = datum('A', c.n - 1,
                         c.family == MatrixFamily::SL ? Isogeny::simply_connected() : Isogeny::adjoint());
    const BigInt formula = steinberg_count(d, c.q);
    const BigInt brute = brute_force_group_order(c.family, c.n, c.q);
    require(brute == brute_force_group_order(c.family, c.n, c.q, Backend::serial),
            "serial and parallel enumeration disagree");
    require(formula == brute, std::string(c.family == MatrixFamily::SL ? "SL" : "PGL") + "_" +
                                  std::to_string(c.n) + "(F_" + std::to_string(c.q) + "): " +
                                  formula.str() + " vs " + brute.str());
  }
}

void ac4() {
  const std::vector<std::pair<RootDatum, CurveZeta>> cases = {
      {datum('A', 1), CurveZeta::projective_line(2)},
      {datum('A', 2), CurveZeta::projective_line(2)},
      {datum('A', 1), CurveZeta::from_l_coeffs(2, {1, 2, 2})},
  };
  for (const auto& [d, curve] : cases) {
    const double exact = to_double(vol_k_exact(d, curve));
    const double approx = vol_k_truncated(d, curve, 25).value;
    require(std::abs(approx / exact - 1) < 1e-6, "truncated volume off for " + d.summary() + " on " +
                                                     curve.summary());
  }
  for (const auto& d : {datum('A', 1), datum('A', 2), datum('B', 2), datum('G', 2), datum('A', 1, Isogeny::adjoint())}) {
    for (int qx : {2, 3, 4, 5, 7, 8, 9, 16, 1024}) {
      Rational product = 1;
      for (int deg : d.degrees.degrees) product *= 1 - rpow(Rational(qx), -deg);
      const Rational lhs = rpow(Rational(qx), -d.dim_g) * Rational(steinberg_count(d, qx));
      require(lhs == product, "q^-dim |G(F_q)| identity fails for " + d.summary() + " q=" + std::to_string(qx));
      require(local_volume(d, qx) == product, "local_volume mismatch for " + d.summary());
    }
  }
}

void ac5() {
  for (const auto& e : fixture::kWeyl) {
    const auto type = DynkinType::make(e.letter, e.rank);
    const auto rs = generate_roots(cartan_matrix(type));
    const auto poincare = weyl_poincare(rs);
    const auto degrees = invariant_degrees(poincare);
    const std::string name = type.name();
    require(poincare == IntPolynomial(e.poincare.begin(), e.poincare.end()), name + ": Poincare polynomial");
    require(degrees.degrees == e.degrees, name + ": invariant degrees");
    BigInt order = 0;
    for (auto c : poincare) order += c;
    require(degrees.product() == order, name + ": prod d_i != |W|");
    require(degrees.sum_minus_one() == rs.num_positive, name + ": sum (d_i - 1) != |Phi+|");
    require(rs.all_roots.size() == e.num_roots, name + ": root count");
  }
}

void ac6() {
  for (const auto& curve : test_curves()) {
    const int g = curve.genus();
    std::vector<BigInt> counts;
    for (int m = 1; m <= g; ++m) counts.push_back(curve.point_count(m));
    require(CurveZeta::from_point_counts(curve.q(), g, counts) == curve, curve.summary() + ": round trip");

    const auto& a = curve.l_coeffs();
    for (int i = 0; i <= g; ++i) {
      require(a[2 * g - i] == rpow(Rational(curve.q()), g - i) * Rational(a[i]),
              curve.summary() + ": functional equation");
    }
    for (int m = 1; m <= 3; ++m) {
      for (int n = 1; n <= 3; ++n) {
        require(curve.base_change(m).base_change(n) == curve.base_change(m * n),
                curve.summary() + ": base change composition");
        require(curve.base_change(m).point_count(n) == curve.point_count(m * n),
                curve.summary() + ": base change point counts");
      }
    }
    for (const auto& iso : {Isogeny::simply_connected(), Isogeny::adjoint()}) {
      require(base_change_invariance_check(datum('A', 1, iso), curve, 5).ok,
              curve.summary() + ": base change invariance");
    }
  }
}

void ac7() {
  for (int q : {2, 3}) {
    for (TorsorGroup g : {TorsorGroup::SL2, TorsorGroup::PGL2}) {
      const auto table = stratum_table(g, q, 20);
      require(table.size() == 21, "stratum table size");
      for (const auto& s : table) {
        if (s.n == 0) continue;
        const Rational expected =
            rpow(Rational(q), static_cast<int>(relative_dimension(0, 1, s.instability_degree))) / (q - 1);
        require(s.mass == expected, "stratum mass n=" + std::to_string(s.n));
        require(s.mass == Rational(1) / Rational(s.aut_order), "stratum mass vs |Aut|");
        require(s.codim == 2 * s.n - 1 || g == TorsorGroup::PGL2, "SL_2 codim != 2n-1");
        require(s.codim == s.r_u_dim * (0 - 1) + s.instability_degree, "codim formula");
      }
    }
  }
  require(gamma_threshold(0, 0, 2) == 3, "gamma(0,0,2)");
  require(gamma_threshold(3, 1, 0) == 3, "gamma(3,1)");
  require(gamma_threshold(4, 2, 0) == 3, "gamma(4,2)");
  for (std::int64_t mu = 0; mu <= 200; ++mu) {
    for (const auto& c : std::vector<std::vector<std::int64_t>>{{1}, {1, 1}, {1, 2}, {2, 3}, {1, 1, 1}, {1, 2, 3}}) {
      const double bound = std::pow(static_cast<double>(mu + 1), static_cast<double>(c.size()));
      require(static_cast<double>(count_instability_types(c, mu)) <= bound,
              "count_instability_types exceeds (mu+1)^s at mu=" + std::to_string(mu));
    }
  }
}

}  // namespace

int main() {
  struct Criterion {
    const char* id;
    const char* title;
    double limit_seconds;  // <= 0: no runtime bound
    std::function<void()> run;
  };
  const std::vector<Criterion> criteria = {
      {"AC1", "Siegel mass of SL_2 on P^1 vs torsor enumeration", 1, ac1},
      {"AC2", "PGL_2 components match the Tamagawa number", 1, ac2},
      {"AC3", "Steinberg order formula vs brute force", 10, ac3},
      {"AC4", "Euler product and local volume identity", 0, ac4},
      {"AC5", "Chevalley degrees from the Weyl group", 30, ac5},
      {"AC6", "curve round trips and base change", 0, ac6},
      {"AC7", "stratification bookkeeping", 0, ac7},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
      c.run();
    } catch (const Failure& f) {
      ok = false;
      detail = f.what;
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && c.limit_seconds > 0 && secs >= c.limit_seconds) {
      ok = false;
      detail = "runtime limit exceeded";
    }
    char timing[64];
    if (c.limit_seconds > 0) {
      std::snprintf(timing, sizeof timing, "%.3fs < %gs", secs, c.limit_seconds);
    } else {
      std::snprintf(timing, sizeof timing, "%.3fs", secs);
    }
    std::printf("%s %s: %s (%s)%s%s\n", ok ? "PASS" : "FAIL", c.id, c.title, timing,
                detail.empty() ? "" : " - ", detail.c_str());
    failures += ok ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
