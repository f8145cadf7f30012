#include "tamagawa/bundle_oracle.hpp"

#include "tamagawa/errors.hpp"

namespace tamagawa {

std::string to_string(TorsorGroup group) { return group == TorsorGroup::SL2 ? "SL2" : "PGL2"; }

std::string to_string(Parity parity) { return parity == Parity::even ? "even" : "odd"; }

namespace {

void check_args(int n, const BigInt& q) {
  if (n < 0) throw InvalidInput("splitting parameter must be non-negative");
  if (q < 2) throw InvalidInput("field size must be at least 2");
}

bool parity_matches(int n, std::optional<Parity> parity) {
  if (!parity) return true;
  return (n % 2 == 0) == (*parity == Parity::even);
}

}  // namespace

BigInt sl2_aut_order(int n, const BigInt& q) {
  check_args(n, q);
  if (n == 0) return q * (q * q - 1);
  return (q - 1) * ipow(q, 2 * static_cast<std::uint64_t>(n) + 1);
}

BigInt pgl2_aut_order(int n, const BigInt& q) {
  check_args(n, q);
  if (n == 0) return q * (q * q - 1);
  return (q - 1) * ipow(q, static_cast<std::uint64_t>(n) + 1);
}

BigInt aut_order(TorsorGroup group, int n, const BigInt& q) {
  return group == TorsorGroup::SL2 ? sl2_aut_order(n, q) : pgl2_aut_order(n, q);
}

Rational mass_partial_sum(TorsorGroup group, const BigInt& q, int cutoff,
                          std::optional<Parity> parity) {
  if (cutoff < 0) throw InvalidInput("mass cutoff must be non-negative");
  if (parity && group == TorsorGroup::SL2) {
    throw InvalidInput("parity filter is undefined for SL2 (single component)");
  }
  Rational sum = 0;
  for (int n = 0; n <= cutoff; ++n) {
    if (parity_matches(n, parity)) sum += Rational(1, aut_order(group, n, q));
  }
  return sum;
}

Rational mass_tail(TorsorGroup group, const BigInt& q, int cutoff, std::optional<Parity> parity) {
  if (cutoff < 0) throw InvalidInput("mass cutoff must be non-negative");
  if (parity && group == TorsorGroup::SL2) {
    throw InvalidInput("parity filter is undefined for SL2 (single component)");
  }
  const Rational qr(q);
  if (group == TorsorGroup::SL2) {
    // sum_{n > N} 1/((q-1) q^{2n+1}) = q^{-(2N+3)} / ((q-1)(1 - q^{-2}))
    return rpow(qr, -(2 * static_cast<std::int64_t>(cutoff) + 3)) / ((qr - 1) * (1 - rpow(qr, -2)));
  }
  if (!parity) {
    // sum_{n > N} 1/((q-1) q^{n+1}) = q^{-(N+2)} / ((q-1)(1 - q^{-1}))
    return rpow(qr, -(static_cast<std::int64_t>(cutoff) + 2)) / ((qr - 1) * (1 - rpow(qr, -1)));
  }
  int first = cutoff + 1;
  if (!parity_matches(first, parity)) ++first;
  // first >= 1 here, so only the unipotent-type terms remain
  return rpow(qr, -(static_cast<std::int64_t>(first) + 1)) / ((qr - 1) * (1 - rpow(qr, -2)));
}

int instability_degree(TorsorGroup group, int n) {
  if (n < 0) throw InvalidInput("splitting parameter must be non-negative");
  return group == TorsorGroup::SL2 ? 2 * n : n;
}

std::vector<StratumRecord> stratum_table(TorsorGroup group, const BigInt& q, int cutoff) {
  if (cutoff < 0) throw InvalidInput("stratum cutoff must be non-negative");
  constexpr std::int64_t genus = 0;
  std::vector<StratumRecord> rows;
  for (int n = 0; n <= cutoff; ++n) {
    StratumRecord r;
    r.n = n;
    r.instability_degree = instability_degree(group, n);
    r.r_u_dim = n == 0 ? 0 : 1;
    r.codim = static_cast<int>(r.r_u_dim * (genus - 1) + r.instability_degree);
    r.aut_order = aut_order(group, n, q);
    r.mass = Rational(1, r.aut_order);

    if (n >= 1) {
      const std::int64_t rel = relative_dimension(genus, r.r_u_dim, r.instability_degree);
      const Rational fibration_mass = rpow(Rational(q), rel) / (Rational(q) - 1);
      if (fibration_mass != r.mass) {
        throw InvariantViolation("stratum n=" + std::to_string(n) + " of " + to_string(group) +
                                 ": 1/|Aut| = " + to_string(r.mass) + " but fibration gives " +
                                 to_string(fibration_mass));
      }
    }
    if (r.codim != (n == 0 ? 0 : r.instability_degree - 1)) {
      throw InvariantViolation("stratum n=" + std::to_string(n) + " has unexpected codimension");
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

std::int64_t relative_dimension(std::int64_t genus, std::int64_t dim_ru, std::int64_t deg_p) {
  if (dim_ru < 0) throw InvalidInput("unipotent radical dimension must be non-negative");
  return dim_ru * (genus - 1) - deg_p;
}

std::int64_t gamma_threshold(std::int64_t i, std::int64_t genus, std::int64_t num_roots) {
  if (i < 0) throw InvalidInput("cohomological degree must be non-negative");
  const std::int64_t base = 1 + (i + 1) / 2;  // ceil(1 + i/2)
  return genus > 0 ? base : base + num_roots;
}

namespace {

std::uint64_t count_from(const std::vector<std::int64_t>& c, std::size_t k, std::int64_t rest) {
  if (k == c.size()) return rest == 0 ? 1 : 0;
  // the remaining coordinates each contribute at least their coefficient
  std::int64_t reserve = 0;
  for (std::size_t j = k + 1; j < c.size(); ++j) reserve += c[j];
  std::uint64_t total = 0;
  for (std::int64_t n = 1; n * c[k] + reserve <= rest; ++n) {
    total += count_from(c, k + 1, rest - n * c[k]);
  }
  return total;
}

}  // namespace

std::uint64_t count_instability_types(const std::vector<std::int64_t>& coeffs, std::int64_t mu) {
  if (mu < 0) throw InvalidInput("instability degree must be non-negative");
  for (auto c : coeffs) {
    if (c < 1) throw InvalidInput("instability coefficients must be positive");
  }
  return count_from(coeffs, 0, mu);
}

}  // namespace tamagawa
