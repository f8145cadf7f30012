#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tamagawa/exact.hpp"

// Enumeration of torsors on the projective line over F_q.
//
// Every vector bundle on P^1 splits as a sum of line bundles O(a), and
// h^0(O(k)) = max(0, k + 1). Hence:
//
//  * Degree-0 SL_2-torsors are E_n = O(n) + O(-n), n >= 0. For n = 0 the
//    automorphism group is SL_2(F_q), of order q(q^2 - 1). For n >= 1 an
//    automorphism is upper triangular [[t, s], [0, t^{-1}]] with t in F_q^*
//    and s in H^0(O(2n)), giving (q - 1) q^{2n+1}.
//
//  * PGL_2-torsors are projective bundles P(O + O(n)), n >= 0 (n even lifts
//    to degree-0 GL_2 bundles up to twist, n odd to degree 1; these are the
//    two connected components of Bun_{PGL_2}). For n = 0 Aut = PGL_2(F_q);
//    for n >= 1 Aut is B/Z with torus F_q^* and unipotent part H^0(O(n)),
//    giving (q - 1) q^{n+1}.
//
// For n >= 1 the torsor has a canonical Borel reduction whose Lie algebra
// bundle O + L has degree m = deg L: m = 2n for SL_2, m = n for PGL_2. The
// stratum has codimension dim R_u (g - 1) + m = m - 1 on P^1, and its mass
// factors as the torus mass 1/(q - 1) times q^{relative dimension} of
// Bun_B -> Bun_T.

namespace tamagawa {

enum class TorsorGroup { SL2, PGL2 };
enum class Parity { even, odd };

std::string to_string(TorsorGroup group);
std::string to_string(Parity parity);

struct StratumRecord {
  int n = 0;                    // splitting parameter
  int instability_degree = 0;   // m
  int codim = 0;
  int r_u_dim = 0;              // 0 on the semistable stratum (parabolic = G)
  BigInt aut_order;
  Rational mass;
};

BigInt sl2_aut_order(int n, const BigInt& q);
BigInt pgl2_aut_order(int n, const BigInt& q);
BigInt aut_order(TorsorGroup group, int n, const BigInt& q);

/// Exact sum over n <= cutoff of 1/|Aut(E_n)|. A parity filter selects one
/// component of Bun_{PGL_2}; it is rejected for SL_2.
Rational mass_partial_sum(TorsorGroup group, const BigInt& q, int cutoff,
                          std::optional<Parity> parity = std::nullopt);

/// Exact value of the omitted terms n > cutoff (closed geometric series).
Rational mass_tail(TorsorGroup group, const BigInt& q, int cutoff,
                   std::optional<Parity> parity = std::nullopt);

/// Instability degree of the Borel reduction of E_n (0 for n = 0).
int instability_degree(TorsorGroup group, int n);

/// One record per n <= cutoff, each checked against the fibration count
/// mass = q^{relative_dimension(0, 1, m)} / (q - 1) for n >= 1 and against
/// codim = r_u_dim (g - 1) + m. Throws InvariantViolation on mismatch.
std::vector<StratumRecord> stratum_table(TorsorGroup group, const BigInt& q, int cutoff);

/// Relative dimension dim R_u (g - 1) - deg of Bun_P -> Bun_H.
std::int64_t relative_dimension(std::int64_t genus, std::int64_t dim_ru, std::int64_t deg_p);

/// Smallest integer >= 1 + i/2 (g > 0), or >= 1 + i/2 + |Phi| (g = 0).
std::int64_t gamma_threshold(std::int64_t i, std::int64_t genus, std::int64_t num_roots);

/// Number of (n_1, ..., n_s), all n_i >= 1, with sum n_i c_i = mu.
std::uint64_t count_instability_types(const std::vector<std::int64_t>& coeffs, std::int64_t mu);

}  // namespace tamagawa
