#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tamagawa/exact.hpp"

namespace tamagawa {

using IntMatrix = std::vector<std::vector<std::int64_t>>;
/// Coordinates of a root in the basis of simple roots.
using RootVector = std::vector<int>;
/// Dense coefficient list, index = power of t.
using IntPolynomial = std::vector<std::int64_t>;

enum class Letter : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct DynkinType {
  Letter letter;
  int rank;

  /// Validates the (letter, rank) pair; throws InvalidInput otherwise.
  static DynkinType make(char letter, int rank);

  std::string name() const;  // e.g. "A_2"
  friend bool operator==(const DynkinType&, const DynkinType&) = default;
};

/// Cartan matrix with entry (i, j) = <alpha_i, alpha_j^vee>, simple roots
/// numbered as in Bourbaki. Long/short convention: in B_n the last simple
/// root is short, in C_n it is long, in F_4 roots 3 and 4 are short and in
/// G_2 root 1 is short, so G_2 gives [[2,-1],[-3,2]].
IntMatrix cartan_matrix(DynkinType type);

struct RootSystem {
  IntMatrix cartan;
  std::vector<RootVector> simple_roots;
  /// Positive roots first, ordered by height then lexicographically,
  /// followed by their negatives in the same order.
  std::vector<RootVector> all_roots;
  int num_positive = 0;

  int rank() const { return static_cast<int>(cartan.size()); }
  bool is_positive(std::size_t index) const { return index < static_cast<std::size_t>(num_positive); }
  /// Index of a root in all_roots, or -1.
  int index_of(const RootVector& root) const;
};

/// Reflection s_j(v) = v - <v, alpha_j^vee> alpha_j in root coordinates.
RootVector reflect(const IntMatrix& cartan, const RootVector& v, int j);

/// Closure of the simple roots under the simple reflections. The optional
/// `order` permutes the order in which simple roots seed the closure and in
/// which reflections are applied; the resulting set does not depend on it.
RootSystem generate_roots(const IntMatrix& cartan, std::span<const int> order = {},
                          std::size_t max_roots = 4096);

inline constexpr std::uint64_t kDefaultWeylBound = 10'000'000;

/// Sum over w in W of t^length(w), by breadth-first search over W acting as
/// permutations of all_roots. Throws ResourceLimit when |W| > bound.
IntPolynomial weyl_poincare(const RootSystem& rs, std::uint64_t bound = kDefaultWeylBound);

/// |W| predicted by the dual of the root-height partition. Used to reject
/// oversized Weyl groups before any enumeration.
BigInt weyl_order_from_heights(const RootSystem& rs);

/// Chevalley degrees d_1 <= ... <= d_r.
struct InvariantDegrees {
  std::vector<int> degrees;

  BigInt product() const;
  int sum_minus_one() const;
  /// Number of degrees equal to n, i.e. the dimension of the degree-n
  /// piece of the space of generating invariants.
  int multiplicity(int n) const;
};

/// Recovers {d_i} from P(t) = prod_i (1 + t + ... + t^{d_i - 1}) by exact
/// polynomial division, largest candidate first.
InvariantDegrees invariant_degrees(const IntPolynomial& poincare);

/// Invariant factors d_1 | d_2 | ... of an integer square matrix.
std::vector<std::int64_t> smith_normal_form(const IntMatrix& m);

std::int64_t determinant(const IntMatrix& m);

enum class IsogenyKind { simply_connected, adjoint, quotient };

/// For D_n with n even the center is Z/2 x Z/2 and there are inequivalent
/// quotients of order 2. The tag records which is meant; it never changes
/// the order of the fundamental group.
enum class DEvenTag { special_orthogonal, half_spin };

struct Isogeny {
  IsogenyKind kind = IsogenyKind::simply_connected;
  std::int64_t quotient_order = 1;  // only meaningful for kind == quotient
  std::optional<DEvenTag> d_even_tag;

  static Isogeny simply_connected() { return {}; }
  static Isogeny adjoint() { return {IsogenyKind::adjoint, 1, std::nullopt}; }
  static Isogeny quotient(std::int64_t k, std::optional<DEvenTag> tag = std::nullopt) {
    return {IsogenyKind::quotient, k, tag};
  }
  std::string name() const;
};

struct RootDatum {
  DynkinType type;
  RootSystem root_system;
  Isogeny isogeny;
  std::int64_t pi1_order = 1;
  int dim_g = 0;
  InvariantDegrees degrees;
  IntPolynomial poincare;

  int rank() const { return type.rank; }
  int num_roots() const { return static_cast<int>(root_system.all_roots.size()); }
  int num_positive() const { return root_system.num_positive; }
  std::string summary() const;  // e.g. "A_1 (adjoint)"
};

/// Builds the full datum: roots, Weyl Poincare polynomial, degrees, pi_1.
RootDatum make_root_datum(DynkinType type, Isogeny isogeny,
                          std::uint64_t weyl_bound = kDefaultWeylBound);

/// |pi_1(G)|: 1 for simply connected, the product of the Smith invariant
/// factors of the Cartan matrix for adjoint, k for a quotient by a central
/// subgroup of order k.
std::int64_t fundamental_group_order(DynkinType type, const Isogeny& isogeny);
std::int64_t fundamental_group_order(const RootDatum& datum);

}  // namespace tamagawa
