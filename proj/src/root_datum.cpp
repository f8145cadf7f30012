#include "tamagawa/root_datum.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <set>
#include <string_view>

#include "tamagawa/errors.hpp"

namespace tamagawa {

namespace {

bool rank_admissible(Letter letter, int rank) {
  switch (letter) {
    case Letter::A: return rank >= 1;
    case Letter::B: return rank >= 2;
    case Letter::C: return rank >= 3;
    case Letter::D: return rank >= 4;
    case Letter::E: return rank >= 6 && rank <= 8;
    case Letter::F: return rank == 4;
    case Letter::G: return rank == 2;
  }
  return false;
}

void link(IntMatrix& m, int i, int j) {
  m[i][j] = -1;
  m[j][i] = -1;
}

int height(const RootVector& v) { return std::accumulate(v.begin(), v.end(), 0); }

}  // namespace

DynkinType DynkinType::make(char letter, int rank) {
  if (std::string_view("ABCDEFG").find(letter) == std::string_view::npos) {
    throw InvalidInput(std::string("unknown Dynkin letter '") + letter + "'");
  }
  const auto l = static_cast<Letter>(letter);
  if (!rank_admissible(l, rank)) {
    throw InvalidInput("invalid Dynkin type " + std::string(1, letter) + "_" +
                       std::to_string(rank));
  }
  return {l, rank};
}

std::string DynkinType::name() const {
  return std::string(1, static_cast<char>(letter)) + "_" + std::to_string(rank);
}

IntMatrix cartan_matrix(DynkinType type) {
  if (!rank_admissible(type.letter, type.rank)) {
    throw InvalidInput("invalid Dynkin type " + type.name());
  }
  const int n = type.rank;
  IntMatrix m(n, std::vector<std::int64_t>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 2;

  switch (type.letter) {
    case Letter::A:
      for (int i = 0; i + 1 < n; ++i) link(m, i, i + 1);
      break;
    case Letter::B:
      for (int i = 0; i + 1 < n; ++i) link(m, i, i + 1);
      m[n - 2][n - 1] = -2;
      break;
    case Letter::C:
      for (int i = 0; i + 1 < n; ++i) link(m, i, i + 1);
      m[n - 1][n - 2] = -2;
      break;
    case Letter::D:
      for (int i = 0; i + 2 < n; ++i) link(m, i, i + 1);
      link(m, n - 3, n - 1);
      break;
    case Letter::E:
      link(m, 0, 2);
      link(m, 1, 3);
      for (int i = 2; i + 1 < n; ++i) link(m, i, i + 1);
      break;
    case Letter::F:
      link(m, 0, 1);
      link(m, 1, 2);
      link(m, 2, 3);
      m[1][2] = -2;
      break;
    case Letter::G:
      m[0][1] = -1;
      m[1][0] = -3;
      break;
  }
  return m;
}

int RootSystem::index_of(const RootVector& root) const {
  // all_roots is small (<= 240 for exceptional types); a linear scan keeps
  // the type a plain aggregate.
  for (std::size_t i = 0; i < all_roots.size(); ++i) {
    if (all_roots[i] == root) return static_cast<int>(i);
  }
  return -1;
}

RootVector reflect(const IntMatrix& cartan, const RootVector& v, int j) {
  std::int64_t pairing = 0;
  for (std::size_t i = 0; i < v.size(); ++i) pairing += v[i] * cartan[i][j];
  RootVector out = v;
  out[j] -= static_cast<int>(pairing);
  return out;
}

RootSystem generate_roots(const IntMatrix& cartan, std::span<const int> order,
                          std::size_t max_roots) {
  const int n = static_cast<int>(cartan.size());
  for (const auto& row : cartan) {
    if (static_cast<int>(row.size()) != n) throw InvalidInput("Cartan matrix is not square");
  }
  for (int i = 0; i < n; ++i) {
    if (cartan[i][i] != 2) throw InvalidInput("Cartan matrix diagonal must be 2");
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (cartan[i][j] > 0 || cartan[i][j] < -3) {
        throw InvalidInput("Cartan matrix off-diagonal entries must lie in {0,-1,-2,-3}");
      }
      if ((cartan[i][j] == 0) != (cartan[j][i] == 0)) {
        throw InvalidInput("Cartan matrix zero pattern is not symmetric");
      }
    }
  }

  std::vector<int> seq(n);
  if (order.empty()) {
    std::iota(seq.begin(), seq.end(), 0);
  } else {
    seq.assign(order.begin(), order.end());
    std::vector<int> check = seq;
    std::sort(check.begin(), check.end());
    std::vector<int> ident(n);
    std::iota(ident.begin(), ident.end(), 0);
    if (check != ident) throw InvalidInput("processing order is not a permutation");
  }

  RootSystem rs;
  rs.cartan = cartan;
  for (int i = 0; i < n; ++i) {
    RootVector e(n, 0);
    e[i] = 1;
    rs.simple_roots.push_back(std::move(e));
  }

  std::set<RootVector> seen;
  std::deque<RootVector> queue;
  for (int i : seq) {
    seen.insert(rs.simple_roots[i]);
    queue.push_back(rs.simple_roots[i]);
  }
  while (!queue.empty()) {
    RootVector v = std::move(queue.front());
    queue.pop_front();
    for (int j : seq) {
      RootVector w = reflect(cartan, v, j);
      if (seen.insert(w).second) {
        if (seen.size() > max_roots) {
          throw InvalidInput("root closure exceeds " + std::to_string(max_roots) +
                             " roots; Cartan matrix is not of finite type");
        }
        queue.push_back(std::move(w));
      }
    }
  }

  std::vector<RootVector> positive;
  for (const auto& v : seen) {
    const bool nonneg = std::all_of(v.begin(), v.end(), [](int c) { return c >= 0; });
    const bool nonpos = std::all_of(v.begin(), v.end(), [](int c) { return c <= 0; });
    if (!nonneg && !nonpos) throw InvalidInput("mixed-sign root: Cartan matrix is not of finite type");
    if (nonneg) positive.push_back(v);
  }
  std::sort(positive.begin(), positive.end(), [](const RootVector& a, const RootVector& b) {
    const int ha = height(a), hb = height(b);
    return ha != hb ? ha < hb : a < b;
  });
  if (2 * positive.size() != seen.size()) {
    throw InvalidInput("root set is not closed under negation");
  }
  rs.num_positive = static_cast<int>(positive.size());
  rs.all_roots = positive;
  for (const auto& v : positive) {
    RootVector neg = v;
    for (auto& c : neg) c = -c;
    rs.all_roots.push_back(std::move(neg));
  }
  return rs;
}

BigInt InvariantDegrees::product() const {
  BigInt p = 1;
  for (int d : degrees) p *= d;
  return p;
}

int InvariantDegrees::sum_minus_one() const {
  int s = 0;
  for (int d : degrees) s += d - 1;
  return s;
}

int InvariantDegrees::multiplicity(int n) const {
  return static_cast<int>(std::count(degrees.begin(), degrees.end(), n));
}

namespace {

// Divides p by 1 + t + ... + t^{d-1} if the division is exact.
std::optional<IntPolynomial> divide_by_qint(const IntPolynomial& p, int d) {
  const int n = static_cast<int>(p.size()) - 1;
  const int dd = d - 1;  // degree of the divisor
  if (n < dd) return std::nullopt;
  IntPolynomial r = p;
  IntPolynomial quot(n - dd + 1, 0);
  for (int i = n; i >= dd; --i) {
    const std::int64_t c = r[i];
    if (c == 0) continue;
    quot[i - dd] = c;
    for (int k = 0; k <= dd; ++k) r[i - dd + k] -= c;
  }
  for (int i = 0; i < dd; ++i) {
    if (r[i] != 0) return std::nullopt;
  }
  return quot;
}

}  // namespace

InvariantDegrees invariant_degrees(const IntPolynomial& poincare) {
  IntPolynomial p = poincare;
  while (p.size() > 1 && p.back() == 0) p.pop_back();
  if (p.empty() || p[0] != 1) throw InvalidInput("Poincare polynomial must have constant term 1");

  InvariantDegrees out;
  const int top = static_cast<int>(p.size());  // deg + 1 bounds every d_i
  for (int d = top; d >= 2; --d) {
    while (auto quot = divide_by_qint(p, d)) {
      out.degrees.push_back(d);
      p = std::move(*quot);
    }
  }
  if (p != IntPolynomial{1}) {
    throw InvalidInput("polynomial is not a product of t-integers [d]_t");
  }
  std::sort(out.degrees.begin(), out.degrees.end());
  return out;
}

std::vector<std::int64_t> smith_normal_form(const IntMatrix& input) {
  IntMatrix a = input;
  const int n = static_cast<int>(a.size());
  for (const auto& row : a) {
    if (static_cast<int>(row.size()) != n) throw InvalidInput("Smith normal form needs a square matrix");
  }

  for (int s = 0; s < n; ++s) {
    for (;;) {
      // pivot: smallest nonzero |entry| in the trailing block
      int pr = -1, pc = -1;
      for (int i = s; i < n; ++i) {
        for (int j = s; j < n; ++j) {
          if (a[i][j] != 0 && (pr < 0 || std::llabs(a[i][j]) < std::llabs(a[pr][pc]))) {
            pr = i;
            pc = j;
          }
        }
      }
      if (pr < 0) break;  // trailing block is zero
      std::swap(a[s], a[pr]);
      for (int i = 0; i < n; ++i) std::swap(a[i][s], a[i][pc]);

      bool clean = true;
      for (int i = s + 1; i < n; ++i) {
        const std::int64_t f = a[i][s] / a[s][s];
        for (int j = s; j < n; ++j) a[i][j] -= f * a[s][j];
        if (a[i][s] != 0) clean = false;
      }
      for (int j = s + 1; j < n; ++j) {
        const std::int64_t f = a[s][j] / a[s][s];
        for (int i = s; i < n; ++i) a[i][j] -= f * a[i][s];
        if (a[s][j] != 0) clean = false;
      }
      if (!clean) continue;

      // pivot must divide the whole trailing block
      int bad_row = -1;
      for (int i = s + 1; i < n && bad_row < 0; ++i) {
        for (int j = s + 1; j < n; ++j) {
          if (a[i][j] % a[s][s] != 0) {
            bad_row = i;
            break;
          }
        }
      }
      if (bad_row < 0) break;
      for (int j = s; j < n; ++j) a[s][j] += a[bad_row][j];
    }
  }

  std::vector<std::int64_t> diag(n);
  for (int i = 0; i < n; ++i) diag[i] = std::llabs(a[i][i]);
  return diag;
}

std::int64_t determinant(const IntMatrix& input) {
  // Fraction-free Bareiss elimination.
  const int n = static_cast<int>(input.size());
  if (n == 0) return 1;
  std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = input[i].at(j);
  }
  BigInt prev = 1;
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i) {
        if (a[i][k] != 0) {
          swap_row = i;
          break;
        }
      }
      if (swap_row < 0) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1].convert_to<std::int64_t>();
}

std::string Isogeny::name() const {
  switch (kind) {
    case IsogenyKind::simply_connected: return "simply_connected";
    case IsogenyKind::adjoint: return "adjoint";
    case IsogenyKind::quotient: {
      std::string s = "quotient_order_" + std::to_string(quotient_order);
      if (d_even_tag) {
        s += *d_even_tag == DEvenTag::special_orthogonal ? " (special_orthogonal)" : " (half_spin)";
      }
      return s;
    }
  }
  return "?";
}

std::string RootDatum::summary() const { return type.name() + " (" + isogeny.name() + ")"; }

std::int64_t fundamental_group_order(DynkinType type, const Isogeny& isogeny) {
  const IntMatrix cartan = cartan_matrix(type);
  const std::int64_t det = std::llabs(determinant(cartan));
  const bool d_even = type.letter == Letter::D && type.rank % 2 == 0;

  if (isogeny.d_even_tag && !(isogeny.kind == IsogenyKind::quotient && d_even &&
                              isogeny.quotient_order == 2)) {
    throw InvalidInput("D_even tag is only meaningful for a quotient of order 2 of D_n, n even");
  }

  switch (isogeny.kind) {
    case IsogenyKind::simply_connected:
      return 1;
    case IsogenyKind::adjoint: {
      const auto factors = smith_normal_form(cartan);
      const std::int64_t order =
          std::accumulate(factors.begin(), factors.end(), std::int64_t{1}, std::multiplies<>());
      if (order != det) {
        throw InvariantViolation("Smith invariant factors of " + type.name() +
                                 " do not multiply to |det|");
      }
      return order;
    }
    case IsogenyKind::quotient: {
      const std::int64_t k = isogeny.quotient_order;
      // The center is the finite abelian group with invariant factors given
      // by the Smith form of the Cartan matrix (cyclic except for D_even);
      // such a group has a subgroup of order k exactly when k divides |det|.
      if (k < 1 || det % k != 0) {
        throw InvalidInput("center of " + type.name() + " (order " + std::to_string(det) +
                           ") has no subgroup of order " + std::to_string(k));
      }
      return k;
    }
  }
  return 1;
}

std::int64_t fundamental_group_order(const RootDatum& datum) {
  return fundamental_group_order(datum.type, datum.isogeny);
}

RootDatum make_root_datum(DynkinType type, Isogeny isogeny, std::uint64_t weyl_bound) {
  RootDatum datum{type, generate_roots(cartan_matrix(type)), isogeny, 1, 0, {}, {}};
  datum.pi1_order = fundamental_group_order(type, isogeny);
  datum.dim_g = datum.rank() + datum.num_roots();
  datum.poincare = weyl_poincare(datum.root_system, weyl_bound);
  datum.degrees = invariant_degrees(datum.poincare);

  std::int64_t weyl_order = 0;
  for (auto c : datum.poincare) weyl_order += c;
  if (datum.degrees.product() != weyl_order ||
      datum.degrees.sum_minus_one() != datum.num_positive() ||
      static_cast<int>(datum.degrees.degrees.size()) != datum.rank()) {
    throw InvariantViolation("Chevalley degrees of " + type.name() +
                             " are inconsistent with |W| or the number of positive roots");
  }
  return datum;
}

}  // namespace tamagawa
