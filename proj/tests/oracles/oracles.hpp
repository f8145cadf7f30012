#pragma once

// Test-only reference computations. Nothing here calls into the library's
// algorithms for the quantity being checked; they share only input types.

#include <algorithm>
#include <complex>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "tamagawa/exact.hpp"
#include "tamagawa/root_datum.hpp"

namespace oracle {

using tamagawa::BigInt;
using tamagawa::IntMatrix;
using tamagawa::Rational;

// ---------------------------------------------------------------------------
// Weyl group as a matrix group acting on root coordinates.
//
// Reflection matrices S_j act on column vectors of root coordinates. The
// group is enumerated by BFS in the Cayley graph; BFS distance is the word
// length. Roots are the orbit of the simple roots; degrees come from the
// dual of the root-height partition.

using Mat = std::vector<std::int64_t>;  // row-major r x r

struct WeylData {
  std::vector<std::int64_t> poincare;
  std::vector<int> degrees;
  std::size_t num_roots = 0;
  std::size_t num_positive = 0;
};

inline Mat mat_mul(const Mat& a, const Mat& b, int r) {
  Mat c(r * r, 0);
  for (int i = 0; i < r; ++i)
    for (int k = 0; k < r; ++k)
      for (int j = 0; j < r; ++j) c[i * r + j] += a[i * r + k] * b[k * r + j];
  return c;
}

inline WeylData weyl_by_matrices(const IntMatrix& cartan) {
  const int r = static_cast<int>(cartan.size());
  // s_j(e_i) = e_i - cartan[i][j] e_j ; column i of S_j is the image of e_i
  std::vector<Mat> gens;
  for (int j = 0; j < r; ++j) {
    Mat s(r * r, 0);
    for (int i = 0; i < r; ++i) {
      s[i * r + i] += 1;
      s[j * r + i] -= cartan[i][j];
    }
    gens.push_back(s);
  }
  Mat id(r * r, 0);
  for (int i = 0; i < r; ++i) id[i * r + i] = 1;

  std::set<Mat> seen{id};
  std::vector<Mat> frontier{id};
  WeylData out;
  out.poincare.push_back(1);
  std::set<std::vector<std::int64_t>> roots;
  while (!frontier.empty()) {
    std::vector<Mat> next;
    for (const auto& w : frontier) {
      for (int i = 0; i < r; ++i) {
        std::vector<std::int64_t> col(r);
        for (int k = 0; k < r; ++k) col[k] = w[k * r + i];
        roots.insert(col);
      }
      for (const auto& s : gens) {
        Mat u = mat_mul(s, w, r);
        if (seen.insert(u).second) next.push_back(std::move(u));
      }
    }
    if (!next.empty()) out.poincare.push_back(static_cast<std::int64_t>(next.size()));
    frontier = std::move(next);
  }
  out.num_roots = roots.size();
  std::vector<int> per_height;
  for (const auto& v : roots) {
    if (std::any_of(v.begin(), v.end(), [](auto c) { return c < 0; })) continue;
    ++out.num_positive;
    const int h = static_cast<int>(std::accumulate(v.begin(), v.end(), std::int64_t{0}));
    if (static_cast<int>(per_height.size()) < h) per_height.resize(h, 0);
    ++per_height[h - 1];
  }
  for (int i = 1; i <= r; ++i) {
    const int e = static_cast<int>(std::count_if(per_height.begin(), per_height.end(),
                                                 [i](int c) { return c >= i; }));
    out.degrees.push_back(e + 1);
  }
  std::sort(out.degrees.begin(), out.degrees.end());
  return out;
}

// ---------------------------------------------------------------------------
// Smith invariant factors from determinantal divisors: D_k = gcd of all
// k x k minors, d_k = D_k / D_{k-1}.

inline BigInt det_rec(const std::vector<std::vector<std::int64_t>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  BigInt acc = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    std::vector<std::vector<std::int64_t>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<std::int64_t> row;
      for (std::size_t j = 0; j < n; ++j)
        if (j != c) row.push_back(m[i][j]);
      minor.push_back(row);
    }
    const BigInt term = m[0][c] * det_rec(minor);
    acc += (c % 2 == 0) ? term : BigInt(-term);
  }
  return acc;
}

inline void subsets(int n, int k, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

inline std::vector<std::int64_t> smith_by_minors(const IntMatrix& m) {
  const int n = static_cast<int>(m.size());
  std::vector<BigInt> dk{1};
  for (int k = 1; k <= n; ++k) {
    std::vector<std::vector<int>> idx;
    std::vector<int> cur;
    subsets(n, k, 0, cur, idx);
    BigInt g = 0;
    for (const auto& rows : idx) {
      for (const auto& cols : idx) {
        std::vector<std::vector<std::int64_t>> sub;
        for (int i : rows) {
          std::vector<std::int64_t> row;
          for (int j : cols) row.push_back(m[i][j]);
          sub.push_back(row);
        }
        g = boost::multiprecision::gcd(g, abs(det_rec(sub)));
      }
    }
    dk.push_back(g);
  }
  std::vector<std::int64_t> out;
  for (int k = 1; k <= n; ++k) {
    out.push_back(dk[k - 1] == 0 ? 0 : (dk[k] / dk[k - 1]).convert_to<std::int64_t>());
  }
  return out;
}

// ---------------------------------------------------------------------------
// Elliptic curves y^2 + y = x^3 + c1 x over F_{2^m}, counted point by point.
// y^2 + y = x^3 + x has 5 points over F_2; y^2 + y = x^3 has 3.

inline std::uint32_t gf2_polymod_degree(std::uint32_t p) {
  return p == 0 ? 0 : 31 - __builtin_clz(p);
}

inline bool gf2_irreducible(std::uint32_t p) {
  const std::uint32_t d = gf2_polymod_degree(p);
  for (std::uint32_t f = 2; gf2_polymod_degree(f) * 2 <= d; ++f) {
    // long division of p by f over F_2
    std::uint32_t r = p;
    const std::uint32_t df = gf2_polymod_degree(f);
    while (r != 0 && gf2_polymod_degree(r) >= df) r ^= f << (gf2_polymod_degree(r) - df);
    if (r == 0) return false;
  }
  return true;
}

/// Number of monic irreducible polynomials of degree m over F_2 by trial
/// division; b_m(P^1) = this count, plus 1 for the point at infinity when m = 1.
inline std::uint64_t gf2_irreducible_count(int m) {
  std::uint64_t c = 0;
  for (std::uint32_t p = 1U << m; p < (2U << m); ++p) c += gf2_irreducible(p);
  return c;
}

struct GF2m {
  int m;
  std::uint32_t modulus;
  explicit GF2m(int degree) : m(degree), modulus(0) {
    for (std::uint32_t p = 1U << m; p < (2U << m); ++p) {
      if (gf2_irreducible(p)) {
        modulus = p;
        break;
      }
    }
  }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t r = 0;
    while (b) {
      if (b & 1U) r ^= a;
      b >>= 1;
      a <<= 1;
      if (a & (1U << m)) a ^= modulus;
    }
    return r;
  }
};

inline std::uint64_t elliptic_points_gf2m(int linear_coeff, int m) {
  const GF2m f(m);
  const std::uint32_t size = 1U << m;
  // count y with y^2 + y = rhs, per rhs value
  std::vector<std::uint32_t> solutions(size, 0);
  for (std::uint32_t y = 0; y < size; ++y) ++solutions[f.mul(y, y) ^ y];
  std::uint64_t count = 1;  // point at infinity
  for (std::uint32_t x = 0; x < size; ++x) {
    std::uint32_t rhs = f.mul(f.mul(x, x), x);
    if (linear_coeff) rhs ^= x;
    count += solutions[rhs];
  }
  return count;
}

// ---------------------------------------------------------------------------
// Automorphisms of O(a0) + O(a1) on P^1 over F_p, by enumerating matrices of
// binary forms: entry (i, j) is a form of degree a_i - a_j (zero if
// negative). The determinant is a constant.

inline std::vector<std::int64_t> form_mul(const std::vector<std::int64_t>& a,
                                          const std::vector<std::int64_t>& b, int p) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::int64_t> c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  return c;
}

/// Returns (#det == 1, #det != 0).
inline std::pair<std::uint64_t, std::uint64_t> rank2_automorphisms(int a0, int a1, int p) {
  const int deg[2][2] = {{0, a0 - a1}, {a1 - a0, 0}};
  int sizes[2][2];
  int total_coeffs = 0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      sizes[i][j] = deg[i][j] < 0 ? 0 : deg[i][j] + 1;
      total_coeffs += sizes[i][j];
    }
  std::vector<std::int64_t> coeffs(total_coeffs, 0);
  std::uint64_t det_one = 0, invertible = 0;
  for (;;) {
    std::vector<std::int64_t> e[2][2];
    int pos = 0;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        e[i][j].assign(coeffs.begin() + pos, coeffs.begin() + pos + sizes[i][j]);
        pos += sizes[i][j];
      }
    auto ad = form_mul(e[0][0], e[1][1], p);
    auto bc = form_mul(e[0][1], e[1][0], p);
    std::int64_t det = (ad.empty() ? 0 : ad[0]) - (bc.empty() ? 0 : bc[0]);
    det = ((det % p) + p) % p;
    det_one += det == 1;
    invertible += det != 0;

    int k = 0;
    while (k < total_coeffs && ++coeffs[k] == p) coeffs[k++] = 0;
    if (k == total_coeffs) break;
  }
  return {det_one, invertible};
}

// ---------------------------------------------------------------------------
// Number of (n_1..n_s), n_i >= 1, with sum n_i c_i = mu, by dynamic
// programming over the shifted target mu - sum c_i.

inline std::uint64_t compositions_dp(const std::vector<std::int64_t>& c, std::int64_t mu) {
  std::int64_t target = mu;
  for (auto x : c) target -= x;
  if (target < 0) return 0;
  std::vector<std::uint64_t> ways(target + 1, 0);
  ways[0] = 1;
  for (auto x : c)
    for (std::int64_t v = x; v <= target; ++v) ways[v] += ways[v - x];
  return ways[target];
}

// ---------------------------------------------------------------------------
// Numeric Frobenius eigenvalues for genus <= 1 L-polynomials.

inline std::vector<std::complex<double>> eigenvalues_genus1(double a1, double q) {
  // P(T) = 1 + a1 T + q T^2 = (1 - alpha T)(1 - beta T): alpha + beta = -a1, alpha beta = q
  const std::complex<double> disc = std::sqrt(std::complex<double>(a1 * a1 - 4 * q));
  return {(-a1 + disc) / 2.0, (-a1 - disc) / 2.0};
}

}  // namespace oracle
