#include <algorithm>
#include <cstdint>
#include <unordered_set>
#include <vector>

#include "tamagawa/errors.hpp"
#include "tamagawa/root_datum.hpp"

namespace tamagawa {

namespace {

using Perm = std::vector<std::uint16_t>;

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (auto x : p) {
      h ^= x;
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

// Number of positive roots sent to negative roots.
int inversions(const Perm& w, int num_positive) {
  int count = 0;
  for (int r = 0; r < num_positive; ++r) count += w[r] >= num_positive;
  return count;
}

}  // namespace

BigInt weyl_order_from_heights(const RootSystem& rs) {
  // Heights of the positive roots form a partition whose dual partition is
  // the list of exponents m_i = d_i - 1.
  std::vector<int> per_height;
  for (int i = 0; i < rs.num_positive; ++i) {
    int h = 0;
    for (int c : rs.all_roots[i]) h += c;
    if (static_cast<int>(per_height.size()) < h) per_height.resize(h, 0);
    ++per_height[h - 1];
  }
  BigInt order = 1;
  for (int i = 1; i <= rs.rank(); ++i) {
    const auto exponent = std::count_if(per_height.begin(), per_height.end(),
                                        [i](int c) { return c >= i; });
    order *= exponent + 1;
  }
  return order;
}

IntPolynomial weyl_poincare(const RootSystem& rs, std::uint64_t bound) {
  const std::size_t num_roots = rs.all_roots.size();
  if (num_roots > 65535) throw ResourceLimit("root system too large for Weyl enumeration");

  const BigInt predicted = weyl_order_from_heights(rs);
  if (predicted > bound) {
    throw ResourceLimit("Weyl group of order " + predicted.str() + " exceeds the bound " +
                        std::to_string(bound));
  }

  std::vector<Perm> generators;
  for (int j = 0; j < rs.rank(); ++j) {
    Perm s(num_roots);
    for (std::size_t r = 0; r < num_roots; ++r) {
      const int image = rs.index_of(reflect(rs.cartan, rs.all_roots[r], j));
      if (image < 0) throw InvalidInput("root set is not stable under simple reflections");
      s[r] = static_cast<std::uint16_t>(image);
    }
    generators.push_back(std::move(s));
  }

  Perm identity(num_roots);
  for (std::size_t r = 0; r < num_roots; ++r) identity[r] = static_cast<std::uint16_t>(r);

  // Breadth-first over lengths. Multiplying by a simple reflection changes
  // the length by exactly one, so layer k+1 is the set of neighbours of
  // layer k with k+1 inversions and only one layer is held at a time.
  IntPolynomial coeffs{1};
  std::uint64_t total = 1;
  std::vector<Perm> layer{identity};
  for (int k = 0;; ++k) {
    std::unordered_set<Perm, PermHash> next;
    Perm u(num_roots);
    for (const Perm& w : layer) {
      for (const Perm& s : generators) {
        for (std::size_t r = 0; r < num_roots; ++r) u[r] = s[w[r]];
        const int len = inversions(u, rs.num_positive);
        if (len == k + 1) {
          next.insert(u);
        } else if (len != k - 1) {
          throw InvariantViolation("simple reflection changed length by more than one");
        }
      }
    }
    if (next.empty()) break;
    total += next.size();
    if (total > bound) {
      throw ResourceLimit("Weyl group exceeds the bound " + std::to_string(bound));
    }
    coeffs.push_back(static_cast<std::int64_t>(next.size()));
    layer.assign(std::make_move_iterator(next.begin()), std::make_move_iterator(next.end()));
  }

  if (static_cast<int>(coeffs.size()) - 1 != rs.num_positive || total != predicted) {
    throw InvariantViolation("Weyl enumeration disagrees with the root-height prediction");
  }
  return coeffs;
}

}  // namespace tamagawa
