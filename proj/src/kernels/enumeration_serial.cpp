#include <algorithm>
#include <numeric>

#include "tamagawa/kernels/enumeration.hpp"

namespace tamagawa::kernels {

namespace {

struct SignedPerm {
  std::vector<int> perm;
  int sign;
};

std::vector<SignedPerm> all_permutations(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<SignedPerm> out;
  do {
    int inv = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) inv += p[i] > p[j];
    }
    out.push_back({p, inv % 2 == 0 ? 1 : -1});
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace

std::vector<std::uint64_t> determinant_histogram_serial(int n, std::uint32_t p) {
  const auto perms = all_permutations(n);
  const int cells = n * n;
  std::vector<std::uint32_t> entry(cells, 0);
  std::vector<std::uint64_t> hist(p, 0);
  for (;;) {
    std::int64_t det = 0;
    for (const auto& sp : perms) {
      std::int64_t term = sp.sign;
      for (int i = 0; i < n; ++i) term = term * entry[i * n + sp.perm[i]] % p;
      det += term;
    }
    det %= static_cast<std::int64_t>(p);
    if (det < 0) det += p;
    ++hist[static_cast<std::size_t>(det)];

    int k = 0;
    while (k < cells && ++entry[k] == p) entry[k++] = 0;
    if (k == cells) break;
  }
  return hist;
}

}  // namespace tamagawa::kernels
