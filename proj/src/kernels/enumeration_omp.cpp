#include <array>
#include <stdexcept>

#include "tamagawa/kernels/enumeration.hpp"

#ifdef TAMAGAWA_HAS_OPENMP
#include <omp.h>
#endif

namespace tamagawa::kernels {

namespace {

constexpr int kMaxDim = 4;

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  // Fermat; p is prime
  std::uint64_t result = 1, base = a % p;
  for (std::uint32_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1U) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<std::uint32_t>(result);
}

std::uint32_t det_mod_prime(std::array<std::uint32_t, kMaxDim * kMaxDim>& m, int n,
                            std::uint32_t p) {
  std::uint64_t det = 1;
  for (int c = 0; c < n; ++c) {
    int pivot = c;
    while (pivot < n && m[pivot * n + c] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != c) {
      for (int j = 0; j < n; ++j) std::swap(m[pivot * n + j], m[c * n + j]);
      det = (p - det) % p;
    }
    det = det * m[c * n + c] % p;
    const std::uint64_t inv = inverse_mod(m[c * n + c], p);
    for (int i = c + 1; i < n; ++i) {
      const std::uint64_t f = m[i * n + c] * inv % p;
      if (f == 0) continue;
      for (int j = c; j < n; ++j) {
        m[i * n + j] = static_cast<std::uint32_t>((m[i * n + j] + p - f * m[c * n + j] % p) % p);
      }
    }
  }
  return static_cast<std::uint32_t>(det);
}

}  // namespace

int max_threads() {
#ifdef TAMAGAWA_HAS_OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

std::vector<std::uint64_t> determinant_histogram_parallel(int n, std::uint32_t p) {
  if (n < 1 || n > kMaxDim) throw std::invalid_argument("matrix dimension out of kernel range");
  const int cells = n * n;
  std::int64_t total = 1;
  for (int i = 0; i < cells; ++i) total *= p;

  std::vector<std::uint64_t> hist(p, 0);
#pragma omp parallel
  {
    std::vector<std::uint64_t> local(p, 0);
    std::array<std::uint32_t, kMaxDim * kMaxDim> m{};
#pragma omp for schedule(static)
    for (std::int64_t index = 0; index < total; ++index) {
      std::int64_t rest = index;
      for (int k = 0; k < cells; ++k) {
        m[k] = static_cast<std::uint32_t>(rest % p);
        rest /= p;
      }
      ++local[det_mod_prime(m, n, p)];
    }
#pragma omp critical(tamagawa_hist_merge)
    for (std::uint32_t d = 0; d < p; ++d) hist[d] += local[d];
  }
  return hist;
}

}  // namespace tamagawa::kernels
