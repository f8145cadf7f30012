#pragma once

#include <cstdint>
#include <vector>

namespace tamagawa::kernels {

/// hist[d] = number of n x n matrices over the prime field F_p whose
/// determinant is d, for d in [0, p).
///
/// The serial version walks the matrices with an odometer and expands the
/// determinant over permutations; it is the reference the parallel kernel is
/// tested against. The parallel version partitions the index range
/// [0, p^(n*n)) across OpenMP threads, decodes each index and eliminates
/// modulo p. Counts are exact integers, so thread count and schedule never
/// change the result.
std::vector<std::uint64_t> determinant_histogram_serial(int n, std::uint32_t p);
std::vector<std::uint64_t> determinant_histogram_parallel(int n, std::uint32_t p);

/// Threads the parallel kernel will use (1 without OpenMP).
int max_threads();

}  // namespace tamagawa::kernels
