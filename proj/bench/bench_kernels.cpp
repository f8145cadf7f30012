// Serial reference vs OpenMP kernel for the brute-force determinant
// histogram, plus the Weyl group enumeration that dominates datum setup.

#include <benchmark/benchmark.h>

#include "tamagawa/kernels/enumeration.hpp"
#include "tamagawa/root_datum.hpp"

namespace {

void BM_DetHistogramSerial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto p = static_cast<std::uint32_t>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(tamagawa::kernels::determinant_histogram_serial(n, p));
  }
}

void BM_DetHistogramParallel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto p = static_cast<std::uint32_t>(state.range(1));
  state.counters["threads"] = tamagawa::kernels::max_threads();
  for (auto _ : state) {
    benchmark::DoNotOptimize(tamagawa::kernels::determinant_histogram_parallel(n, p));
  }
}

void BM_WeylPoincare(benchmark::State& state) {
  const auto type = tamagawa::DynkinType::make(static_cast<char>(state.range(0)),
                                               static_cast<int>(state.range(1)));
  const auto rs = tamagawa::generate_roots(tamagawa::cartan_matrix(type));
  for (auto _ : state) benchmark::DoNotOptimize(tamagawa::weyl_poincare(rs));
}

}  // namespace

BENCHMARK(BM_DetHistogramSerial)->Args({2, 5})->Args({3, 3})->Args({3, 5})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DetHistogramParallel)->Args({2, 5})->Args({3, 3})->Args({3, 5})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WeylPoincare)->Args({'F', 4})->Args({'E', 6})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
