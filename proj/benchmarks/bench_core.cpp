#include <benchmark/benchmark.h>

#include "xset/bounded_set.hpp"
#include "xset/counting.hpp"
#include "xset/generators.hpp"
#include "xset/parallel.hpp"

namespace {

void BM_Sieve(benchmark::State& state) {
  const xset::u64 limit = static_cast<xset::u64>(state.range(0));
  for (auto _ : state) {
    auto p = xset::primes(limit);
    benchmark::DoNotOptimize(p);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Sieve)->RangeMultiplier(10)->Range(100000, 100000000)->Complexity();

void BM_CubeFold(benchmark::State& state) {
  const xset::u64 limit = static_cast<xset::u64>(state.range(0));
  const auto cubes = xset::kth_powers({3, limit});
  for (auto _ : state) {
    auto s = xset::h_fold(cubes, 6, limit);
    benchmark::DoNotOptimize(s);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CubeFold)->RangeMultiplier(10)->Range(100000, 100000000)->Complexity();

void BM_Upsilon(benchmark::State& state) {
  const xset::u64 n = static_cast<xset::u64>(state.range(0));
  const auto cubes = xset::kth_powers({3, 3 * n});
  const auto five = xset::h_fold(cubes, 5, 3 * n);
  const auto six = xset::sumset(five, cubes, 3 * n);
  const auto comp = six.complement_slice(xset::Slice(0, 3 * n));
  for (auto _ : state) {
    auto u = xset::upsilon(comp, cubes, n);
    benchmark::DoNotOptimize(u);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Upsilon)->RangeMultiplier(10)->Range(1000, 1000000)->Complexity();

void BM_SumsetThreads(benchmark::State& state) {
  xset::set_worker_count(static_cast<unsigned>(state.range(0)));
  const xset::u64 limit = 10000000;
  const auto cubes = xset::kth_powers({3, limit});
  const auto base = xset::h_fold(cubes, 3, limit);
  for (auto _ : state) {
    auto s = xset::sumset(base, cubes, limit);
    benchmark::DoNotOptimize(s);
  }
  xset::set_worker_count(0);
}
BENCHMARK(BM_SumsetThreads)->Arg(1)->Arg(2)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
