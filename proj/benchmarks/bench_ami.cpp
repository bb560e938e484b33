#include "tbnet/consensus.hpp"

#include <benchmark/benchmark.h>

#include <random>

namespace {

std::vector<int> labels(std::size_t n, int k, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<int> v(n);
  for (auto& x : v) x = static_cast<int>(rng() % static_cast<std::uint64_t>(k));
  return v;
}

// The exact expected-MI term dominates; it grows with module count.
void BM_Ami(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto k = static_cast<int>(state.range(1));
  const auto x = labels(n, k, 1), y = labels(n, k, 2);
  for (auto _ : state) benchmark::DoNotOptimize(tbnet::ami(x, y));
}
BENCHMARK(BM_Ami)->Args({1000, 10})->Args({10000, 10})->Args({10000, 50})->Unit(benchmark::kMicrosecond);

void BM_NullThreshold(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(tbnet::null_threshold(n, 10, 50, 3));
}
BENCHMARK(BM_NullThreshold)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);

}  // namespace
