#include "tbnet/nestedness.hpp"
#include "tbnet/synth.hpp"

#include <benchmark/benchmark.h>

namespace {

void BM_Nodf(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const tbnet::BinaryMatrix m = tbnet::generate_nested(n, n, 0.3, 0.2, 1);
  for (auto _ : state) benchmark::DoNotOptimize(tbnet::nodf(m));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Nodf)->RangeMultiplier(2)->Range(16, 512)->Complexity();

void BM_OccupationNull(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const tbnet::BinaryMatrix m = tbnet::generate_nested(n, n, 0.3, 0.2, 1);
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(tbnet::null_occupation_sample(m, seed++));
}
BENCHMARK(BM_OccupationNull)->Arg(64)->Arg(256);

}  // namespace
