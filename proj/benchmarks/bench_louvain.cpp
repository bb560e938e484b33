#include "tbnet/modularity.hpp"
#include "tbnet/synth.hpp"

#include <benchmark/benchmark.h>

namespace {

// Planted network with `range(0)` actors per guild per module, 10 slices.
tbnet::PlantedResult planted(std::int64_t per_module) {
  tbnet::PlantedConfig cfg;
  cfg.n_modules = 4;
  cfg.per_module_A = static_cast<std::size_t>(per_module);
  cfg.per_module_B = static_cast<std::size_t>(per_module);
  cfg.slices = 10;
  cfg.mixing = 0.1;
  return tbnet::generate_planted(cfg);
}

void BM_Louvain(benchmark::State& state) {
  const tbnet::PlantedResult p = planted(state.range(0));
  const tbnet::MultilayerParams params;
  const tbnet::SupraGraph g = tbnet::SupraGraph::from_network(p.network, params.omega);
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(tbnet::louvain(g, params, seed++));
  state.counters["nodes"] = static_cast<double>(g.node_count());
}
BENCHMARK(BM_Louvain)->Arg(10)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_Quality(benchmark::State& state) {
  const tbnet::PlantedResult p = planted(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(tbnet::quality(p.network, p.truth, {}));
}
BENCHMARK(BM_Quality)->Arg(50)->Arg(200);

}  // namespace
