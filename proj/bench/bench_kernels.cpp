// Serial vs OpenMP timings for the parallel kernels.
#include <benchmark/benchmark.h>

#include "opdi/disconnected.hpp"
#include "opdi/generator.hpp"
#include "opdi/oracle.hpp"

namespace {

using opdi::Execution;

Execution mode(const benchmark::State& state) { return state.range(0) ? Execution::Parallel : Execution::Serial; }

void BM_OracleProfile(benchmark::State& state) {
  const opdi::Graph g = opdi::generate_outerplanar(static_cast<int>(state.range(1)), 7, true);
  for (auto _ : state) benchmark::DoNotOptimize(opdi::oracle_profile(g, mode(state)).min_diameter);
}
BENCHMARK(BM_OracleProfile)->ArgsProduct({{0, 1}, {7, 8}})->Unit(benchmark::kMillisecond);

// Four random components so the profile and guess loops have work to share.
opdi::Graph union_of_components(int each, std::uint64_t seed) {
  opdi::Graph g(0);
  for (int i = 0; i < 4; ++i) g = opdi::disjoint_union(g, opdi::generate_outerplanar(each, seed + static_cast<std::uint64_t>(i), true));
  return g;
}

void BM_DisconnectedValue(benchmark::State& state) {
  const opdi::Graph g = union_of_components(static_cast<int>(state.range(1)), 11);
  for (auto _ : state) benchmark::DoNotOptimize(opdi::opdi_value(g, mode(state)));
}
BENCHMARK(BM_DisconnectedValue)->ArgsProduct({{0, 1}, {6, 12}})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
