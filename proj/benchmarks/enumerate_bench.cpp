#include <benchmark/benchmark.h>

#include <random>

#include "bicl/biclique.hpp"
#include "bicl/census.hpp"
#include "bicl/families.hpp"

namespace {

void BM_CrownCycle(benchmark::State& state) {
  const bicl::Graph g = bicl::crown_cycle(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(bicl::count_bicliques(g));
  state.counters["n"] = static_cast<double>(g.order());
}
BENCHMARK(BM_CrownCycle)->DenseRange(5, 8)->Unit(benchmark::kMicrosecond);

void BM_PowersetFamily(benchmark::State& state) {
  const bicl::Graph g = bicl::powerset_family(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(bicl::count_bicliques(g));
  state.counters["n"] = static_cast<double>(g.order());
}
BENCHMARK(BM_PowersetFamily)->DenseRange(3, 7)->Unit(benchmark::kMillisecond);

void BM_Complete(benchmark::State& state) {
  const bicl::Graph g = bicl::complete(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(bicl::count_bicliques(g));
}
BENCHMARK(BM_Complete)->RangeMultiplier(2)->Range(8, 64)->Unit(benchmark::kMicrosecond);

// Same random graphs through the enumerator and the subset-scan oracle.
template <bool Oracle>
void BM_RandomGraph(benchmark::State& state) {
  std::mt19937_64 rng(7);
  const bicl::Graph g = bicl::random_connected_graph(static_cast<std::size_t>(state.range(0)), 0.4, rng);
  for (auto _ : state) {
    if constexpr (Oracle) {
      benchmark::DoNotOptimize(bicl::oracle_bicliques(g));
    } else {
      benchmark::DoNotOptimize(bicl::enumerate_bicliques(g));
    }
  }
}
BENCHMARK(BM_RandomGraph<false>)->DenseRange(8, 14, 2)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_RandomGraph<true>)->DenseRange(8, 14, 2)->Unit(benchmark::kMicrosecond);

}  // namespace
