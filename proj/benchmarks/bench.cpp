#include <benchmark/benchmark.h>

#include "chevalab/root_system.hpp"

using namespace chevalab;

static void BM_RootSystemE8(benchmark::State& state) {
  for (auto _ : state) {
    RootSystem rs(LieType('E', 8));
    benchmark::DoNotOptimize(rs.size());
  }
}
BENCHMARK(BM_RootSystemE8);

BENCHMARK_MAIN();
