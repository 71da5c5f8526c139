// Serial reference vs OpenMP-split enumeration on the heavy kernels.

#include <benchmark/benchmark.h>

#include "flex/catalog.hpp"
#include "flex/choosability.hpp"
#include "flex/generator.hpp"
#include "flex/graph.hpp"

using namespace flex;

namespace {

Budget degree_budget(const Graph& g) {
  Budget f(g.n());
  for (int v = 0; v < g.n(); ++v) f[v] = g.degree(v);
  return f;
}

void run_for_all(benchmark::State& state, const Graph& g, const Budget& f,
                 bool parallel) {
  ForAllOptions opts;
  opts.use_shortcut = false;
  opts.parallel = parallel;
  for (auto _ : state) {
    auto v = colorable_for_all_assignments(g, f, opts);
    benchmark::DoNotOptimize(v.always);
  }
}

void BM_ForAll_K6_Serial(benchmark::State& state) {
  Graph g = complete_graph(6);
  run_for_all(state, g, degree_budget(g), false);
}
void BM_ForAll_K6_Parallel(benchmark::State& state) {
  Graph g = complete_graph(6);
  run_for_all(state, g, degree_budget(g), true);
}

// wheel on 6 spokes: dense residuals survive the peeling
Graph wheel6() {
  std::vector<Edge> es;
  for (int i = 0; i < 6; ++i) {
    es.push_back({i, (i + 1) % 6});
    es.push_back({i, 6});
  }
  return Graph(7, es);
}

void BM_ForAll_Wheel_Serial(benchmark::State& state) {
  Graph g = wheel6();
  run_for_all(state, g, degree_budget(g), false);
}
void BM_ForAll_Wheel_Parallel(benchmark::State& state) {
  Graph g = wheel6();
  run_for_all(state, g, degree_budget(g), true);
}

void bench_classify(benchmark::State& state, bool parallel) {
  PatternFamily fam = parse_family("K4,C5,C6,C7,B5");
  ForAllOptions opts;
  opts.parallel = parallel;
  for (auto _ : state) {
    for (const char* name : {"C8", "C12", "C13"}) {
      auto rep = classify(catalog(name), fam, opts);
      benchmark::DoNotOptimize(rep.qualifies_full);
    }
  }
}

void BM_ClassifyBigEntries_Serial(benchmark::State& state) {
  bench_classify(state, false);
}
void BM_ClassifyBigEntries_Parallel(benchmark::State& state) {
  bench_classify(state, true);
}

void BM_DetectChain(benchmark::State& state) {
  PlaneGraph pg = figure1_chain(8);
  for (auto _ : state) {
    auto found = find_embeddings(pg.graph(), catalog_D());
    benchmark::DoNotOptimize(found.size());
  }
}

}  // namespace

BENCHMARK(BM_ForAll_K6_Serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ForAll_K6_Parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ForAll_Wheel_Serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ForAll_Wheel_Parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ClassifyBigEntries_Serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ClassifyBigEntries_Parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DetectChain)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
