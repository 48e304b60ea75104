// Serial reference versus the parallel pruned kernel on a few fixed graphs,
// plus a thread-count sweep of the corpus theorem check.
#include <benchmark/benchmark.h>
#include <omp.h>

#include "eilab/formats.hpp"
#include "eilab/harness.hpp"
#include "eilab/regularity.hpp"

namespace {

eilab::Graph cycle(int n) {
  std::vector<eilab::Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back(eilab::Edge::of(i, (i + 1) % n));
  return eilab::Graph::from_edges(n, edges);
}

eilab::Graph sample(int which) {
  switch (which) {
    case 0: return cycle(9);
    case 1: return cycle(12);
    case 2: return eilab::disjoint_union(cycle(5), cycle(7));
    default: return eilab::parse_graph6("IheA@GUAo");
  }
}

void BM_Reference(benchmark::State& state) {
  const auto g = sample(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(eilab::regularity_reference(g, eilab::FieldSpec(0)).reg_star);
  }
}

void BM_Kernel(benchmark::State& state) {
  const auto g = sample(static_cast<int>(state.range(0)));
  omp_set_num_threads(static_cast<int>(state.range(1)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(eilab::regularity(g, eilab::FieldSpec(0)).reg_star);
  }
}

void BM_TheoremSweep(benchmark::State& state) {
  const auto corpus = eilab::enumerate_range(1, 6, true);
  const std::string threads = std::to_string(state.range(0));
  setenv("EILAB_THREADS", threads.c_str(), 1);
  eilab::SweepOptions options;
  options.include_unions = false;
  for (auto _ : state) {
    benchmark::DoNotOptimize(eilab::verify_theorem(corpus, {eilab::FieldSpec(0)}, options).checked);
  }
  unsetenv("EILAB_THREADS");
}

}  // namespace

BENCHMARK(BM_Reference)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Kernel)->ArgsProduct({{0, 1, 2, 3}, {1, 2, 4}})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_TheoremSweep)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
