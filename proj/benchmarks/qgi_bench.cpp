#include <benchmark/benchmark.h>

#include <algorithm>
#include <vector>

#include "qgi/circuit.hpp"
#include "qgi/fixtures.hpp"
#include "qgi/graph.hpp"
#include "qgi/invariant.hpp"
#include "qgi/simulator.hpp"
#include "qgi/survey.hpp"

namespace {

using namespace qgi;

// Circulant graph on n vertices with offsets 1 and 2.
Graph circulant(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    edges.emplace_back(std::min(i, (i + 1) % n), std::max(i, (i + 1) % n));
    edges.emplace_back(std::min(i, (i + 2) % n), std::max(i, (i + 2) % n));
  }
  return Graph::from_edges(n, edges);
}

void BM_ClassicalHistogram(benchmark::State& state) {
  const Graph g = circulant(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(classical_histogram(g));
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << state.range(0)));
}
BENCHMARK(BM_ClassicalHistogram)->Arg(10)->Arg(16)->Arg(20);

void BM_QpePetersen(benchmark::State& state) {
  const Circuit c = build_qpe(fixtures::petersen(), {.fuse = state.range(0) != 0});
  for (auto _ : state) benchmark::DoNotOptimize(run(c));
}
BENCHMARK(BM_QpePetersen)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_QuantumHistogram(benchmark::State& state) {
  const Graph g = fixtures::g1();
  for (auto _ : state) benchmark::DoNotOptimize(quantum_histogram(g, {.fuse = true}));
}
BENCHMARK(BM_QuantumHistogram)->Unit(benchmark::kMicrosecond);

void BM_CanonicalCode(benchmark::State& state) {
  const Graph g = circulant(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(canonical_code(g));
}
BENCHMARK(BM_CanonicalCode)->Arg(6)->Arg(8);

void BM_CharPoly(benchmark::State& state) {
  const Graph g = circulant(16);
  for (auto _ : state) benchmark::DoNotOptimize(char_poly(g));
}
BENCHMARK(BM_CharPoly);

void BM_EnumerateClasses(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_classes(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_EnumerateClasses)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
