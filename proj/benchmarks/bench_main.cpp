#include <benchmark/benchmark.h>

#include <random>

#include "tristring/canonical.hpp"
#include "tristring/catalog.hpp"
#include "tristring/enumerate.hpp"
#include "tristring/moves.hpp"
#include "tristring/partition.hpp"
#include "tristring/tutte.hpp"

using namespace tristring;

namespace {

EmbeddedTriangulation grown(EmbeddedTriangulation t, int target, unsigned seed) {
  std::mt19937_64 rng(seed);
  while (t.n_vertices() < target) {
    const auto v = static_cast<Vertex>(rng() % t.n_vertices());
    const auto splits = enumerate_splits(t, v);
    if (!splits.empty()) t = apply_split(t, splits[rng() % splits.size()]);
  }
  return t;
}

void BM_SpanningTreeCount(benchmark::State& state) {
  const SimpleGraph g = grown(tetrahedron(), static_cast<int>(state.range(0)), 1).graph();
  for (auto _ : state) benchmark::DoNotOptimize(spanning_tree_count(g));
}
BENCHMARK(BM_SpanningTreeCount)->RangeMultiplier(2)->Range(8, 128);

void BM_Tutte(benchmark::State& state) {
  const SimpleGraph g = grown(tetrahedron(), static_cast<int>(state.range(0)), 2).graph();
  for (auto _ : state) benchmark::DoNotOptimize(tutte(g));
}
BENCHMARK(BM_Tutte)->DenseRange(4, 7);

void BM_CanonicalCode(benchmark::State& state) {
  const auto t = grown(k7_torus(), static_cast<int>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_code_unchecked(t));
}
BENCHMARK(BM_CanonicalCode)->RangeMultiplier(2)->Range(8, 64);

void BM_EnumerateSphere(benchmark::State& state) {
  const auto catalog = builtin_catalog(SurfaceSpec::sphere());
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_up_to(catalog, static_cast<int>(state.range(0)), 1, false));
}
BENCHMARK(BM_EnumerateSphere)->DenseRange(8, 10)->Unit(benchmark::kMillisecond);

void BM_SphereLowerBound(benchmark::State& state) {
  SeriesConfig cfg;
  cfg.dimension = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sphere_lower_bound(cfg));
}
BENCHMARK(BM_SphereLowerBound)->Arg(1)->Arg(2)->Arg(26);

}  // namespace
BENCHMARK_MAIN();
