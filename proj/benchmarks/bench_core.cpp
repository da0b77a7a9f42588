#include <benchmark/benchmark.h>

#include "tamegraph/builtins.hpp"
#include "tamegraph/delta.hpp"
#include "tamegraph/gurevich.hpp"
#include "tamegraph/power_counts.hpp"
#include "tamegraph/spectral.hpp"
#include "tamegraph/truncation.hpp"

using namespace tamegraph;

static void BM_DiagonalCounts(benchmark::State& state) {
  auto sys = make_golden_mean();
  auto m = transition_matrix(sys);
  ArcId j = sys->arcs_at_depth(0).front();
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto counts = diagonal_counts(*m, j, n);
    benchmark::DoNotOptimize(counts);
  }
}
BENCHMARK(BM_DiagonalCounts)->Arg(40)->Arg(160)->Arg(640);

static void BM_SpectralRadius(benchmark::State& state) {
  auto sys = make_example1();
  auto m = transition_matrix(sys);
  FiniteMatrix sub = submatrix(*m, m->prefix_at(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    SpectralBounds r = spectral_radius(sub);
    benchmark::DoNotOptimize(r);
  }
  state.counters["arcs"] = static_cast<double>(sub.size());
}
BENCHMARK(BM_SpectralRadius)->Arg(8)->Arg(32)->Arg(128);

static void BM_EntropySweep(benchmark::State& state) {
  auto sys = make_example1();
  auto m = transition_matrix(sys);
  ArcId b = sys->arc_b();
  int depth = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto est = gurevich_entropy(*m, b, depth, 0.0);
    benchmark::DoNotOptimize(est);
  }
}
BENCHMARK(BM_EntropySweep)->Arg(100)->Arg(400)->Arg(1600)->Unit(benchmark::kMillisecond);

static void BM_DeltaLevelSum(benchmark::State& state) {
  auto sys = make_example1();
  auto m = transition_matrix(sys);
  auto v = canonical_eigenvector<Rational>(sys);
  ArcId b = sys->arc_b();
  int level = static_cast<int>(state.range(0));
  for (auto _ : state) {
    Rational total = delta_start_sum<Rational>(*m, v, b, level);
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_DeltaLevelSum)->Arg(6)->Arg(10)->Arg(14);

BENCHMARK_MAIN();
