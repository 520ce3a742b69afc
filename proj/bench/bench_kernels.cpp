// Serial reference kernels against their OpenMP counterparts.
//
//   ./cubekit_bench --benchmark_filter=Distances
//
// Thread count follows OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include "cubekit/classes.hpp"
#include "cubekit/convexity.hpp"
#include "cubekit/families.hpp"
#include "cubekit/serial.hpp"
#include "cubekit/theta.hpp"

namespace {

using namespace cubekit;

// Arg 0 picks a graph: hypercubes Q_6..Q_8, then DO_4, DO_5.
Graph graph_for(int which) {
  switch (which) {
    case 0: return hypercube(6);
    case 1: return hypercube(7);
    case 2: return hypercube(8);
    case 3: return doubled_odd(4);
    default: return doubled_odd(5);
  }
}

const char* label_for(int which) {
  static const char* const labels[] = {"Q6", "Q7", "Q8", "DO4", "DO5"};
  return labels[which];
}

template <bool Parallel>
void Distances(benchmark::State& state) {
  const auto g = graph_for(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto d = Parallel ? all_pairs_distances(g) : serial::all_pairs_distances(g);
    benchmark::DoNotOptimize(d);
  }
  state.SetLabel(label_for(static_cast<int>(state.range(0))));
}

template <bool Parallel>
void ThetaRows(benchmark::State& state) {
  const auto g = graph_for(static_cast<int>(state.range(0)));
  const auto d = all_pairs_distances(g);
  for (auto _ : state) {
    auto rows = Parallel ? theta_relation_rows(g, d) : serial::theta_relation_rows(g, d);
    benchmark::DoNotOptimize(rows);
  }
  state.SetLabel(label_for(static_cast<int>(state.range(0))));
}

template <bool Parallel>
void ConvexCycles(benchmark::State& state) {
  const auto g = graph_for(static_cast<int>(state.range(0)));
  const auto d = all_pairs_distances(g);
  const auto tp = theta_partition(g, d);
  for (auto _ : state) {
    auto ccs = Parallel ? enumerate_convex_cycles(g, d, tp) : serial::enumerate_convex_cycles(g, d, tp);
    benchmark::DoNotOptimize(ccs);
  }
  state.SetLabel(label_for(static_cast<int>(state.range(0))));
}

template <bool Parallel>
void Median(benchmark::State& state) {
  const auto g = graph_for(static_cast<int>(state.range(0)));
  const auto d = all_pairs_distances(g);
  for (auto _ : state) {
    auto m = Parallel ? is_median(g, d) : serial::is_median(g, d);
    benchmark::DoNotOptimize(m);
  }
  state.SetLabel(label_for(static_cast<int>(state.range(0))));
}

BENCHMARK(Distances<false>)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(Distances<true>)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(ThetaRows<false>)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(ThetaRows<true>)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(ConvexCycles<false>)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(ConvexCycles<true>)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
// Q_6 and DO_4 keep the serial O(n^4) median test short.
BENCHMARK(Median<false>)->Arg(0)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(Median<true>)->Arg(0)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
