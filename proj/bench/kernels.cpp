// Parallel kernels against their serial references. Thread count comes from
// OMP_NUM_THREADS / ORIADIM_THREADS as usual.

#include <benchmark/benchmark.h>

#include "oriadim/class_check.hpp"
#include "oriadim/enumerate.hpp"
#include "oriadim/exact_search.hpp"
#include "oriadim/generators.hpp"

using namespace oriadim;

namespace {

Orientation strong_orientation(int n) {
  Rng rng(static_cast<std::uint64_t>(n));
  UndirectedGraph g = random_bridgeless(n, 4, 100, rng);
  return robbins_orient(g, 1);
}

void BM_Diameter(benchmark::State& state) {
  Orientation o = strong_orientation(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(diameter(o).diameter);
}

void BM_DiameterSerial(benchmark::State& state) {
  Orientation o = strong_orientation(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(diameter_serial(o).diameter);
}

void BM_Enumerate(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_graphs(static_cast<int>(state.range(0)), 12).graphs.size());
}

void BM_EnumerateSerial(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_graphs_serial(static_cast<int>(state.range(0)), 12).graphs.size());
  }
}

void BM_InClass(benchmark::State& state) {
  UndirectedGraph g = min_g_instance(static_cast<int>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(in_class(g, {3, 4, 1}).member);
}

void BM_InClassSerial(benchmark::State& state) {
  UndirectedGraph g = min_g_instance(static_cast<int>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(in_class_serial(g, {3, 4, 1}).member);
}

UndirectedGraph petersen() {
  return UndirectedGraph(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                              {5, 7}, {7, 9}, {6, 9}, {6, 8}, {5, 8}});
}

void BM_Exact(benchmark::State& state) {
  UndirectedGraph g = petersen();
  for (auto _ : state) benchmark::DoNotOptimize(oriented_diameter_exact(g).diameter);
}

void BM_ExactSerial(benchmark::State& state) {
  UndirectedGraph g = petersen();
  for (auto _ : state) benchmark::DoNotOptimize(oriented_diameter_exact_serial(g).diameter);
}

}  // namespace

BENCHMARK(BM_Diameter)->Arg(64)->Arg(256)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_DiameterSerial)->Arg(64)->Arg(256)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_Enumerate)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateSerial)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_InClass)->Arg(20)->Arg(40)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_InClassSerial)->Arg(20)->Arg(40)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_Exact)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExactSerial)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
