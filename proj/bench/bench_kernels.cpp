// OpenMP kernels against their serial references. Set OMP_NUM_THREADS to vary
// the thread count.

#include <benchmark/benchmark.h>

#include "ktpf/kernels.hpp"

namespace {

const ktpf::Order kScanOrder({2, 2, 2, 3});
const ktpf::Order kFamilyOrder({3, 3, 3, 3});
const ktpf::AtLeastInstance kAtLeast(6, {0, 0, 0, 0, 0});

void BM_ScanUniverseSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(ktpf::reference::scan_universe(kScanOrder));
}
BENCHMARK(BM_ScanUniverseSerial)->Unit(benchmark::kMillisecond);

void BM_ScanUniverseParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(ktpf::scan_universe(kScanOrder));
  state.counters["threads"] = ktpf::kernel_threads();
}
BENCHMARK(BM_ScanUniverseParallel)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_FamilySumSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(ktpf::reference::sum_family_sizes(kFamilyOrder));
}
BENCHMARK(BM_FamilySumSerial)->Unit(benchmark::kMillisecond);

void BM_FamilySumParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(ktpf::sum_family_sizes(kFamilyOrder));
}
BENCHMARK(BM_FamilySumParallel)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_AtLeastTallySerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(ktpf::atleast_branch_tally(kAtLeast));
}
BENCHMARK(BM_AtLeastTallySerial)->Unit(benchmark::kMillisecond);

void BM_AtLeastTallyParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(ktpf::atleast_branch_tally_parallel(kAtLeast));
}
BENCHMARK(BM_AtLeastTallyParallel)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_AtLeastDedup(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(ktpf::atleast_outcomes(kAtLeast));
}
BENCHMARK(BM_AtLeastDedup)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
