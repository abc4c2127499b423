#include <benchmark/benchmark.h>

#include "coxdet/partition.hpp"
#include "coxdet/sn_counts.hpp"
#include "coxdet/towers.hpp"
#include "coxdet/type_b.hpp"

using namespace coxdet;

namespace {

void BM_SpechtDim(benchmark::State& state) {
  const Partition p{12, 9, 7, 7, 4, 2, 2, 1};
  for (auto _ : state) benchmark::DoNotOptimize(specht_dim(p));
}
BENCHMARK(BM_SpechtDim);

void BM_CoreQuotient(benchmark::State& state) {
  const Partition p{40, 33, 21, 20, 17, 9, 5, 5, 4, 1};
  for (auto _ : state) benchmark::DoNotOptimize(core_quotient(p));
}
BENCHMARK(BM_CoreQuotient);

void BM_BuildTower(benchmark::State& state) {
  const Partition p{40, 33, 21, 20, 17, 9, 5, 5, 4, 1};
  for (auto _ : state) benchmark::DoNotOptimize(build_tower(p));
}
BENCHMARK(BM_BuildTower);

void BM_ChiralClassification(benchmark::State& state) {
  const auto parts = partitions_of(static_cast<unsigned>(state.range(0)));
  for (auto _ : state)
    for (const auto& p : parts) benchmark::DoNotOptimize(sn::is_chiral(p));
  state.SetItemsProcessed(state.iterations() * static_cast<long long>(parts.size()));
}
BENCHMARK(BM_ChiralClassification)->Arg(12)->Arg(18);

void BM_CountsClosed(benchmark::State& state) {
  const unsigned n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(typeb::counts_closed(n));
}
BENCHMARK(BM_CountsClosed)->Arg(16)->Arg(64);

void BM_CountsEnumerated(benchmark::State& state) {
  const unsigned n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(typeb::counts_enumerated(n));
}
BENCHMARK(BM_CountsEnumerated)->Arg(12)->Arg(16);

void BM_PartitionCount(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(typeb::bipartition_count(200));
}
BENCHMARK(BM_PartitionCount);

}  // namespace

BENCHMARK_MAIN();
