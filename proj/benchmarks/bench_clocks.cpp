#include <benchmark/benchmark.h>

#include "dsorder/represent.hpp"
#include "workload.hpp"

namespace {

void BM_LamportClocks(benchmark::State& state) {
  const auto sys = bench::workload_system(8, static_cast<std::size_t>(state.range(0)), 11);
  for (auto _ : state) benchmark::DoNotOptimize(dsorder::lamport_clocks(sys));
}
BENCHMARK(BM_LamportClocks)->RangeMultiplier(4)->Range(16, 4096);

void BM_VectorClocks(benchmark::State& state) {
  const auto sys = bench::workload_system(8, static_cast<std::size_t>(state.range(0)), 12);
  for (auto _ : state) benchmark::DoNotOptimize(dsorder::vector_clocks(sys));
}
BENCHMARK(BM_VectorClocks)->RangeMultiplier(4)->Range(16, 4096);

void BM_AggregateLine(benchmark::State& state) {
  // Processes i -> i+1 only: the workload ring without its wrap channel is a line.
  const auto sys = bench::workload_system(6, static_cast<std::size_t>(state.range(0)), 13);
  for (auto _ : state) benchmark::DoNotOptimize(dsorder::aggregate_line_weak(sys));
}
BENCHMARK(BM_AggregateLine)->RangeMultiplier(2)->Range(8, 128);

void BM_MultiUtility(benchmark::State& state) {
  const auto sys = bench::workload_system(4, static_cast<std::size_t>(state.range(0)), 14);
  for (auto _ : state) benchmark::DoNotOptimize(dsorder::rp_multiutility_from_quotient(sys));
}
BENCHMARK(BM_MultiUtility)->RangeMultiplier(2)->Range(4, 64);

}  // namespace
