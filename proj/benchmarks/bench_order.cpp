#include <benchmark/benchmark.h>

#include "dsorder/causal.hpp"
#include "dsorder/poset.hpp"
#include "workload.hpp"

namespace {

void BM_CausalClosure(benchmark::State& state) {
  const auto sys = bench::workload_system(8, static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(dsorder::causal_closure(sys));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CausalClosure)->RangeMultiplier(2)->Range(16, 512)->Complexity();

void BM_TransitiveReduction(benchmark::State& state) {
  const auto p = bench::workload_poset(static_cast<std::size_t>(state.range(0)), 0.1, 2);
  for (auto _ : state) benchmark::DoNotOptimize(dsorder::transitive_reduction(p));
}
BENCHMARK(BM_TransitiveReduction)->RangeMultiplier(2)->Range(32, 512);

void BM_Width(benchmark::State& state) {
  const auto p = bench::workload_poset(static_cast<std::size_t>(state.range(0)), 0.05, 3);
  for (auto _ : state) benchmark::DoNotOptimize(dsorder::width(p));
}
BENCHMARK(BM_Width)->RangeMultiplier(2)->Range(32, 512);

void BM_OrderDimension(benchmark::State& state) {
  const auto p = bench::workload_poset(static_cast<std::size_t>(state.range(0)), 0.3, 4);
  for (auto _ : state) benchmark::DoNotOptimize(dsorder::order_dimension(p));
}
BENCHMARK(BM_OrderDimension)->DenseRange(4, 10, 2);

void BM_GreedyRealizer(benchmark::State& state) {
  const auto p = bench::workload_poset(static_cast<std::size_t>(state.range(0)), 0.2, 5);
  for (auto _ : state) benchmark::DoNotOptimize(dsorder::greedy_realizer(p));
}
BENCHMARK(BM_GreedyRealizer)->RangeMultiplier(2)->Range(16, 128);

}  // namespace
