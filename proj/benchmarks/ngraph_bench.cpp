#include <benchmark/benchmark.h>

#include "ngraph/ngraph.hpp"

namespace {

using namespace ngraph;

const ModularSystem& sidon() {
  static const ModularSystem sys = make_system(15, {1, 6, 19});
  return sys;
}

void BM_CountA(benchmark::State& state) {
  const Int n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(count_A(n, sidon()));
}
BENCHMARK(BM_CountA)->Arg(100)->Arg(300)->Arg(1000);

void BM_EnumerateA(benchmark::State& state) {
  const Int n = state.range(0);
  for (auto _ : state) {
    Count total = 0;
    for_each_A(n, sidon(), [&](const NFormPartition&) { ++total; });
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_EnumerateA)->Arg(100)->Arg(200)->Arg(300);

void BM_WeightedSumSidon(benchmark::State& state) {
  const Int n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(weighted_sum_sidon(n, sidon()));
}
BENCHMARK(BM_WeightedSumSidon)->Arg(100)->Arg(200)->Arg(300);

void BM_WeightedSumGeneral(benchmark::State& state) {
  static const ModularSystem sys = make_system(12, {1, 3, 5});
  const Int n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(weighted_sum_general(n, sys));
}
BENCHMARK(BM_WeightedSumGeneral)->Arg(50)->Arg(100)->Arg(150);

void BM_HookMap(benchmark::State& state) {
  const auto all = enumerate_A(state.range(0), sidon());
  const HClassifier classifier(sidon());
  for (auto _ : state)
    for (const auto& pi : all) benchmark::DoNotOptimize(hook_map(pi, classifier));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(all.size()));
}
BENCHMARK(BM_HookMap)->Arg(150)->Arg(300);

void BM_ReconstructFiber(benchmark::State& state) {
  const auto targets = enumerate_H(state.range(0), sidon());
  for (auto _ : state)
    for (const auto& t : targets) benchmark::DoNotOptimize(reconstruct_fiber(t, sidon()));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(targets.size()));
}
BENCHMARK(BM_ReconstructFiber)->Arg(150)->Arg(300);

void BM_VerifySingle(benchmark::State& state) {
  static const ModularSystem sys = make_system(2, {1});
  for (auto _ : state)
    benchmark::DoNotOptimize(verify_identity(state.range(0), sys, IdentityMode::Single, {false, 1}));
}
BENCHMARK(BM_VerifySingle)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
