#include <benchmark/benchmark.h>

#include "parcomp/classify.hpp"

namespace {

using namespace parcomp;

void BM_RootClosure(benchmark::State& state) {
  const char* labels[] = {"A6", "D6", "E6", "E7", "E8"};
  const char* label = labels[state.range(0)];
  for (auto _ : state) benchmark::DoNotOptimize(build_root_system(label));
  state.SetLabel(label);
}
BENCHMARK(BM_RootClosure)->DenseRange(0, 4);

void BM_ClassifySlSoOdd(benchmark::State& state) {
  SymmetricPair pair = build_pair(PairFamily::sl_so_odd(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(classify_all(pair));
}
BENCHMARK(BM_ClassifySlSoOdd)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_ClassifyE6(benchmark::State& state) {
  SymmetricPair pair = build_pair(state.range(0) == 0 ? PairFamily::e6_sp8() : PairFamily::e6_f4());
  for (auto _ : state) benchmark::DoNotOptimize(classify_all(pair));
}
BENCHMARK(BM_ClassifyE6)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_ClassifyJobs(benchmark::State& state) {
  SymmetricPair pair = build_pair(PairFamily::equal_rank(CartanType::E6()));
  for (auto _ : state) benchmark::DoNotOptimize(classify_all(pair, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_ClassifyJobs)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_DecideSoSo(benchmark::State& state) {
  SymmetricPair pair = build_pair(PairFamily::so_so(3, 3));
  StrictSystem sys = compatibility_system(pair, ParabolicIndex({2, 5, 6}));
  for (auto _ : state) benchmark::DoNotOptimize(decide(sys));
}
BENCHMARK(BM_DecideSoSo);

}  // namespace
BENCHMARK_MAIN();
