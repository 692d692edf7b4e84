#include <benchmark/benchmark.h>

#include "syncprim/automaton.hpp"
#include "syncprim/classify.hpp"
#include "syncprim/group.hpp"
#include "syncprim/harness.hpp"

namespace {

using namespace syncprim;

GroupSpec symmetric(std::size_t n) {
  std::string cycle = "(";
  for (std::size_t i = 0; i < n; ++i) cycle += (i ? " " : "") + std::to_string(i);
  cycle += ")";
  return GroupSpec(n, {parse_permutation("(0 1)", n), parse_permutation(cycle, n)});
}

void BM_EnumerateElements(benchmark::State& state) {
  const auto group = symmetric(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_elements(group));
}
BENCHMARK(BM_EnumerateElements)->DenseRange(4, 7);

void BM_IsPrimitive(benchmark::State& state) {
  const auto group = symmetric(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(is_primitive(group));
}
BENCHMARK(BM_IsPrimitive)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_ShortestResetWordCerny(benchmark::State& state) {
  const auto automaton = cerny_automaton(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(shortest_reset_word(automaton));
}
BENCHMARK(BM_ShortestResetWordCerny)->Arg(8)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_MinimalSynDfaCerny(benchmark::State& state) {
  const auto automaton = cerny_automaton(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(minimal_syn_dfa(automaton));
}
BENCHMARK(BM_MinimalSynDfaCerny)->DenseRange(6, 14, 2)->Unit(benchmark::kMillisecond);

void BM_PairwiseClassesCerny(benchmark::State& state) {
  const auto subsets = build_subset_automaton(cerny_automaton(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(count_classes_pairwise(subsets));
}
BENCHMARK(BM_PairwiseClassesCerny)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

void BM_SyncMaximalIdempotents(benchmark::State& state) {
  const auto group = symmetric(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(is_sync_maximal(group, QuantifierMode::IdempotentsOnly));
}
BENCHMARK(BM_SyncMaximalIdempotents)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

void BM_StronglySyncMaximal(benchmark::State& state) {
  const auto group = symmetric(static_cast<std::size_t>(state.range(0)));
  ScanOptions scan;
  scan.threads = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(is_strongly_sync_maximal(group, scan));
}
BENCHMARK(BM_StronglySyncMaximal)
    ->Args({5, 1})
    ->Args({6, 1})
    ->Args({6, 4})
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
