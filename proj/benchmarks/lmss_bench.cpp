#include <benchmark/benchmark.h>

#include "lmss/embedding.hpp"
#include "lmss/families.hpp"
#include "lmss/greedoid.hpp"
#include "lmss/matching.hpp"
#include "lmss/stable.hpp"

namespace {

lmss::Graph random_family(lmss::Family family, std::size_t n, std::uint64_t seed) {
  lmss::FamilySpec spec;
  spec.family = family;
  spec.n = n;
  spec.seed = seed;
  return lmss::generate(spec);
}

void BM_ForestAlpha(benchmark::State& state) {
  const auto g = random_family(lmss::Family::random_tree, state.range(0), 1);
  for (auto _ : state) benchmark::DoNotOptimize(lmss::forest_alpha(g));
}
BENCHMARK(BM_ForestAlpha)->RangeMultiplier(8)->Range(16, 8192);

void BM_BruteForceAlpha(benchmark::State& state) {
  const auto g = random_family(lmss::Family::random_graph, state.range(0), 1);
  for (auto _ : state) benchmark::DoNotOptimize(lmss::brute_force_alpha(g));
}
BENCHMARK(BM_BruteForceAlpha)->DenseRange(8, 24, 4);

void BM_IsLocalMaxStable(benchmark::State& state) {
  const auto g = random_family(lmss::Family::random_tree, state.range(0), 2);
  const auto s = lmss::forest_alpha(g).set;
  for (auto _ : state) benchmark::DoNotOptimize(lmss::is_local_max_stable(g, s));
}
BENCHMARK(BM_IsLocalMaxStable)->RangeMultiplier(4)->Range(16, 4096);

void BM_EnumeratePsi(benchmark::State& state) {
  const auto g = random_family(lmss::Family::random_tree, state.range(0), 3);
  for (auto _ : state) benchmark::DoNotOptimize(lmss::enumerate_psi(g));
}
BENCHMARK(BM_EnumeratePsi)->DenseRange(8, 20, 4);

void BM_VerifyGreedoid(benchmark::State& state) {
  const auto g = random_family(lmss::Family::random_tree, state.range(0), 4);
  for (auto _ : state) benchmark::DoNotOptimize(lmss::verify_greedoid(g));
}
BENCHMARK(BM_VerifyGreedoid)->DenseRange(8, 16, 4);

void BM_Chain(benchmark::State& state) {
  const auto strategy = static_cast<lmss::ChainStrategy>(state.range(1));
  const auto g = random_family(lmss::Family::random_tree, state.range(0), 5);
  const auto s = lmss::forest_alpha(g).set;
  for (auto _ : state) benchmark::DoNotOptimize(lmss::chain_decompose(g, s, strategy));
  state.SetLabel(std::string(lmss::to_string(strategy)));
}
BENCHMARK(BM_Chain)->ArgsProduct({{16, 64, 256}, {0, 1}});

void BM_EmbedPerfect(benchmark::State& state) {
  const auto g = random_family(lmss::Family::random_forest, state.range(0), 6);
  for (auto _ : state) benchmark::DoNotOptimize(lmss::embed_perfect(g, lmss::EmbedMode::pendant_only));
}
BENCHMARK(BM_EmbedPerfect)->RangeMultiplier(8)->Range(16, 8192);

void BM_LabeledTreeSweep(benchmark::State& state) {
  for (auto _ : state) {
    lmss::LabeledTreeStream trees(state.range(0));
    std::size_t count = 0;
    while (auto t = trees.next()) count += lmss::verify_greedoid(*t).exchange_ok;
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_LabeledTreeSweep)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
