#include <benchmark/benchmark.h>

#include <random>

#include "rankmod/constructions.hpp"
#include "rankmod/ksnake.hpp"
#include "rankmod/rmgc.hpp"
#include "rankmod/verify.hpp"

using namespace rankmod;

namespace {

// build_rmgc memoizes, so time the recursion through a fresh rebuild of the rule.
void BM_RmgcRecursion(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto& prev = build_rmgc(n - 1);
  for (auto _ : state) {
    TransitionSequence seq;
    seq.reserve(prev.seq.size() * static_cast<std::size_t>(n));
    for (auto t : prev.seq) {
      for (int c = 0; c < n - 1; ++c) seq.emplace_back(n);
      seq.emplace_back(n - t.index() + 1);
    }
    benchmark::DoNotOptimize(seq.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(prev.seq.size()) * n);
}
BENCHMARK(BM_RmgcRecursion)->DenseRange(6, 10);

void BM_RmgcSnakeBuild(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  (void)build_rmgc((n + 1) / 2);
  for (auto _ : state) benchmark::DoNotOptimize(rmgc_snake(n));
}
BENCHMARK(BM_RmgcSnakeBuild)->DenseRange(6, 12)->Unit(benchmark::kMillisecond);

void BM_KendallLiftedBuild(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto k5 = embedded_a5_snake();
  for (auto _ : state) benchmark::DoNotOptimize(kendall_lifted_snake(n, k5));
}
BENCHMARK(BM_KendallLiftedBuild)->Arg(7)->Arg(9)->Unit(benchmark::kMillisecond);

void BM_VerifyExhaustive(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto code = rmgc_snake(n).code;
  VerifyOptions opt;
  opt.threads = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(verify_code(code, opt));
  const auto m = static_cast<std::int64_t>(code.size());
  state.SetItemsProcessed(state.iterations() * m * (m - 1) / 2);
}
BENCHMARK(BM_VerifyExhaustive)
    ->Args({8, 1})
    ->Args({9, 1})
    ->Args({9, 0})
    ->Args({10, 0})
    ->Unit(benchmark::kMillisecond);

void BM_VerifySampled(benchmark::State& state) {
  const auto code = rmgc_snake(static_cast<int>(state.range(0))).code;
  VerifyOptions opt;
  opt.mode = VerifyMode::sampled;
  for (auto _ : state) benchmark::DoNotOptimize(verify_code(code, opt));
}
BENCHMARK(BM_VerifySampled)->Arg(11)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_KendallDistance(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937 rng(1);
  std::vector<int> a(static_cast<std::size_t>(n)), b(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) a[i] = b[i] = i + 1;
  std::shuffle(a.begin(), a.end(), rng);
  std::shuffle(b.begin(), b.end(), rng);
  const Permutation p(a), q(b);
  for (auto _ : state) benchmark::DoNotOptimize(kendall_distance(p, q));
}
BENCHMARK(BM_KendallDistance)->Arg(5)->Arg(8)->Arg(12);

void BM_KsnakeSearchFiftySeven(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(search_ksnake(5, 57, 100'000'000));
}
BENCHMARK(BM_KsnakeSearchFiftySeven)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
