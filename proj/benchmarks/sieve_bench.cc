#include <benchmark/benchmark.h>

#include "kappa/builtins.hpp"
#include "kappa/identities.hpp"
#include "kappa/oracles.hpp"
#include "kappa/series.hpp"

namespace {

using namespace kappa;

void BM_KappaSieve(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto x = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(fn::kappa(x, n));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_KappaSieve)
    ->ArgsProduct({benchmark::CreateRange(1 << 12, 1 << 20, 4), {0, 1}})
    ->Unit(benchmark::kMillisecond)
    ->Complexity(benchmark::oNLogN);

void BM_OrderedFactorizationsSieve(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fn::ordered_factorizations(n));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_OrderedFactorizationsSieve)
    ->RangeMultiplier(4)
    ->Range(1 << 12, 1 << 20)
    ->Unit(benchmark::kMillisecond)
    ->Complexity(benchmark::oNLogN);

// Naive memoized recursion for every n in 1..N, for contrast with the sieve.
void BM_NaiveKappaPrefix(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    for (std::uint64_t k = 1; k <= n; ++k) {
      benchmark::DoNotOptimize(oracles::naive_kappa(0, k));
    }
  }
}
BENCHMARK(BM_NaiveKappaPrefix)->RangeMultiplier(4)->Range(1 << 8, 1 << 12)->Unit(benchmark::kMillisecond);

void BM_DirichletConvolve(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const ArithSeq f = fn::kappa(3, n);
  const ArithSeq g = fn::sigma(3, n);
  for (auto _ : state) benchmark::DoNotOptimize(dirichlet_convolve(f, g));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DirichletConvolve)
    ->RangeMultiplier(4)
    ->Range(1 << 10, 1 << 16)
    ->Unit(benchmark::kMillisecond)
    ->Complexity(benchmark::oNLogN);

void BM_DirichletInverse(benchmark::State& state) {
  const ArithSeq f = fn::kappa(1, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dirichlet_inverse(f));
}
BENCHMARK(BM_DirichletInverse)->RangeMultiplier(4)->Range(1 << 10, 1 << 16)->Unit(benchmark::kMillisecond);

void BM_IdentitySuite(benchmark::State& state) {
  const std::vector<unsigned> exps = {0, 1, 2, 3};
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_all(static_cast<std::size_t>(state.range(0)), exps, 1));
  }
}
BENCHMARK(BM_IdentitySuite)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_Zeta(benchmark::State& state) {
  const double s = static_cast<double>(state.range(0)) / 10.0;
  for (auto _ : state) benchmark::DoNotOptimize(zeta(s, 1e-12));
}
BENCHMARK(BM_Zeta)->Arg(11)->Arg(20)->Arg(40);

}  // namespace
BENCHMARK_MAIN();
