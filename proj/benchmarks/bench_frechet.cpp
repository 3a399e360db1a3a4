#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "frechet/approx.hpp"
#include "frechet/oracle_1d.hpp"
#include "frechet/random_curves.hpp"
#include "frechet/reference.hpp"

namespace {

using namespace frechet;

void BM_OracleBuild(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const PolyCurve p = random_walk(n, 1, 1);
  for (auto _ : state) benchmark::DoNotOptimize(preprocess(p, 64));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_OracleBuild)
    ->RangeMultiplier(10)
    ->Range(10'000, 1'000'000)
    ->Unit(benchmark::kMillisecond)
    ->Complexity(benchmark::oNLogN);

void BM_OracleQuery(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const OracleHandle h = preprocess(random_walk(100'000, 1, 2), m);
  std::vector<PolyCurve> queries;
  for (std::uint64_t k = 0; k < 16; ++k) queries.push_back(random_walk(m, 1, 100 + k));
  std::size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(query(h, queries[k++ % queries.size()]));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_OracleQuery)->RangeMultiplier(2)->Range(16, 256)->Complexity();

void BM_Approx3(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const PolyCurve p = random_walk(n, 2, 3);
  const PolyCurve q = random_walk(64, 2, 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(approx_value(p, q, 0.1, Norm::L2, MatchMode::Continuous));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Approx3)
    ->RangeMultiplier(4)
    ->Range(4'096, 262'144)
    ->Unit(benchmark::kMillisecond)
    ->Complexity(benchmark::oN);

void BM_DiscreteExact(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const PolyCurve p = random_walk(n, 2, 5);
  const PolyCurve q = random_walk(64, 2, 6);
  for (auto _ : state) benchmark::DoNotOptimize(discrete_frechet_exact(p, q, Norm::L2));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DiscreteExact)
    ->RangeMultiplier(4)
    ->Range(1'024, 65'536)
    ->Unit(benchmark::kMillisecond)
    ->Complexity(benchmark::oN);

void BM_ContinuousDecide(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const PolyCurve p = random_walk(n, 2, 7);
  const PolyCurve q = random_walk(n, 2, 8);
  const double delta = continuous_frechet_value_ref(p, q, Norm::L2, 1e-6);
  for (auto _ : state) benchmark::DoNotOptimize(continuous_frechet_decide(p, q, delta, Norm::L2));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ContinuousDecide)->RangeMultiplier(2)->Range(64, 1'024)->Complexity(benchmark::oNSquared);

}  // namespace

BENCHMARK_MAIN();
