#include <benchmark/benchmark.h>

#include <cstdint>

#include "minsum/assignment.hpp"
#include "minsum/harness.hpp"
#include "minsum/scheduler.hpp"

namespace {

using namespace minsum;

Configuration circle_config(std::size_t n, std::uint64_t seed = 7) {
  return random_configuration(Space::circle(Scalar(1)), n, seed, 360);
}

void BM_ExtremalSet(benchmark::State& state) {
  const Configuration c = circle_config(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(extremal_set(c));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ExtremalSet)->RangeMultiplier(2)->Range(4, 64)->Complexity();

void BM_Classify(benchmark::State& state) {
  const Configuration c = circle_config(static_cast<std::size_t>(state.range(0)));
  const auto extremal = extremal_set(c).extremal;
  for (auto _ : state) benchmark::DoNotOptimize(classify(c, extremal));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Classify)->RangeMultiplier(2)->Range(4, 64)->Complexity();

void BM_BruteForceCircle(benchmark::State& state) {
  const Configuration c = circle_config(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_circle_optimum(c, 4));
}
BENCHMARK(BM_BruteForceCircle)->DenseRange(3, 6);

void BM_Run(benchmark::State& state) {
  const Configuration c = circle_config(static_cast<std::size_t>(state.range(0)));
  SchedulerPolicy policy;
  policy.delta = Scalar(1, 100);
  policy.adversary = static_cast<Adversary>(state.range(1));
  std::int64_t ticks = 0;
  for (auto _ : state) {
    const RunResult r = run(c.space(), c.positions(), Algorithm::kDispatch, policy);
    ticks = r.ticks;
    benchmark::DoNotOptimize(r);
  }
  state.counters["ticks"] = static_cast<double>(ticks);
}
BENCHMARK(BM_Run)
    ->ArgsProduct({{3, 5, 7}, {static_cast<int>(Adversary::kRoundRobin), static_cast<int>(Adversary::kSeededRandom),
                               static_cast<int>(Adversary::kPendingMaximizer)}})
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
