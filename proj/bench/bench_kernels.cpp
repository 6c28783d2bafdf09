// Serial reference kernels against their OpenMP versions, plus operator scaling.
#include <benchmark/benchmark.h>

#include <algorithm>
#include <vector>

#include "riskbounds/operators.hpp"
#include "riskbounds/parallel.hpp"

using namespace riskbounds;

namespace {

const SupportBounds k01(0.0, 1.0);

CoverageConfig coverage_config() {
  return {parse_arm("beta:2,5", k01), RiskMeasure::cvar(0.05), Distance::Supremum, BoundMethod::Dist,
          RadiusRule::DKW, 2000, 0.05, 200, 1};
}

void BM_CoverageSerial(benchmark::State& st) {
  const auto cfg = coverage_config();
  const double truth = true_risk(cfg.arm, cfg.risk);
  for (auto _ : st) benchmark::DoNotOptimize(coverage_serial(cfg, truth));
}
void BM_CoverageParallel(benchmark::State& st) {
  const auto cfg = coverage_config();
  const double truth = true_risk(cfg.arm, cfg.risk);
  for (auto _ : st) benchmark::DoNotOptimize(coverage_parallel(cfg, truth));
}

SweepConfig sweep_config() {
  SweepConfig cfg{parse_arm("beta:2,5", k01), RiskMeasure::entropic(1.0), Distance::Wasserstein1};
  cfg.rule = RadiusRule::ScaledDKW;
  cfg.ns = {100, 1000, 10000};
  cfg.seeds = 8;
  return cfg;
}

void BM_SweepSerial(benchmark::State& st) {
  const auto cfg = sweep_config();
  const double truth = true_risk(cfg.arm, cfg.risk);
  for (auto _ : st) benchmark::DoNotOptimize(sweep_serial(cfg, truth));
}
void BM_SweepParallel(benchmark::State& st) {
  const auto cfg = sweep_config();
  const double truth = true_risk(cfg.arm, cfg.risk);
  for (auto _ : st) benchmark::DoNotOptimize(sweep_parallel(cfg, truth));
}

BanditInstance bandit_instance() {
  return BanditInstance(k01,
                        {parse_arm("truncnormal:0.3,0.1", k01), parse_arm("truncnormal:0.4,0.2", k01),
                         parse_arm("beta:2,5", k01)},
                        5000, RiskMeasure::cvar(0.25), 3);
}

void BM_BanditSerial(benchmark::State& st) {
  const auto inst = bandit_instance();
  for (auto _ : st) benchmark::DoNotOptimize(bandit_seeds_serial(inst, BanditVariant::Dist, 8));
}
void BM_BanditParallel(benchmark::State& st) {
  const auto inst = bandit_instance();
  for (auto _ : st) benchmark::DoNotOptimize(bandit_seeds_parallel(inst, BanditVariant::Dist, 8));
}

DiscreteDistribution edf(std::size_t m) {
  Rng rng(m);
  std::vector<double> xs(m);
  for (auto& x : xs) x = rng.uniform();
  std::sort(xs.begin(), xs.end());
  return from_sorted_samples(xs, k01);
}

void BM_PosSup(benchmark::State& st) {
  const auto d = edf(static_cast<std::size_t>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(pos_sup(d, 0.05));
  st.SetComplexityN(st.range(0));
}
void BM_NegW1(benchmark::State& st) {
  const auto d = edf(static_cast<std::size_t>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(neg_w1(d, 0.05));
  st.SetComplexityN(st.range(0));
}

}  // namespace

BENCHMARK(BM_CoverageSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CoverageParallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SweepSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_BanditSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BanditParallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_PosSup)->RangeMultiplier(10)->Range(1000, 1000000)->Complexity(benchmark::oN);
BENCHMARK(BM_NegW1)->RangeMultiplier(10)->Range(1000, 1000000)->Complexity(benchmark::oN);

BENCHMARK_MAIN();
