#pragma once

#include <cstdint>
#include <vector>

#include "riskbounds/arms.hpp"
#include "riskbounds/bandit.hpp"
#include "riskbounds/bounds.hpp"

namespace riskbounds {

// Each kernel has a serial reference and an OpenMP version. Work items draw
// from their own derived seed and results are reduced in item order, so both
// versions return identical values for any thread count.

/// OpenMP thread budget, capped by the RISKBOUNDS_THREADS environment variable.
int max_threads();

std::vector<double> draw_samples(const ArmSpec& arm, std::size_t n, Rng& rng);

struct CoverageConfig {
  ArmSpec arm;
  RiskMeasure risk;
  Distance distance = Distance::Supremum;
  BoundMethod method = BoundMethod::Dist;
  RadiusRule rule = RadiusRule::DKW;
  std::size_t n = 1000;
  double delta = 0.05;
  std::size_t trials = 1000;
  std::uint64_t seed = 0;
};

struct CoverageSummary {
  std::size_t trials = 0;
  std::size_t covered = 0;
  double truth = 0.0;
  double mean_width = 0.0;

  double fraction() const noexcept { return trials ? static_cast<double>(covered) / trials : 0.0; }
};

CoverageSummary coverage_serial(const CoverageConfig& cfg, double truth);
CoverageSummary coverage_parallel(const CoverageConfig& cfg, double truth);

struct SweepConfig {
  ArmSpec arm;
  RiskMeasure risk;
  Distance distance = Distance::Supremum;
  std::vector<BoundMethod> methods{BoundMethod::Dist, BoundMethod::LLC, BoundMethod::GLC};
  RadiusRule rule = RadiusRule::DKW;
  std::vector<std::size_t> ns{};
  std::size_t seeds = 1;
  double delta = 0.05;
  std::uint64_t seed = 0;
};

struct SweepRow {
  std::size_t n;
  std::size_t seed;
  BoundMethod method;
  double lcb;
  double ucb;
  double raw_lcb;
  double raw_ucb;
  double point;
  double truth;
  bool covered;
};

/// Rows ordered by (n, seed, method). Every method in a cell sees the same sample.
std::vector<SweepRow> sweep_serial(const SweepConfig& cfg, double truth);
std::vector<SweepRow> sweep_parallel(const SweepConfig& cfg, double truth);

/// Seed s runs with derive_seed(inst.seed, s).
std::vector<RegretTrace> bandit_seeds_serial(const BanditInstance& inst, BanditVariant variant, std::size_t seeds,
                                             const BanditOptions& opt = {});
std::vector<RegretTrace> bandit_seeds_parallel(const BanditInstance& inst, BanditVariant variant, std::size_t seeds,
                                               const BanditOptions& opt = {});

}  // namespace riskbounds
