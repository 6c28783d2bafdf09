#include "riskbounds/parallel.hpp"

#include <omp.h>

#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>

namespace riskbounds {

namespace {

struct TrialOutcome {
  bool covered;
  double width;
};

TrialOutcome coverage_trial(const CoverageConfig& cfg, double truth, std::size_t t) {
  Rng rng(derive_seed(cfg.seed, t));
  const std::vector<double> xs = draw_samples(cfg.arm, cfg.n, rng);
  const ConfidenceResult r =
      bound_from_samples(xs, cfg.arm.bounds(), cfg.risk, cfg.distance, cfg.method, cfg.delta, cfg.rule);
  return {r.lcb <= truth && truth <= r.ucb, r.width()};
}

CoverageSummary reduce(const std::vector<TrialOutcome>& out, double truth) {
  CoverageSummary s;
  s.trials = out.size();
  s.truth = truth;
  double w = 0.0;
  for (const TrialOutcome& o : out) {
    s.covered += o.covered ? 1 : 0;
    w += o.width;
  }
  s.mean_width = out.empty() ? 0.0 : w / out.size();
  return s;
}

std::uint64_t cell_seed(const SweepConfig& cfg, std::size_t n, std::size_t s) {
  return derive_seed(derive_seed(cfg.seed, n), s);
}

void sweep_cell(const SweepConfig& cfg, double truth, std::size_t n, std::size_t s, SweepRow* rows) {
  Rng rng(cell_seed(cfg, n, s));
  const std::vector<double> xs = draw_samples(cfg.arm, n, rng);
  const DiscreteDistribution edf = from_samples(xs, cfg.arm.bounds());
  const double c = radius(cfg.rule, cfg.distance, n, cfg.delta, cfg.arm.bounds());
  for (std::size_t m = 0; m < cfg.methods.size(); ++m) {
    const ConfidenceResult r = bound_with_radius(edf, cfg.risk, cfg.distance, cfg.methods[m], c);
    rows[m] = SweepRow{n,         s,         cfg.methods[m], r.lcb, r.ucb, r.raw_lcb, r.raw_ucb, r.point_estimate,
                       truth, r.lcb <= truth && truth <= r.ucb};
  }
}

// Runs body(i) for i in [0, count) on the OpenMP team and rethrows the first
// exception afterwards.
template <class Body>
void parallel_for(std::size_t count, Body body) {
  std::exception_ptr err;
  std::once_flag once;
#pragma omp parallel for schedule(dynamic) num_threads(max_threads())
  for (long i = 0; i < static_cast<long>(count); ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      std::call_once(once, [&] { err = std::current_exception(); });
    }
  }
  if (err) std::rethrow_exception(err);
}

}  // namespace

int max_threads() {
  int n = omp_get_max_threads();
  if (const char* env = std::getenv("RISKBOUNDS_THREADS")) {
    try {
      const int cap = std::stoi(env);
      if (cap >= 1) n = std::min(n, cap);
    } catch (const std::exception&) {
      // Ignore malformed values.
    }
  }
  return std::max(n, 1);
}

std::vector<double> draw_samples(const ArmSpec& arm, std::size_t n, Rng& rng) {
  std::vector<double> xs(n);
  for (double& x : xs) x = arm.sample(rng);
  return xs;
}

CoverageSummary coverage_serial(const CoverageConfig& cfg, double truth) {
  std::vector<TrialOutcome> out(cfg.trials);
  for (std::size_t t = 0; t < cfg.trials; ++t) out[t] = coverage_trial(cfg, truth, t);
  return reduce(out, truth);
}

CoverageSummary coverage_parallel(const CoverageConfig& cfg, double truth) {
  std::vector<TrialOutcome> out(cfg.trials);
  parallel_for(cfg.trials, [&](std::size_t t) { out[t] = coverage_trial(cfg, truth, t); });
  return reduce(out, truth);
}

std::vector<SweepRow> sweep_serial(const SweepConfig& cfg, double truth) {
  const std::size_t per_cell = cfg.methods.size();
  std::vector<SweepRow> rows(cfg.ns.size() * cfg.seeds * per_cell);
  for (std::size_t i = 0; i < cfg.ns.size(); ++i) {
    for (std::size_t s = 0; s < cfg.seeds; ++s) {
      sweep_cell(cfg, truth, cfg.ns[i], s, &rows[(i * cfg.seeds + s) * per_cell]);
    }
  }
  return rows;
}

std::vector<SweepRow> sweep_parallel(const SweepConfig& cfg, double truth) {
  const std::size_t per_cell = cfg.methods.size();
  std::vector<SweepRow> rows(cfg.ns.size() * cfg.seeds * per_cell);
  parallel_for(cfg.ns.size() * cfg.seeds, [&](std::size_t cell) {
    const std::size_t i = cell / cfg.seeds;
    const std::size_t s = cell % cfg.seeds;
    sweep_cell(cfg, truth, cfg.ns[i], s, &rows[cell * per_cell]);
  });
  return rows;
}

std::vector<RegretTrace> bandit_seeds_serial(const BanditInstance& inst, BanditVariant variant, std::size_t seeds,
                                             const BanditOptions& opt) {
  std::vector<RegretTrace> out(seeds);
  for (std::size_t s = 0; s < seeds; ++s) out[s] = run_lcb(inst, variant, derive_seed(inst.seed, s), opt);
  return out;
}

std::vector<RegretTrace> bandit_seeds_parallel(const BanditInstance& inst, BanditVariant variant, std::size_t seeds,
                                               const BanditOptions& opt) {
  std::vector<RegretTrace> out(seeds);
  parallel_for(seeds, [&](std::size_t s) { out[s] = run_lcb(inst, variant, derive_seed(inst.seed, s), opt); });
  return out;
}

}  // namespace riskbounds
