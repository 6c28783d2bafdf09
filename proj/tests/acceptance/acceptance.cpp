// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "riskbounds/bandit.hpp"
#include "riskbounds/bounds.hpp"
#include "riskbounds/catalog.hpp"
#include "riskbounds/concentration.hpp"
#include "riskbounds/error.hpp"
#include "riskbounds/io.hpp"
#include "riskbounds/lipschitz.hpp"
#include "riskbounds/operators.hpp"
#include "riskbounds/parallel.hpp"

using namespace riskbounds;

namespace {

// Pinned tolerances and sizes.
constexpr double kFixtureTol = 1e-12;
constexpr double kFeasTol = 1e-12;
constexpr double kW1TightTol = 1e-10;
constexpr double kSupTightTol = 1e-12;
constexpr double kOptimalityTol = 1e-9;
constexpr double kClipTol = 1e-12;
constexpr double kChainTol = 1e-9;
constexpr double kIdentityRelTol = 0.05;
constexpr double kCoverageTarget = 0.95;
constexpr double kCstarTol = 1e-9;
constexpr double kSeedFraction = 0.95;
constexpr double kRadiusTol = 1e-12;
constexpr double kScalingFactor = 3.0;

constexpr int kRandomDistributions = 200;
constexpr std::size_t kCandidates = 10000;
constexpr double kRadiusFractions[] = {0.01, 0.05, 0.15, 0.4, 0.8};

// Beta(2, 5) on [0, 1], CVaR at 0.05: 50-digit quadrature reference.
constexpr double kBeta25Cvar05 = 0.656829000025315360;
constexpr double kBeta25Erm1 = 0.298869784425439055;

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

SupportBounds suite_bounds(int i) { return i % 2 ? SupportBounds(0.0, 1.0) : SupportBounds(1.0, 4.0); }

double suite_radius(Distance k, double frac, const SupportBounds& b) {
  return k == Distance::Supremum ? frac : frac * b.width();
}

std::vector<double> merged_points(const DiscreteDistribution& x, const DiscreteDistribution& y) {
  std::vector<double> pts;
  for (const Atom& a : x.atoms()) pts.push_back(a.x);
  for (const Atom& a : y.atoms()) pts.push_back(a.x);
  pts.push_back(x.bounds().a());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

double max_atom_error(const DiscreteDistribution& d, const std::vector<Atom>& want) {
  if (d.size() != want.size()) return std::numeric_limits<double>::infinity();
  double e = 0.0;
  for (std::size_t i = 0; i < want.size(); ++i) {
    e = std::max({e, std::abs(d.atoms()[i].x - want[i].x), std::abs(d.atoms()[i].p - want[i].p)});
  }
  return e;
}

Outcome criterion1() {
  const SupportBounds b(0, 5);
  const auto d = from_samples(std::vector<double>{1, 2, 3, 4}, b);
  const double e = std::max({max_atom_error(pos_sup(d, 0.25), {{2, .25}, {3, .25}, {4, .25}, {5, .25}}),
                             max_atom_error(neg_sup(d, 0.25), {{0, .25}, {1, .25}, {2, .25}, {3, .25}}),
                             max_atom_error(pos_w1(d, 0.3), {{1, .25}, {2, .25}, {3, .225}, {5, .275}}),
                             max_atom_error(neg_w1(d, 0.3), {{1, .25}, {2, .25}, {2.9, .5}})});
  return {e <= kFixtureTol, fmt("four operator fixtures, max error %.2e (tol %.0e)", e, kFixtureTol)};
}

// Shared by criteria 2 and 3.
struct SuiteCase {
  DiscreteDistribution d;
  Distance k;
  double c;
};

std::vector<SuiteCase> build_suite() {
  std::vector<SuiteCase> out;
  for (int i = 0; i < kRandomDistributions; ++i) {
    Rng rng(derive_seed(2024, i));
    const SupportBounds b = suite_bounds(i);
    const auto d = testkit::random_distribution(rng, b, 6);
    for (Distance k : {Distance::Supremum, Distance::Wasserstein1}) {
      for (double f : kRadiusFractions) out.push_back({d, k, suite_radius(k, f, b)});
    }
  }
  return out;
}

Outcome criterion2(const std::vector<SuiteCase>& suite) {
  std::size_t infeasible = 0, not_tight = 0, violations = 0, unsound = 0, evaluated = 0;
  double worst_clip = 0.0;
  for (std::size_t idx = 0; idx < suite.size(); ++idx) {
    const auto& [d, k, c] = suite[idx];
    const SupportBounds& b = d.bounds();
    const auto up = extreme(d, {k, c}, Side::Upper), lo = extreme(d, {k, c}, Side::Lower);
    // (a) feasibility and tightness.
    const double du = distance(d, up, k), dl = distance(d, lo, k);
    infeasible += (du > c + kFeasTol) + (dl > c + kFeasTol);
    if (k == Distance::Wasserstein1) {
      not_tight += std::abs(du - std::min(c, b.b() - d.mean())) > kW1TightTol;
      not_tight += std::abs(dl - std::min(c, d.mean() - b.a())) > kW1TightTol;
    } else {
      double up_gap = 0.0, lo_gap = 0.0, f_below_b = 0.0;
      for (double x : merged_points(d, up)) {
        if (x < b.b()) {
          up_gap = std::max(up_gap, d.cdf(x) - up.cdf(x));
          f_below_b = std::max(f_below_b, d.cdf(x));
          worst_clip = std::max(worst_clip, std::abs(up.cdf(x) - std::max(d.cdf(x) - c, 0.0)));
        }
      }
      for (double x : merged_points(d, lo)) {
        lo_gap = std::max(lo_gap, lo.cdf(x) - d.cdf(x));
        worst_clip = std::max(worst_clip, std::abs(lo.cdf(x) - std::min(d.cdf(x) + c, 1.0)));
      }
      not_tight += std::abs(up_gap - std::min(c, f_below_b)) > kSupTightTol;
      not_tight += std::abs(lo_gap - std::min(c, 1.0 - d.cdf(b.a()))) > kSupTightTol;
    }
    // (b) optimality against sampled feasible candidates.
    const auto cands = testkit::random_feasible({d, BallSpec(k, c), 3, derive_seed(77, idx)}, kCandidates);
    for (const auto& g : cands) unsound += distance(d, g, k) > c + testkit::kFeasibleTol;
    for (const auto& rm : testkit::risk_catalog(b)) {
      if (!supported(rm, k, BoundMethod::Dist)) continue;
      const double hi = evaluate(rm, up), lw = evaluate(rm, lo);
      for (const auto& g : cands) {
        const double v = evaluate(rm, g);
        violations += !(v <= hi + kOptimalityTol) + !(v >= lw - kOptimalityTol);
        ++evaluated;
      }
    }
  }
  // (c) exact clip on dyadic inputs, where every cumulative mass is exact.
  std::size_t dyadic_mismatch = 0;
  for (int i = 0; i < kRandomDistributions; ++i) {
    Rng rng(derive_seed(4048, i));
    const SupportBounds b(0.0, 1.0);
    const auto d = testkit::random_dyadic_distribution(rng, b, 6);
    for (int j = 1; j <= 5; ++j) {
      const double c = static_cast<double>(rng.next() % 64 + 1) / 64.0;
      const auto up = pos_sup(d, c), lo = neg_sup(d, c);
      for (double x : merged_points(d, up)) {
        if (x < b.b()) dyadic_mismatch += up.cdf(x) != std::max(d.cdf(x) - c, 0.0);
      }
      for (double x : merged_points(d, lo)) dyadic_mismatch += lo.cdf(x) != std::min(d.cdf(x) + c, 1.0);
    }
  }
  const bool pass = infeasible == 0 && not_tight == 0 && unsound == 0 && violations == 0 && dyadic_mismatch == 0 &&
                    worst_clip <= kClipTol;
  return {pass, fmt("%zu cases, %zu risk evaluations: infeasible %zu, not tight %zu, unsound candidates %zu, "
                    "optimality violations %zu (tol %.0e), clip error %.2e (tol %.0e), dyadic clip mismatches %zu",
                    suite.size(), evaluated, infeasible, not_tight, unsound, violations, kOptimalityTol, worst_clip,
                    kClipTol, dyadic_mismatch)};
}

// Pre-clamp bounds, with infinite constants as infinitely loose bounds.
std::pair<double, double> raw_bounds(const DiscreteDistribution& d, const RiskMeasure& rm, Distance k, double c,
                                     BoundMethod m) {
  try {
    const auto r = bound_with_radius(d, rm, k, m, c);
    return {r.raw_lcb, r.raw_ucb};
  } catch (const NonFiniteConstant&) {
    return {-std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
  }
}

// Width equality for CVaR under the sup ball. The upper gap is
// (c b - int_{1-alpha}^{1-alpha+c} Q) / alpha and the lower gap is
// (int_{1-c}^{1} Q - int_{1-alpha-c}^{1-alpha} Q) / alpha. Both reach the
// Lipschitz step c (b - Q(1 - alpha - c)) / alpha exactly when one atom carries
// the levels [1 - alpha - c, 1 - alpha + c] and Q = b on [1 - c, 1].
bool cvar_width_degenerate(const DiscreteDistribution& d, double alpha, double c) {
  const double lo = 1.0 - alpha - c, hi = std::min(1.0, 1.0 - alpha + c);
  const auto atoms = d.atoms();
  const auto cum = d.cumulative();
  const std::size_t m = cum.size();
  const bool top_at_b = atoms[m - 1].x == d.bounds().b() && (m == 1 || cum[m - 2] <= 1.0 - c + kFeasTol);
  if (!top_at_b) return false;
  for (std::size_t i = 0; i < m; ++i) {
    const double below = i == 0 ? 0.0 : cum[i - 1];
    if (below <= lo + kFeasTol && cum[i] >= hi - kFeasTol) return true;
  }
  return false;
}

Outcome criterion3(const std::vector<SuiteCase>& suite) {
  std::size_t chains = 0, broken = 0, strict_cases = 0, not_strict = 0, degenerate = 0, degenerate_gain = 0;
  double min_gain = std::numeric_limits<double>::infinity();
  for (const auto& [d, k, c] : suite) {
    for (const auto& rm : testkit::risk_catalog(d.bounds())) {
      std::vector<std::pair<double, double>> rb;
      for (BoundMethod m : {BoundMethod::Dist, BoundMethod::LLC, BoundMethod::GLC}) {
        if (supported(rm, k, m)) rb.push_back(raw_bounds(d, rm, k, c, m));
      }
      for (std::size_t i = 1; i < rb.size(); ++i) {
        ++chains;
        broken += !(rb[i - 1].second <= rb[i].second + kChainTol) || !(rb[i - 1].first >= rb[i].first - kChainTol);
      }
      const Family f = rm.family();
      const bool strict_family = f == Family::CVaR || f == Family::SRM || f == Family::DRM || f == Family::ERM;
      if (k == Distance::Supremum && strict_family && c > 0.0 && d.size() >= 2) {
        const double gain = (rb[1].second - rb[1].first) - (rb[0].second - rb[0].first);
        const auto* cv = std::get_if<Cvar>(&rm.params());
        if (cv && cvar_width_degenerate(d, cv->alpha, c)) {
          ++degenerate;
          degenerate_gain += std::abs(gain) > kFeasTol;
          continue;
        }
        ++strict_cases;
        min_gain = std::min(min_gain, gain);
        not_strict += !(gain > 0.0);
      }
    }
  }
  return {broken == 0 && not_strict == 0 && degenerate_gain == 0,
          fmt("%zu adjacent pairs, %zu chain breaks (tol %.0e); sup strictness Dist < LLC width: %zu cases, %zu "
              "not strict, smallest gain %.3e; %zu degenerate CVaR cases excluded (one atom across levels 1-alpha+-c, mass >= c at b), "
              "%zu of them with nonzero gain (tol %.0e)",
              chains, broken, kChainTol, strict_cases, not_strict, min_gain, degenerate, degenerate_gain, kFeasTol)};
}

Outcome criterion4() {
  const SupportBounds b(0.0, 1.0);
  const std::vector<std::size_t> ns{100, 1000, 10000, 100000};
  struct Setup {
    const char* name;
    RiskMeasure rm;
    Distance k;
    RadiusRule rule;
    double truth;
  };
  const std::vector<Setup> setups{
      {"cvar:0.05 sup/dkw", RiskMeasure::cvar(0.05), Distance::Supremum, RadiusRule::DKW, kBeta25Cvar05},
      {"erm:1 w1/scaled-dkw", RiskMeasure::entropic(1.0), Distance::Wasserstein1, RadiusRule::ScaledDKW,
       kBeta25Erm1}};
  bool pass = true;
  std::ostringstream detail;
  for (const auto& s : setups) {
    SweepConfig cfg{ArmSpec(BetaArm{2, 5}, b), s.rm, s.k};
    cfg.rule = s.rule;
    cfg.ns = ns;
    cfg.seeds = 20;
    cfg.seed = 4;
    const auto rows = sweep_parallel(cfg, s.truth);
    // mean raw width per (n, method)
    std::vector<std::array<double, 3>> w(ns.size(), {0, 0, 0});
    for (const auto& r : rows) {
      const std::size_t i = static_cast<std::size_t>(std::find(ns.begin(), ns.end(), r.n) - ns.begin());
      w[i][static_cast<int>(r.method)] += (r.raw_ucb - r.raw_lcb) / cfg.seeds;
    }
    detail << s.name << ":";
    for (std::size_t i = 0; i < ns.size(); ++i) {
      pass = pass && w[i][0] < w[i][1] && w[i][1] < w[i][2];
      if (i > 0) {
        for (int m = 0; m < 3; ++m) pass = pass && w[i][m] <= w[i - 1][m];
      }
      detail << fmt(" n=%zu %.4g<%.4g<%.4g", ns[i], w[i][0], w[i][1], w[i][2]);
    }
    detail << "; ";
  }
  return {pass, "mean raw widths Dist<LLC<GLC, nonincreasing in n. " + detail.str()};
}

Outcome criterion5() {
  const SupportBounds b(0.0, 1.0);
  const double alpha = 0.1;
  const std::size_t n = 100000;
  Rng rng(5);
  const auto edf = from_samples(draw_samples(ArmSpec(UniformArm{0, 1}, b), n, rng), b);
  const double c = dkw_radius(n, 0.05);
  const auto rm = RiskMeasure::cvar(alpha);
  const auto dist = bound_with_radius(edf, rm, Distance::Supremum, BoundMethod::Dist, c);
  const double dist_slope = (dist.ucb - dist.point_estimate) / c;
  const double llc_v = llc(rm, Distance::Supremum, edf, c);
  const double llc_want = (alpha + c) * b.width() / alpha;
  const double glc_v = glc(rm, Distance::Supremum, b);
  const bool pass = std::abs(dist_slope - b.width()) <= kIdentityRelTol * b.width() &&
                    std::abs(llc_v - llc_want) <= kIdentityRelTol * llc_want && glc_v == b.width() / alpha;
  return {pass, fmt("alpha %.2f, c %.5f: Dist slope %.5f (want 1 +/- 5%%), LLC %.5f (want %.5f +/- 5%%), GLC %.17g "
                    "(want exactly %.17g)",
                    alpha, c, dist_slope, llc_v, llc_want, glc_v, b.width() / alpha)};
}

Outcome criterion6() {
  const SupportBounds b(0.0, 1.0);
  const CoverageConfig cfg{ArmSpec(BetaArm{2, 5}, b), RiskMeasure::cvar(0.05), Distance::Supremum,
                           BoundMethod::Dist, RadiusRule::DKW, 1000, 0.05, 2000, 6};
  const auto s = coverage_parallel(cfg, kBeta25Cvar05);
  return {s.fraction() >= kCoverageTarget,
          fmt("%zu/%zu covered = %.4f (target %.2f), mean width %.4f", s.covered, s.trials, s.fraction(),
              kCoverageTarget, s.mean_width)};
}

struct BanditRuns {
  BanditInstance inst;
  std::vector<std::vector<double>> finals;  // per variant
};

Outcome criterion7(const BanditRuns& br) {
  std::vector<double> mean, se;
  for (const auto& f : br.finals) {
    double m = 0.0, s2 = 0.0;
    for (double x : f) m += x;
    m /= f.size();
    for (double x : f) s2 += (x - m) * (x - m);
    mean.push_back(m);
    se.push_back(std::sqrt(s2 / (f.size() - 1) / f.size()));
  }
  const double se01 = std::hypot(se[0], se[1]), se12 = std::hypot(se[1], se[2]);
  const bool pass = mean[1] - mean[0] > se01 && mean[2] - mean[1] > se12;
  return {pass, fmt("mean final regret dist %.2f, llc %.2f, glc %.2f; gaps %.2f (pooled se %.2f), %.2f (pooled se %.2f)",
                    mean[0], mean[1], mean[2], mean[1] - mean[0], se01, mean[2] - mean[1], se12)};
}

Outcome criterion8(const BanditRuns& br) {
  const double alpha = 0.25, gap = 0.1;
  const auto cs = solve_cstar(ArmSpec(UniformArm{0, 1}, SupportBounds(0, 1)), gap, alpha);
  // Closed form for the uniform law: 4c^2 + 2 alpha c - alpha gap = 0, spread = alpha + 2c.
  const double c_closed = (-alpha + std::sqrt(alpha * alpha + 4.0 * alpha * gap)) / 4.0;
  const double spread_closed = alpha + 2.0 * c_closed;
  const double err = std::max(std::abs(cs.c - c_closed), std::abs(cs.spread - spread_closed));
  const double bound = regret_bound(br.inst);
  std::size_t below = 0;
  for (double x : br.finals[0]) below += x <= bound;
  const double frac = static_cast<double>(below) / br.finals[0].size();
  return {err <= kCstarTol && frac >= kSeedFraction,
          fmt("spread %.9f vs closed form %.9f (err %.2e, tol %.0e); dist regret <= bound %.1f in %zu/%zu seeds",
              cs.spread, spread_closed, err, kCstarTol, bound, below, br.finals[0].size())};
}

Outcome criterion9() {
  struct Ref {
    std::size_t n;
    double delta;
    double value;
  };
  // 40-digit evaluations of sqrt(log(2/delta)/(2n)).
  const Ref dkw[] = {
      {10, 0.5, 0.26327688477341593412},        {10, 0.1, 0.38702275602049493657},
      {10, 0.05, 0.42946940834673756206},       {10, 0.01, 0.51469978465839854465},
      {100, 0.5, 0.083255461115769775635},      {100, 0.1, 0.12238734153404082732},
      {100, 0.05, 0.13581015157406194985},      {100, 0.01, 0.16276236307187292551},
      {1000, 0.5, 0.026327688477341593412},     {1000, 0.1, 0.038702275602049493657},
      {1000, 0.05, 0.042946940834673756206},    {1000, 0.01, 0.051469978465839854465},
      {100000, 0.5, 0.0026327688477341593412},  {100000, 0.1, 0.0038702275602049493657},
      {100000, 0.05, 0.0042946940834673756206}, {100000, 0.01, 0.0051469978465839854465},
      {10000000, 0.5, 0.00026327688477341593},  {10000000, 0.1, 0.00038702275602049494},
      {10000000, 0.05, 0.00042946940834673756}, {10000000, 0.01, 0.00051469978465839854},
  };
  // 40-digit evaluations of 256/sqrt(n) + 8 sqrt(e log(1/delta)/n) on [0, 1].
  const Ref w1[] = {
      {1000000, 0.5, 0.26698120397148136426},     {1000000, 0.1, 0.27601451507963781004},
      {1000000, 0.05, 0.27882909666492144364},    {1000000, 0.01, 0.28430479866994461748},
      {4000000, 0.5, 0.13349060198574068213},     {4000000, 0.1, 0.13800725753981890502},
      {4000000, 0.05, 0.13941454833246072182},    {4000000, 0.01, 0.14215239933497230874},
      {10000000, 0.5, 0.084426869700387291208},   {10000000, 0.1, 0.087283453491854690725},
      {10000000, 0.05, 0.08817350233884106439},   {10000000, 0.01, 0.089905071351263462939},
      {100000000, 0.5, 0.026698120397148136426},  {100000000, 0.1, 0.027601451507963781004},
      {100000000, 0.05, 0.027882909666492144364}, {100000000, 0.01, 0.028430479866994461748},
      {1000000000, 0.5, 0.0084426869700387291},   {1000000000, 0.1, 0.0087283453491854691},
      {1000000000, 0.05, 0.0088173502338841064},  {1000000000, 0.01, 0.0089905071351263463},
  };
  const SupportBounds u(0.0, 1.0);
  double err = 0.0;
  for (const Ref& r : dkw) err = std::max(err, std::abs(dkw_radius(r.n, r.delta) - r.value));
  for (const Ref& r : w1) err = std::max(err, std::abs(w1_radius(r.n, r.delta, u) - r.value));

  const ArmSpec arm(BetaArm{2, 5}, u);
  const std::size_t trials = 2000, n = 1000;
  const double c = scaled_dkw_radius(n, 0.05, u);
  std::size_t ok = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng(derive_seed(909, t));
    const auto edf = from_samples(draw_samples(arm, n, rng), u);
    ok += testkit::w1_to_beta(edf, 2.0, 5.0) <= c;
  }
  const double frac = static_cast<double>(ok) / trials;
  return {err <= kRadiusTol && frac >= kSeedFraction,
          fmt("40 reference radii, max error %.2e (tol %.0e); scaled-DKW %.5f >= W1(EDF, Beta(2,5)) in %zu/%zu "
              "trials",
              err, kRadiusTol, c, ok, trials)};
}

// Best-of-k wall time per call of all four operators on an m-atom EDF.
double operator_seconds(std::size_t m) {
  const SupportBounds b(0.0, 1.0);
  Rng rng(m);
  std::vector<double> xs(m);
  for (double& x : xs) x = rng.uniform();
  std::sort(xs.begin(), xs.end());
  const auto d = from_sorted_samples(xs, b);
  const std::size_t reps = std::max<std::size_t>(1, 2000000 / m);
  double best = std::numeric_limits<double>::infinity();
  for (int round = 0; round < 5; ++round) {
    const auto t0 = std::chrono::steady_clock::now();
    std::size_t sink = 0;
    for (std::size_t r = 0; r < reps; ++r) {
      sink += pos_sup(d, 0.05).size() + neg_sup(d, 0.05).size() + pos_w1(d, 0.02).size() + neg_w1(d, 0.02).size();
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() / reps;
    if (sink == 0) return -1.0;
    best = std::min(best, s);
  }
  return best;
}

Outcome criterion10() {
  const double base = operator_seconds(1000);
  bool pass = true;
  std::ostringstream detail;
  detail << fmt("m=1e3 %.3g s", base);
  for (std::size_t m : {10000u, 100000u, 1000000u}) {
    const double t = operator_seconds(m);
    const double ratio = t / (base * static_cast<double>(m) / 1000.0);
    pass = pass && ratio <= kScalingFactor && ratio >= 1.0 / kScalingFactor;
    detail << fmt(", m=%.0e %.3g s (%.2fx linear)", static_cast<double>(m), t, ratio);
  }
  return {pass, detail.str() + fmt(" (allowed within %.0fx)", kScalingFactor)};
}

BanditRuns run_bandits() {
  BanditRuns br{load_instance_file(std::string(FIXTURE_DIR) + "/bandit_4arm.json"), {}};
  for (BanditVariant v : {BanditVariant::Dist, BanditVariant::LLC, BanditVariant::GLC}) {
    std::vector<double> f;
    for (const auto& tr : bandit_seeds_parallel(br.inst, v, 20)) f.push_back(tr.final_regret());
    br.finals.push_back(std::move(f));
  }
  return br;
}

}  // namespace

int main() {
  int failures = 0;
  auto report = [&](int id, const std::function<Outcome()>& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o{false, ""};
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    failures += !o.pass;
    std::printf("%s criterion %d: %s [%.1f s]\n", o.pass ? "PASS" : "FAIL", id, o.detail.c_str(), s);
    std::fflush(stdout);
  };
  report(1, criterion1);
  const auto suite = build_suite();
  report(2, [&] { return criterion2(suite); });
  report(3, [&] { return criterion3(suite); });
  report(4, criterion4);
  report(5, criterion5);
  report(6, criterion6);
  std::optional<BanditRuns> br;
  report(7, [&] {
    br = run_bandits();
    return criterion7(*br);
  });
  report(8, [&] {
    if (!br) br = run_bandits();
    return criterion8(*br);
  });
  report(9, criterion9);
  report(10, criterion10);
  return failures == 0 ? 0 : 1;
}
