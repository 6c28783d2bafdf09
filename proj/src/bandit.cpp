#include "riskbounds/bandit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "riskbounds/error.hpp"
#include "riskbounds/lipschitz.hpp"
#include "riskbounds/operators.hpp"

namespace riskbounds {

namespace {

// Sorted samples of one arm with prefix sums, enough for O(1) CVaR indices.
class ArmSamples {
 public:
  void insert(double x) {
    const auto pos = std::upper_bound(sorted_.begin(), sorted_.end(), x);
    const std::size_t k = static_cast<std::size_t>(pos - sorted_.begin());
    sorted_.insert(pos, x);
    prefix_.resize(sorted_.size() + 1, 0.0);
    for (std::size_t i = k; i < sorted_.size(); ++i) prefix_[i + 1] = prefix_[i] + sorted_[i];
  }

  std::size_t size() const noexcept { return sorted_.size(); }
  const std::vector<double>& sorted() const noexcept { return sorted_; }

  // Integral of the EDF quantile over [0, t].
  double integral_to(double t) const {
    const double n = static_cast<double>(sorted_.size());
    if (t <= 0.0) return 0.0;
    if (t >= 1.0) return prefix_.back() / n;
    const std::size_t k = std::min(static_cast<std::size_t>(t * n), sorted_.size() - 1);
    return (prefix_[k] + (t * n - static_cast<double>(k)) * sorted_[k]) / n;
  }

  // inf{x : F(x) >= y} with value a for y <= 0.
  double quantile_or(double y, double a) const {
    if (y <= 0.0) return a;
    const double n = static_cast<double>(sorted_.size());
    const double r = std::ceil(y * n);
    const std::size_t k = r < 1.0 ? 0 : std::min(static_cast<std::size_t>(r) - 1, sorted_.size() - 1);
    return sorted_[k];
  }

 private:
  std::vector<double> sorted_;
  std::vector<double> prefix_{0.0};
};

double cvar_fast_index(const ArmSamples& s, double alpha, double c, const SupportBounds& bounds,
                       BanditVariant variant) {
  const double point = (s.integral_to(1.0) - s.integral_to(1.0 - alpha)) / alpha;
  switch (variant) {
    case BanditVariant::Dist: {
      if (c >= 1.0) return bounds.a();
      const double lo = std::max(1.0 - alpha - c, 0.0);
      const double tail = s.integral_to(1.0 - c) - s.integral_to(lo);
      return (tail + bounds.a() * std::max(c - (1.0 - alpha), 0.0)) / alpha;
    }
    case BanditVariant::LLC:
      return point - (bounds.b() - s.quantile_or(1.0 - alpha - c, bounds.a())) / alpha * c;
    case BanditVariant::GLC:
      return point - bounds.width() / alpha * c;
  }
  return point;
}

double generic_index(const ArmSamples& s, const RiskMeasure& rm, double c, const SupportBounds& bounds,
                     BanditVariant variant, double glc_value) {
  const DiscreteDistribution edf = from_sorted_samples(s.sorted(), bounds);
  switch (variant) {
    case BanditVariant::Dist: return evaluate(rm, neg_sup(edf, c));
    case BanditVariant::LLC: return evaluate(rm, edf) - llc(rm, Distance::Supremum, edf, c) * c;
    case BanditVariant::GLC: return evaluate(rm, edf) - glc_value * c;
  }
  return 0.0;
}

}  // namespace

std::string_view to_string(BanditVariant v) {
  switch (v) {
    case BanditVariant::Dist: return "dist";
    case BanditVariant::LLC: return "llc";
    case BanditVariant::GLC: return "glc";
  }
  return "?";
}

BanditVariant parse_variant(std::string_view s) {
  if (s == "dist") return BanditVariant::Dist;
  if (s == "llc") return BanditVariant::LLC;
  if (s == "glc") return BanditVariant::GLC;
  throw std::invalid_argument("unknown bandit variant '" + std::string(s) + "' (dist|llc|glc)");
}

BanditInstance::BanditInstance(SupportBounds b, std::vector<ArmSpec> a, std::size_t n, RiskMeasure r,
                               std::uint64_t s)
    : bounds(b), arms(std::move(a)), horizon(n), risk(std::move(r)), seed(s) {
  if (arms.empty()) throw DataError("bandit instance needs at least one arm");
  if (horizon < arms.size()) throw DataError("bandit horizon must be at least the number of arms");
  for (const ArmSpec& arm : arms) {
    if (!(arm.bounds() == bounds)) throw DataError("every arm must share the instance bounds");
  }
}

std::vector<double> arm_risks(const BanditInstance& inst) {
  std::vector<double> out;
  out.reserve(inst.arms.size());
  for (const ArmSpec& arm : inst.arms) out.push_back(true_risk(arm, inst.risk));
  return out;
}

RegretTrace run_lcb(const BanditInstance& inst, BanditVariant variant, std::uint64_t seed, const BanditOptions& opt) {
  const std::size_t K = inst.arms.size();
  const std::size_t N = inst.horizon;
  const SupportBounds& bounds = inst.bounds;
  const auto* cvar = std::get_if<Cvar>(&inst.risk.params());
  const bool fast = opt.cvar_fast_path && cvar != nullptr;
  const double glc_value = variant == BanditVariant::GLC ? glc(inst.risk, Distance::Supremum, bounds) : 0.0;
  const double log_term = std::log(2.0 * static_cast<double>(K) * static_cast<double>(N) * static_cast<double>(N));

  RegretTrace tr;
  tr.arm_risk = arm_risks(inst);
  const double best = *std::min_element(tr.arm_risk.begin(), tr.arm_risk.end());
  tr.chosen.reserve(N);
  tr.loss.reserve(N);
  tr.instant_regret.reserve(N);
  tr.cumulative_regret.reserve(N);
  tr.pulls.assign(K, 0);

  Rng rng(seed);
  std::vector<ArmSamples> samples(K);
  // An arm's index depends only on its own samples, so it is refreshed only
  // when that arm is pulled.
  std::vector<double> index(K, std::numeric_limits<double>::infinity());
  double cum = 0.0;
  for (std::size_t t = 0; t < N; ++t) {
    std::size_t pick = t;
    if (t >= K) pick = static_cast<std::size_t>(std::min_element(index.begin(), index.end()) - index.begin());
    const double x = inst.arms[pick].sample(rng);
    samples[pick].insert(x);
    ++tr.pulls[pick];
    const double c = std::sqrt(log_term / static_cast<double>(tr.pulls[pick]));
    index[pick] = fast ? cvar_fast_index(samples[pick], cvar->alpha, c, bounds, variant)
                       : generic_index(samples[pick], inst.risk, c, bounds, variant, glc_value);
    const double r = tr.arm_risk[pick] - best;
    cum += r;
    tr.chosen.push_back(static_cast<std::uint32_t>(pick));
    tr.loss.push_back(x);
    tr.instant_regret.push_back(r);
    tr.cumulative_regret.push_back(cum);
  }
  return tr;
}

CStar solve_cstar(const ArmSpec& arm, double gap, double alpha) {
  if (!(gap > 0.0)) throw std::invalid_argument("solve_cstar requires a positive gap");
  if (!(alpha > 0.0 && alpha <= 0.5)) throw std::invalid_argument("solve_cstar requires alpha in (0, 0.5]");
  const double b = arm.bounds().b();
  const double top = (1.0 - alpha) / 2.0;
  auto g = [&](double c) {
    const double y = 1.0 - alpha - 2.0 * c;
    const double q = y > 0.0 ? arm.quantile(y) : arm.upper_quantile(0.0);
    return 2.0 * (b - q) * c / alpha - gap;
  };
  double lo = 0.0;
  double hi = top;
  if (g(hi) >= 0.0) {
    for (int it = 0; it < 200 && hi - lo > 1e-16; ++it) {
      const double mid = 0.5 * (lo + hi);
      const double gm = g(mid);
      if (gm >= 0.0) {
        hi = mid;
        if (gm <= 1e-12) break;
      } else {
        lo = mid;
      }
    }
  }
  const double y = std::max(0.0, 1.0 - alpha - 2.0 * hi);
  return {hi, std::max(0.0, b - arm.upper_quantile(std::min(y, std::nextafter(1.0, 0.0))))};
}

double regret_bound(const BanditInstance& inst, std::size_t horizon) {
  const auto* cvar = std::get_if<Cvar>(&inst.risk.params());
  if (!cvar) throw UnsupportedCombination("the regret bound is stated for CVaR only");
  const double alpha = cvar->alpha;
  if (alpha > 0.5) throw UnsupportedCombination("the regret bound requires alpha <= 0.5");
  const std::vector<double> risks = arm_risks(inst);
  const double best = *std::min_element(risks.begin(), risks.end());
  double sum_ratio = 0.0;
  double sum_gap = 0.0;
  for (std::size_t i = 0; i < risks.size(); ++i) {
    const double gap = risks[i] - best;
    if (!(gap > 0.0)) continue;
    const CStar cs = solve_cstar(inst.arms[i], gap, alpha);
    sum_ratio += cs.spread * cs.spread / gap;
    sum_gap += gap;
  }
  const double n = static_cast<double>(horizon);
  return 4.0 * std::log(std::numbers::sqrt2 * n) / (alpha * alpha) * sum_ratio + 3.0 * sum_gap;
}

}  // namespace riskbounds
