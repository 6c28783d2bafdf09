#include "riskbounds/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "riskbounds/error.hpp"
#include "riskbounds/operators.hpp"

namespace riskbounds {

std::string_view to_string(BoundMethod m) {
  switch (m) {
    case BoundMethod::Dist: return "dist";
    case BoundMethod::LLC: return "llc";
    case BoundMethod::GLC: return "glc";
  }
  return "?";
}

BoundMethod parse_method(std::string_view s) {
  if (s == "dist") return BoundMethod::Dist;
  if (s == "llc") return BoundMethod::LLC;
  if (s == "glc") return BoundMethod::GLC;
  throw std::invalid_argument("unknown method '" + std::string(s) + "' (dist|llc|glc)");
}

bool supported(const RiskMeasure& rm, Distance distance, BoundMethod method) {
  if (distance != Distance::Wasserstein1 || method == BoundMethod::GLC) return true;
  if (rm.family() == Family::RDEU) return false;
  if (const auto* e = std::get_if<Entropic>(&rm.params())) return e->beta > 0.0;
  return true;
}

std::pair<double, double> value_range(const RiskMeasure& rm, const SupportBounds& bounds) {
  if (const auto* p = std::get_if<RankDependent>(&rm.params())) return {p->v(bounds.a()), p->v(bounds.b())};
  return {bounds.a(), bounds.b()};
}

ConfidenceResult bound_with_radius(const DiscreteDistribution& d, const RiskMeasure& rm, Distance distance,
                                   BoundMethod method, double c, const LipschitzOptions& opt) {
  if (!(c >= 0.0) || !std::isfinite(c)) throw std::invalid_argument("radius must be finite and >= 0");
  if (!supported(rm, distance, method)) {
    throw UnsupportedCombination(std::string(to_string(method)) + " bounds for " + rm.label() +
                                 " under the Wasserstein distance are not available: the ball operators are "
                                 "not optimal for it and no local constant is known; use glc");
  }
  ConfidenceResult r;
  r.method = method;
  r.distance = distance;
  r.radius_used = c;
  r.point_estimate = evaluate(rm, d);
  if (method == BoundMethod::Dist) {
    const BallSpec ball(distance, c);
    r.lower_extreme = extreme(d, ball, Side::Lower);
    r.upper_extreme = extreme(d, ball, Side::Upper);
    r.lcb = r.raw_lcb = std::min(evaluate(rm, *r.lower_extreme), r.point_estimate);
    r.ucb = r.raw_ucb = std::max(evaluate(rm, *r.upper_extreme), r.point_estimate);
    return r;
  }
  const double L = method == BoundMethod::LLC ? llc(rm, distance, d, c, opt) : glc(rm, distance, d.bounds(), opt);
  const auto [lo, hi] = value_range(rm, d.bounds());
  r.lipschitz = L;
  r.raw_lcb = r.point_estimate - L * c;
  r.raw_ucb = r.point_estimate + L * c;
  r.lcb = std::clamp(r.raw_lcb, lo, hi);
  r.ucb = std::clamp(r.raw_ucb, lo, hi);
  return r;
}

ConfidenceResult bound_from_samples(std::span<const double> samples, const SupportBounds& bounds,
                                    const RiskMeasure& rm, Distance distance, BoundMethod method, double delta,
                                    std::optional<RadiusRule> rule) {
  const DiscreteDistribution d = from_samples(samples, bounds);
  const RadiusRule rr = rule.value_or(default_rule(distance));
  const double c = radius(rr, distance, samples.size(), delta, bounds);
  return bound_with_radius(d, rm, distance, method, c);
}

MethodComparison compare_methods(const DiscreteDistribution& d, const RiskMeasure& rm, Distance distance, double c,
                                 double tol) {
  MethodComparison out;
  for (BoundMethod m : {BoundMethod::Dist, BoundMethod::LLC, BoundMethod::GLC}) {
    if (!supported(rm, distance, m)) {
      out.skipped.push_back(std::string(to_string(m)) + ": unsupported for " + rm.label() + " under " +
                            std::string(to_string(distance)));
      continue;
    }
    out.results.push_back(bound_with_radius(d, rm, distance, m, c));
  }
  for (std::size_t i = 1; i < out.results.size(); ++i) {
    const ConfidenceResult& tight = out.results[i - 1];
    const ConfidenceResult& loose = out.results[i];
    if (tight.raw_ucb > loose.raw_ucb + tol || tight.raw_lcb < loose.raw_lcb - tol) out.chain_holds = false;
  }
  return out;
}

}  // namespace riskbounds
