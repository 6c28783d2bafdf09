#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "riskbounds/concentration.hpp"
#include "riskbounds/distribution.hpp"
#include "riskbounds/lipschitz.hpp"
#include "riskbounds/risk_measure.hpp"

namespace riskbounds {

enum class BoundMethod { Dist, LLC, GLC };

std::string_view to_string(BoundMethod m);
BoundMethod parse_method(std::string_view s);

struct ConfidenceResult {
  double lcb = 0.0;
  double ucb = 0.0;
  BoundMethod method = BoundMethod::Dist;
  Distance distance = Distance::Supremum;
  double radius_used = 0.0;
  double point_estimate = 0.0;
  /// Unclamped T -/+ L c for LLC and GLC; equal to lcb/ucb for Dist.
  double raw_lcb = 0.0;
  double raw_ucb = 0.0;
  /// Lipschitz constant used by LLC and GLC.
  std::optional<double> lipschitz;
  /// Ball extremes used by Dist.
  std::optional<DiscreteDistribution> lower_extreme;
  std::optional<DiscreteDistribution> upper_extreme;

  double width() const noexcept { return ucb - lcb; }
  double raw_width() const noexcept { return raw_ucb - raw_lcb; }
};

/// Whether the method has a valid construction for the (risk, distance) pair.
/// Under W1 the ball operators are optimal only for the risk-averse families,
/// so RDEU and ERM with beta < 0 get GLC bounds only.
bool supported(const RiskMeasure& rm, Distance distance, BoundMethod method);

/// Bound for a given ball radius. Throws UnsupportedCombination when
/// supported() is false.
ConfidenceResult bound_with_radius(const DiscreteDistribution& d, const RiskMeasure& rm, Distance distance,
                                   BoundMethod method, double c, const LipschitzOptions& opt = {});

/// EDF of the samples plus the concentration radius of the rule (default per distance).
ConfidenceResult bound_from_samples(std::span<const double> samples, const SupportBounds& bounds,
                                    const RiskMeasure& rm, Distance distance, BoundMethod method, double delta,
                                    std::optional<RadiusRule> rule = std::nullopt);

struct MethodComparison {
  /// In Dist, LLC, GLC order, skipping unsupported methods.
  std::vector<ConfidenceResult> results;
  std::vector<std::string> skipped;
  /// Dist <= LLC <= GLC on raw UCBs and the mirrored order on raw LCBs.
  bool chain_holds = true;
};

MethodComparison compare_methods(const DiscreteDistribution& d, const RiskMeasure& rm, Distance distance, double c,
                                 double tol = 1e-9);

/// Interval the functional maps D([a, b]) into: [a, b], or [v(a), v(b)] for RDEU.
std::pair<double, double> value_range(const RiskMeasure& rm, const SupportBounds& bounds);

}  // namespace riskbounds
