#pragma once

#include <cstddef>

#include "riskbounds/distribution.hpp"
#include "riskbounds/risk_measure.hpp"

namespace riskbounds {

struct LipschitzOptions {
  /// Grid size for derivative sup-norms of functions without an analytic bound.
  std::size_t grid = 10000;
};

/// Global Lipschitz constant of the risk measure w.r.t. the distance on D([a, b]).
/// Throws NonFiniteConstant when the constant is infinite for the supplied functions.
double glc(const RiskMeasure& rm, Distance distance, const SupportBounds& bounds,
           const LipschitzOptions& opt = {});

/// Local Lipschitz constant over the ball of radius c around center.
/// Throws UnsupportedCombination for (RDEU, W1) and NonFiniteConstant when infinite.
double llc(const RiskMeasure& rm, Distance distance, const DiscreteDistribution& center, double c,
           const LipschitzOptions& opt = {});

}  // namespace riskbounds
