#pragma once

#include <vector>

#include "riskbounds/distribution.hpp"

namespace riskbounds {

/// Confidence ball B(center, c) under the chosen CDF distance.
struct BallSpec {
  Distance distance;
  double c;

  BallSpec(Distance d, double radius);
};

enum class Side { Upper, Lower };

/// Internals of one water-filling pass, exposed for diagnostics and tests.
struct WaterFillTrace {
  /// Position in cumulative_areas of the first area >= c; -1 when saturated.
  long break_index = -1;
  /// Areas accumulated atom by atom, starting from the top of the support.
  std::vector<double> cumulative_areas;
  /// Residual mass kept at the break atom (positive operator) or the level the
  /// collapsed upper mass is moved to (negative operator).
  double residual_mass_or_level = 0.0;
  bool saturated = false;
};

/// Supremum-ball maximiser: x -> max(F(x) - c, 0) on [a, b), deficit placed at b.
DiscreteDistribution pos_sup(const DiscreteDistribution& d, double c);

/// Supremum-ball minimiser: x -> min(F(x) + c, 1) on [a, b], surplus placed at a.
DiscreteDistribution neg_sup(const DiscreteDistribution& d, double c);

/// Wasserstein-ball maximiser: the highest mass is transported to b until the
/// transport budget c is spent (reverse water-filling against b).
DiscreteDistribution pos_w1(const DiscreteDistribution& d, double c, WaterFillTrace* trace = nullptr);

/// Wasserstein-ball minimiser: the upper tail is collapsed onto a single level
/// so that exactly c of transport is spent (water-filling towards a).
DiscreteDistribution neg_w1(const DiscreteDistribution& d, double c, WaterFillTrace* trace = nullptr);

/// Dispatch over the four operators.
DiscreteDistribution extreme(const DiscreteDistribution& d, const BallSpec& ball, Side side);

}  // namespace riskbounds
