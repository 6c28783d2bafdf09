#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <variant>

#include "riskbounds/distribution.hpp"
#include "riskbounds/random.hpp"
#include "riskbounds/risk_measure.hpp"

namespace riskbounds {

struct DiracArm {
  double x;
};
struct UniformArm {
  double lo;
  double hi;
};
/// Beta(A, B) rescaled affinely onto the instance bounds.
struct BetaArm {
  double A;
  double B;
};
/// Normal(mu, sigma) conditioned on the instance bounds.
struct TruncNormalArm {
  double mu;
  double sigma;
};
struct DiscreteArm {
  DiscreteDistribution dist;
};

/// A parametric loss distribution supported inside the instance bounds.
class ArmSpec {
 public:
  using Family = std::variant<DiracArm, UniformArm, BetaArm, TruncNormalArm, DiscreteArm>;

  ArmSpec(Family family, SupportBounds bounds);

  const Family& family() const noexcept { return family_; }
  const SupportBounds& bounds() const noexcept { return bounds_; }
  bool is_discrete() const noexcept;
  /// Smallest interval carrying all the mass.
  std::pair<double, double> support() const;

  double sample(Rng& rng) const;
  double cdf(double x) const;
  /// inf{x : F(x) >= y}, y in (0, 1].
  double quantile(double y) const;
  /// Right-continuous quantile inf{x : F(x) > y}, y in [0, 1).
  double upper_quantile(double y) const;
  std::string label() const;

 private:
  Family family_;
  SupportBounds bounds_;
  // Truncated normal: standard normal CDF at the two bounds.
  double p_lo_ = 0.0;
  double p_hi_ = 1.0;
};

/// Parses dirac:x, uniform:lo,hi, beta:A,B, truncnormal:mu,sigma.
ArmSpec parse_arm(std::string_view spec, const SupportBounds& bounds);

/// Risk of the arm distribution: exact for discrete arms, double-exponential
/// quadrature on CDF tail forms otherwise.
double true_risk(const ArmSpec& arm, const RiskMeasure& rm);

}  // namespace riskbounds
