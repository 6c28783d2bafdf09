#include <gtest/gtest.h>

#include <cmath>

#include "oracle.hpp"
#include "riskbounds/arms.hpp"
#include "riskbounds/catalog.hpp"

using namespace riskbounds;

namespace {
const SupportBounds k01(0.0, 1.0);
// High-precision reference values for Beta(2, 5) on [0, 1].
constexpr double kBeta25Cvar05 = 0.656829000025315360;
constexpr double kBeta25Erm1 = 0.298869784425439055;
}  // namespace

TEST(Rng, DeterministicAndInRange) {
  Rng a(42), b(42);
  for (int i = 0; i < 1000; ++i) {
    const double u = a.uniform();
    EXPECT_EQ(u, b.uniform());
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
  }
  EXPECT_NE(derive_seed(1, 0), derive_seed(1, 1));
  EXPECT_NE(derive_seed(1, 0), derive_seed(2, 0));
}

TEST(Rng, MomentsOfTransforms) {
  Rng rng(7);
  const int n = 200000;
  double sn = 0, sn2 = 0, sg = 0, sb = 0, sg_small = 0;
  for (int i = 0; i < n; ++i) {
    const double z = rng.normal();
    sn += z;
    sn2 += z * z;
    sg += rng.gamma(3.5);
    sg_small += rng.gamma(0.4);
    sb += rng.beta(2.0, 5.0);
  }
  EXPECT_NEAR(sn / n, 0.0, 0.01);
  EXPECT_NEAR(sn2 / n, 1.0, 0.01);
  EXPECT_NEAR(sg / n, 3.5, 0.02);
  EXPECT_NEAR(sg_small / n, 0.4, 0.01);
  EXPECT_NEAR(sb / n, 2.0 / 7.0, 0.002);
}

TEST(ArmSpec, Validation) {
  EXPECT_THROW(ArmSpec(DiracArm{1.5}, k01), std::invalid_argument);
  EXPECT_THROW(ArmSpec(UniformArm{0.5, 0.2}, k01), std::invalid_argument);
  EXPECT_THROW(ArmSpec(BetaArm{0.0, 1.0}, k01), std::invalid_argument);
  EXPECT_THROW(ArmSpec(TruncNormalArm{0.5, 0.0}, k01), std::invalid_argument);
  EXPECT_THROW(parse_arm("gamma:1,2", k01), std::invalid_argument);
  EXPECT_THROW(parse_arm("beta:2", k01), std::invalid_argument);
  EXPECT_EQ(parse_arm("beta:2,5", k01).label(), "beta:2,5");
}

TEST(ArmSpec, QuantileInvertsCdf) {
  for (const auto& arm : {parse_arm("beta:2,5", k01), parse_arm("truncnormal:0.3,0.1", k01),
                          parse_arm("uniform:0.2,0.7", k01), parse_arm("beta:0.5,0.5", k01)}) {
    for (int i = 1; i < 100; ++i) {
      const double y = i / 100.0;
      EXPECT_NEAR(arm.cdf(arm.quantile(y)), y, 1e-12) << arm.label();
    }
  }
}

TEST(ArmSpec, SamplesFollowCdf) {
  Rng rng(11);
  for (const auto& arm : {parse_arm("beta:2,5", k01), parse_arm("truncnormal:0.8,0.3", k01)}) {
    const int n = 20000;
    std::vector<double> xs(n);
    for (auto& x : xs) x = arm.sample(rng);
    const auto edf = from_samples(xs, k01);
    double ks = 0.0;
    for (const Atom& a : edf.atoms()) ks = std::max(ks, std::abs(edf.cdf(a.x) - arm.cdf(a.x)));
    EXPECT_LT(ks, 1.63 / std::sqrt(n)) << arm.label();  // 1% KS critical value
  }
}

TEST(TrueRisk, Examples) {
  EXPECT_EQ(true_risk(ArmSpec(DiracArm{0.3}, k01), RiskMeasure::cvar(0.1)), 0.3);
  const ArmSpec u(UniformArm{0.0, 1.0}, k01);
  for (double alpha : {0.05, 0.25, 0.7}) EXPECT_NEAR(true_risk(u, RiskMeasure::cvar(alpha)), 1 - alpha / 2, 1e-12);
  EXPECT_NEAR(true_risk(u, RiskMeasure::entropic(1.0)), std::log(std::exp(1.0) - 1.0), 1e-12);
  const auto beta = parse_arm("beta:2,5", k01);
  EXPECT_NEAR(true_risk(beta, RiskMeasure::cvar(0.05)), kBeta25Cvar05, 1e-10);
  EXPECT_NEAR(true_risk(beta, RiskMeasure::entropic(1.0)), kBeta25Erm1, 1e-10);
}

TEST(TrueRisk, AgreesWithIndependentQuadrature) {
  const SupportBounds b(0.0, 2.0);
  const std::vector<ArmSpec> arms{parse_arm("beta:2,5", b), parse_arm("truncnormal:0.7,0.4", b),
                                  parse_arm("uniform:0.5,1.5", b), parse_arm("beta:3,1.5", b)};
  for (const auto& arm : arms) {
    for (const auto& rm : testkit::risk_catalog(b)) {
      EXPECT_NEAR(true_risk(arm, rm), testkit::quadrature_risk(arm, rm), 1e-8) << arm.label() << ' ' << rm.label();
    }
  }
}

TEST(TrueRisk, DiscreteArmIsExact) {
  const SupportBounds b(0.0, 2.0);
  Rng rng(3);
  for (int i = 0; i < 20; ++i) {
    const ArmSpec arm(DiscreteArm{testkit::random_distribution(rng, b)}, b);
    for (const auto& rm : testkit::risk_catalog(b)) {
      EXPECT_NEAR(true_risk(arm, rm), testkit::quadrature_risk(arm, rm), 1e-9) << rm.label();
    }
  }
}
