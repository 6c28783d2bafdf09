#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "riskbounds/arms.hpp"
#include "riskbounds/risk_measure.hpp"

namespace riskbounds {

/// Index rule: Dist uses the risk of the supremum-ball lower extreme, LLC and
/// GLC subtract a Lipschitz constant times the radius.
enum class BanditVariant { Dist, LLC, GLC };

std::string_view to_string(BanditVariant v);
BanditVariant parse_variant(std::string_view s);

/// Loss-minimising instance: the best arm has the smallest risk.
struct BanditInstance {
  SupportBounds bounds;
  std::vector<ArmSpec> arms;
  std::size_t horizon;
  RiskMeasure risk;
  std::uint64_t seed = 0;

  BanditInstance(SupportBounds bounds, std::vector<ArmSpec> arms, std::size_t horizon, RiskMeasure risk,
                 std::uint64_t seed = 0);

  std::size_t num_arms() const noexcept { return arms.size(); }
};

struct RegretTrace {
  std::vector<std::uint32_t> chosen;
  std::vector<double> loss;
  std::vector<double> instant_regret;
  std::vector<double> cumulative_regret;
  std::vector<std::size_t> pulls;
  /// True risk of each arm, used for regret accounting.
  std::vector<double> arm_risk;

  double final_regret() const noexcept { return cumulative_regret.empty() ? 0.0 : cumulative_regret.back(); }
};

struct BanditOptions {
  /// O(1) CVaR indices from prefix sums of the sorted samples. When false (or
  /// the risk is not CVaR) indices go through the generic operator path.
  bool cvar_fast_path = true;
};

/// Algorithm: pull each arm once, then the arm with the smallest index under
/// radius sqrt(log(2 K N^2) / s_i).
RegretTrace run_lcb(const BanditInstance& inst, BanditVariant variant, std::uint64_t seed,
                    const BanditOptions& opt = {});

/// True risks of the arms.
std::vector<double> arm_risks(const BanditInstance& inst);

struct CStar {
  double c;
  /// b minus the quantile at 1 - alpha - 2c (right limit, so flat pieces and
  /// the boundary level 0 are well defined).
  double spread;
};

/// Smallest c in (0, (1 - alpha)/2] with 2 (b - F^{-1}(1 - alpha - 2c)) c / alpha >= gap.
/// Clamps to the right end when the equation has no root inside the interval.
CStar solve_cstar(const ArmSpec& arm, double gap, double alpha);

/// Regret bound for the Dist variant with CVaR{alpha}, alpha in (0, 0.5]:
///   4 log(sqrt(2) N) / alpha^2 * sum_i spread_i^2 / gap_i + 3 sum_i gap_i.
double regret_bound(const BanditInstance& inst, std::size_t horizon);
inline double regret_bound(const BanditInstance& inst) { return regret_bound(inst, inst.horizon); }

}  // namespace riskbounds
