#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "riskbounds/distribution.hpp"

namespace riskbounds {

using ScalarFn = std::function<double(double)>;

/// Mean of the worst alpha-fraction of losses.
struct Cvar {
  double alpha;
};

/// Spectral risk measure: integral of phi(y) F^{-1}(y) over (0, 1].
/// The antiderivative Phi makes evaluation on step CDFs exact.
struct Spectral {
  ScalarFn phi;
  ScalarFn Phi;
};

/// Distortion risk measure a + integral over [a, b] of g(1 - F(x)).
struct Distortion {
  ScalarFn g;
  ScalarFn dg;
  /// sup of g' on (0, 1]; when unset a dense grid is used.
  std::optional<double> dg_sup;
};

/// (1/beta) log E exp(beta X).
struct Entropic {
  double beta;
};

/// u^{-1}(E u(X)) for a convex, strictly increasing utility u.
struct CertaintyEquivalent {
  ScalarFn u;
  ScalarFn du;
  ScalarFn u_inv;
};

/// Stieltjes integral of v against w(F).
struct RankDependent {
  ScalarFn w;
  ScalarFn dw;
  ScalarFn v;
  ScalarFn dv;
  std::optional<double> dw_sup;
  /// sup of v' over the support bounds; when unset a dense grid is used.
  std::function<double(const SupportBounds&)> dv_sup;
};

enum class Family { CVaR, SRM, DRM, ERM, CE, RDEU };

std::string_view to_string(Family f);

/// A validated risk measure. Construct through the named factories so the
/// family's admissibility conditions are grid-checked once.
class RiskMeasure {
 public:
  using Params = std::variant<Cvar, Spectral, Distortion, Entropic, CertaintyEquivalent, RankDependent>;

  static RiskMeasure cvar(double alpha);
  static RiskMeasure spectral(ScalarFn phi, ScalarFn Phi);
  static RiskMeasure distortion(ScalarFn g, ScalarFn dg, std::optional<double> dg_sup = std::nullopt);
  static RiskMeasure entropic(double beta);
  /// The utility is validated on `domain` (strictly increasing, convex,
  /// u_inv(u(x)) == x within 1e-8).
  static RiskMeasure certainty_equivalent(ScalarFn u, ScalarFn du, ScalarFn u_inv,
                                          const SupportBounds& domain);
  static RiskMeasure rank_dependent(ScalarFn w, ScalarFn dw, ScalarFn v, ScalarFn dv,
                                    const SupportBounds& domain);

  Family family() const noexcept { return static_cast<Family>(params_.index()); }
  const Params& params() const noexcept { return params_; }
  const std::string& label() const noexcept { return label_; }
  RiskMeasure with_label(std::string label) &&;
  RiskMeasure with_label(std::string label) const&;

  /// Direct access used by the catalog to attach analytic derivative bounds.
  Params& mutable_params() noexcept { return params_; }

 private:
  RiskMeasure(Params p, std::string label) : params_(std::move(p)), label_(std::move(label)) {}

  Params params_;
  std::string label_;
};

double eval_cvar(double alpha, const DiscreteDistribution& d);
double eval_srm(const ScalarFn& phi_antiderivative, const DiscreteDistribution& d);
double eval_drm(const ScalarFn& g, const DiscreteDistribution& d);
double eval_erm(double beta, const DiscreteDistribution& d);
double eval_ce(const ScalarFn& u, const ScalarFn& u_inv, const DiscreteDistribution& d);
double eval_rdeu(const ScalarFn& w, const ScalarFn& v, const DiscreteDistribution& d);

double evaluate(const RiskMeasure& rm, const DiscreteDistribution& d);

/// Mean of the quantile function over [lo, hi] within (0, 1], times (hi - lo):
/// the exact integral of F^{-1} for a step CDF. Levels are clamped to [0, 1].
double integrate_quantile(const DiscreteDistribution& d, double lo, double hi);

}  // namespace riskbounds
