#pragma once

#include <string_view>

#include "riskbounds/distribution.hpp"
#include "riskbounds/risk_measure.hpp"

namespace riskbounds {

// Parametric risk measures addressable by name across a process boundary:
//
//   cvar:<alpha>          alpha in (0, 1)
//   erm:<beta>            beta != 0
//   srm-power:<k>         phi(y) = k y^(k-1), k >= 1
//   drm-power:<s>         g(y) = y^s, s in (0, 1]
//   drm-dual:<s>          g(y) = 1 - (1 - y)^s, s >= 1
//   ce-power:<k>          u(x) = x^k, k >= 1, support within [0, inf)
//   rdeu-power:<s>,<k>    w(y) = y^s (s >= 1), v(x) = x^k (k > 0), support within [0, inf)
//
// Every entry carries analytic derivative sup-norms so Lipschitz constants
// never fall back to grid search.

RiskMeasure parse_risk(std::string_view spec, const SupportBounds& bounds);

RiskMeasure srm_power(double k);
RiskMeasure drm_power(double s);
RiskMeasure drm_dual(double s);
RiskMeasure ce_power(double k, const SupportBounds& bounds);
RiskMeasure rdeu_power(double s, double k, const SupportBounds& bounds);

/// CVaR expressed through the other families, used for consistency checks.
RiskMeasure cvar_as_srm(double alpha);
RiskMeasure cvar_as_drm(double alpha);
RiskMeasure erm_as_ce(double beta, const SupportBounds& bounds);

}  // namespace riskbounds
