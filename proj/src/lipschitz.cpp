#include "riskbounds/lipschitz.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "riskbounds/error.hpp"
#include "riskbounds/operators.hpp"

namespace riskbounds {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

double finite_or_throw(double v, const RiskMeasure& rm, const char* which) {
  if (!std::isfinite(v)) {
    throw NonFiniteConstant(std::string(which) + " Lipschitz constant of " + rm.label() +
                            " is not finite on this support");
  }
  return v;
}

double grid_max(const ScalarFn& f, double lo, double hi, std::size_t grid) {
  double m = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i <= grid; ++i) m = std::max(m, f(lo + (hi - lo) * static_cast<double>(i) / grid));
  return m;
}

// sup of g' on (0, 1]; the grid skips y = 0 where power distortions blow up.
double dg_sup(const Distortion& p, std::size_t grid) {
  if (p.dg_sup) return *p.dg_sup;
  return grid_max(p.dg, 1.0 / grid, 1.0, grid - 1);
}

double dw_sup(const RankDependent& p, std::size_t grid) {
  if (p.dw_sup) return *p.dw_sup;
  return grid_max(p.dw, 0.0, 1.0, grid);
}

double dv_sup(const RankDependent& p, const SupportBounds& bounds, std::size_t grid) {
  if (p.dv_sup) return p.dv_sup(bounds);
  return grid_max(p.dv, bounds.a(), bounds.b(), grid);
}

// Sum over the step segments of F: f(F level) * (h(right) - h(left)),
// covering [a, x_1), [x_1, x_2), ..., [x_m, b]. Zero-length segments are
// skipped so an infinite weight on an empty segment contributes nothing.
template <class Weight, class Measure>
double segment_sum(const DiscreteDistribution& d, Weight weight, Measure h) {
  const auto atoms = d.atoms();
  const auto cum = d.cumulative();
  double acc = 0.0;
  double left = d.bounds().a();
  double level = 0.0;
  for (std::size_t i = 0; i <= atoms.size(); ++i) {
    const double right = i < atoms.size() ? atoms[i].x : d.bounds().b();
    if (right > left) acc += weight(level) * (h(right) - h(left));
    if (i < atoms.size()) {
      left = right;
      level = cum[i];
    }
  }
  return acc;
}

DiscreteDistribution lower_extreme(const DiscreteDistribution& center, Distance distance, double c) {
  return distance == Distance::Supremum ? neg_sup(center, c) : neg_w1(center, c);
}

DiscreteDistribution upper_extreme(const DiscreteDistribution& center, Distance distance, double c) {
  return distance == Distance::Supremum ? pos_sup(center, c) : pos_w1(center, c);
}

// E exp(beta (X - ref)).
double shifted_moment(double beta, double ref, const DiscreteDistribution& d) {
  double s = 0.0;
  for (const Atom& at : d.atoms()) s += at.p * std::exp(beta * (at.x - ref));
  return s;
}

// ERM constant given the smallest exponential moment, expressed relative to
// the support end where the exponential is largest.
double erm_constant(double beta, Distance distance, const SupportBounds& bounds, double rel_moment) {
  const double span = std::abs(beta) * bounds.width();
  if (distance == Distance::Wasserstein1) return 1.0 / rel_moment;
  return -std::expm1(-span) / (std::abs(beta) * rel_moment);
}

}  // namespace

double glc(const RiskMeasure& rm, Distance distance, const SupportBounds& bounds, const LipschitzOptions& opt) {
  const bool sup = distance == Distance::Supremum;
  const double w = bounds.width();
  const double v = std::visit(
      Overloaded{
          [&](const Cvar& p) { return (sup ? w : 1.0) / p.alpha; },
          [&](const Spectral& p) { return (sup ? w : 1.0) * p.phi(1.0); },
          [&](const Distortion& p) { return (sup ? w : 1.0) * dg_sup(p, opt.grid); },
          [&](const Entropic& p) {
            // The smallest moment over D([a,b]) is the Dirac at the end where
            // exp(beta x) is smallest.
            const double span = std::abs(p.beta) * w;
            return sup ? std::expm1(span) / std::abs(p.beta) : std::exp(span);
          },
          [&](const CertaintyEquivalent& p) {
            const double denom = p.du(bounds.a());
            const double num = sup ? p.u(bounds.b()) - p.u(bounds.a()) : p.du(bounds.b());
            return denom > 0.0 ? num / denom : std::numeric_limits<double>::infinity();
          },
          [&](const RankDependent& p) {
            const double ws = dw_sup(p, opt.grid);
            return sup ? ws * (p.v(bounds.b()) - p.v(bounds.a())) : ws * dv_sup(p, bounds, opt.grid);
          },
      },
      rm.params());
  return finite_or_throw(v, rm, "global");
}

double llc(const RiskMeasure& rm, Distance distance, const DiscreteDistribution& center, double c,
           const LipschitzOptions& opt) {
  if (!(c >= 0.0)) throw std::invalid_argument("radius must be >= 0");
  const SupportBounds& bounds = center.bounds();
  const bool sup = distance == Distance::Supremum;
  const double v = std::visit(
      Overloaded{
          [&](const Cvar& p) {
            if (!sup) return 1.0 / p.alpha;
            return (bounds.b() - center.quantile_or_lower(1.0 - p.alpha - c)) / p.alpha;
          },
          [&](const Spectral& p) {
            if (!sup) return p.phi(1.0);
            return segment_sum(neg_sup(center, c), p.phi, [](double x) { return x; });
          },
          [&](const Distortion& p) {
            if (!sup) return dg_sup(p, opt.grid);
            return segment_sum(neg_sup(center, c), [&](double q) { return p.dg(std::max(0.0, 1.0 - q)); },
                               [](double x) { return x; });
          },
          [&](const Entropic& p) {
            if (!sup && p.beta < 0.0) {
              throw UnsupportedCombination(
                  "no local Lipschitz constant is known for ERM with beta < 0 under the Wasserstein distance; "
                  "use GLC");
            }
            // The moment is smallest at the lower extreme for beta > 0 and at
            // the upper extreme for beta < 0.
            const bool pos_beta = p.beta > 0.0;
            const DiscreteDistribution m =
                pos_beta ? lower_extreme(center, distance, c) : upper_extreme(center, distance, c);
            const double ref = pos_beta ? bounds.b() : bounds.a();
            return erm_constant(p.beta, distance, bounds, shifted_moment(p.beta, ref, m));
          },
          [&](const CertaintyEquivalent& p) {
            const DiscreteDistribution m = lower_extreme(center, distance, c);
            double eu = 0.0;
            for (const Atom& at : m.atoms()) eu += at.p * p.u(at.x);
            const double denom = p.du(p.u_inv(eu));
            const double num = sup ? p.u(bounds.b()) - p.u(bounds.a()) : p.du(bounds.b());
            return denom > 0.0 ? num / denom : std::numeric_limits<double>::infinity();
          },
          [&](const RankDependent& p) -> double {
            if (!sup) {
              throw UnsupportedCombination(
                  "no local Lipschitz constant is known for RDEU under the Wasserstein distance; use GLC");
            }
            return segment_sum(neg_sup(center, c), p.dw, p.v);
          },
      },
      rm.params());
  return finite_or_throw(v, rm, "local");
}

}  // namespace riskbounds
