#include "riskbounds/arms.hpp"

#include <algorithm>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/beta.hpp>
#include <boost/math/special_functions/erf.hpp>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace riskbounds {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

double std_normal_cdf(double z) { return 0.5 * std::erfc(-z / std::numbers::sqrt2); }
double std_normal_quantile(double p) { return -std::numbers::sqrt2 * boost::math::erfc_inv(2.0 * p); }

constexpr double kQuadTol = 1e-12;

template <class F>
double integrate(F f, double lo, double hi) {
  if (!(hi > lo)) return 0.0;
  thread_local boost::math::quadrature::tanh_sinh<double> integrator;
  return integrator.integrate(f, lo, hi, kQuadTol);
}

std::vector<double> numbers_after_colon(std::string_view spec) {
  const std::size_t colon = spec.find(':');
  if (colon == std::string_view::npos) throw std::invalid_argument("arm spec must look like family:params");
  std::vector<double> out;
  std::string body(spec.substr(colon + 1));
  std::stringstream ss(body);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (tok.empty() || used != tok.size()) throw std::invalid_argument("malformed number in arm spec");
    out.push_back(v);
  }
  return out;
}

}  // namespace

ArmSpec::ArmSpec(Family family, SupportBounds bounds) : family_(std::move(family)), bounds_(bounds) {
  std::visit(Overloaded{
                 [&](const DiracArm& p) {
                   if (!bounds_.contains(p.x)) throw std::invalid_argument("dirac arm outside bounds");
                 },
                 [&](const UniformArm& p) {
                   if (!(p.lo < p.hi) || !bounds_.contains(p.lo) || !bounds_.contains(p.hi)) {
                     throw std::invalid_argument("uniform arm needs a <= lo < hi <= b");
                   }
                 },
                 [&](const BetaArm& p) {
                   if (!(p.A > 0.0 && p.B > 0.0 && std::isfinite(p.A) && std::isfinite(p.B))) {
                     throw std::invalid_argument("beta arm needs A, B > 0");
                   }
                 },
                 [&](const TruncNormalArm& p) {
                   if (!(p.sigma > 0.0) || !std::isfinite(p.mu) || !std::isfinite(p.sigma)) {
                     throw std::invalid_argument("truncnormal arm needs finite mu and sigma > 0");
                   }
                   p_lo_ = std_normal_cdf((bounds_.a() - p.mu) / p.sigma);
                   p_hi_ = std_normal_cdf((bounds_.b() - p.mu) / p.sigma);
                   if (!(p_hi_ - p_lo_ > 1e-12)) throw std::invalid_argument("truncnormal arm has no mass in bounds");
                 },
                 [&](const DiscreteArm& p) {
                   if (!(p.dist.bounds() == bounds_)) throw std::invalid_argument("discrete arm bounds mismatch");
                 },
             },
             family_);
}

bool ArmSpec::is_discrete() const noexcept {
  return std::holds_alternative<DiracArm>(family_) || std::holds_alternative<DiscreteArm>(family_);
}

std::pair<double, double> ArmSpec::support() const {
  return std::visit(Overloaded{
                        [](const DiracArm& p) { return std::pair{p.x, p.x}; },
                        [](const UniformArm& p) { return std::pair{p.lo, p.hi}; },
                        [&](const BetaArm&) { return std::pair{bounds_.a(), bounds_.b()}; },
                        [&](const TruncNormalArm&) { return std::pair{bounds_.a(), bounds_.b()}; },
                        [](const DiscreteArm& p) { return std::pair{p.dist.atoms().front().x, p.dist.atoms().back().x}; },
                    },
                    family_);
}

double ArmSpec::quantile(double y) const {
  if (!(y > 0.0 && y <= 1.0)) throw std::domain_error("quantile level must lie in (0, 1]");
  return std::visit(Overloaded{
                        [](const DiracArm& p) { return p.x; },
                        [&](const UniformArm& p) { return p.lo + y * (p.hi - p.lo); },
                        [&](const BetaArm& p) {
                          return bounds_.a() + bounds_.width() * boost::math::ibeta_inv(p.A, p.B, y);
                        },
                        [&](const TruncNormalArm& p) {
                          if (y >= 1.0) return bounds_.b();
                          const double z = std_normal_quantile(p_lo_ + y * (p_hi_ - p_lo_));
                          return std::clamp(p.mu + p.sigma * z, bounds_.a(), bounds_.b());
                        },
                        [&](const DiscreteArm& p) { return p.dist.quantile(y); },
                    },
                    family_);
}

double ArmSpec::upper_quantile(double y) const {
  if (!(y >= 0.0 && y < 1.0)) throw std::domain_error("upper quantile level must lie in [0, 1)");
  if (const auto* d = std::get_if<DiracArm>(&family_)) return d->x;
  if (const auto* d = std::get_if<DiscreteArm>(&family_)) {
    const auto cum = d->dist.cumulative();
    const std::size_t i = static_cast<std::size_t>(std::upper_bound(cum.begin(), cum.end(), y) - cum.begin());
    return d->dist.atoms()[std::min(i, cum.size() - 1)].x;
  }
  // Continuous families have no flat CDF pieces inside their support.
  return y <= 0.0 ? support().first : quantile(y);
}

double ArmSpec::cdf(double x) const {
  return std::visit(Overloaded{
                        [&](const DiracArm& p) { return x >= p.x ? 1.0 : 0.0; },
                        [&](const UniformArm& p) { return std::clamp((x - p.lo) / (p.hi - p.lo), 0.0, 1.0); },
                        [&](const BetaArm& p) {
                          const double t = (x - bounds_.a()) / bounds_.width();
                          if (t <= 0.0) return 0.0;
                          if (t >= 1.0) return 1.0;
                          return boost::math::ibeta(p.A, p.B, t);
                        },
                        [&](const TruncNormalArm& p) {
                          if (x <= bounds_.a()) return 0.0;
                          if (x >= bounds_.b()) return 1.0;
                          return std::clamp((std_normal_cdf((x - p.mu) / p.sigma) - p_lo_) / (p_hi_ - p_lo_), 0.0,
                                            1.0);
                        },
                        [&](const DiscreteArm& p) { return p.dist.cdf(x); },
                    },
                    family_);
}

double ArmSpec::sample(Rng& rng) const {
  return std::visit(Overloaded{
                        [](const DiracArm& p) { return p.x; },
                        [&](const UniformArm& p) { return p.lo + rng.uniform() * (p.hi - p.lo); },
                        [&](const BetaArm& p) { return bounds_.a() + bounds_.width() * rng.beta(p.A, p.B); },
                        [&](const TruncNormalArm&) { return quantile(rng.uniform_open()); },
                        [&](const DiscreteArm& p) { return p.dist.quantile(rng.uniform_open()); },
                    },
                    family_);
}

std::string ArmSpec::label() const {
  std::ostringstream os;
  os.precision(12);
  std::visit(Overloaded{
                 [&](const DiracArm& p) { os << "dirac:" << p.x; },
                 [&](const UniformArm& p) { os << "uniform:" << p.lo << ',' << p.hi; },
                 [&](const BetaArm& p) { os << "beta:" << p.A << ',' << p.B; },
                 [&](const TruncNormalArm& p) { os << "truncnormal:" << p.mu << ',' << p.sigma; },
                 [&](const DiscreteArm& p) { os << "discrete:" << p.dist.size() << "-atoms"; },
             },
             family_);
  return os.str();
}

ArmSpec parse_arm(std::string_view spec, const SupportBounds& bounds) {
  const std::string_view name = spec.substr(0, spec.find(':'));
  const std::vector<double> v = numbers_after_colon(spec);
  auto expect = [&](std::size_t n) {
    if (v.size() != n) throw std::invalid_argument("arm spec '" + std::string(spec) + "' has the wrong arity");
  };
  if (name == "dirac") {
    expect(1);
    return ArmSpec(DiracArm{v[0]}, bounds);
  }
  if (name == "uniform") {
    expect(2);
    return ArmSpec(UniformArm{v[0], v[1]}, bounds);
  }
  if (name == "beta") {
    expect(2);
    return ArmSpec(BetaArm{v[0], v[1]}, bounds);
  }
  if (name == "truncnormal") {
    expect(2);
    return ArmSpec(TruncNormalArm{v[0], v[1]}, bounds);
  }
  throw std::invalid_argument("unknown arm family '" + std::string(name) + "'");
}

double true_risk(const ArmSpec& arm, const RiskMeasure& rm) {
  if (const auto* d = std::get_if<DiracArm>(&arm.family())) {
    return evaluate(rm, DiscreteDistribution::dirac(d->x, arm.bounds()));
  }
  if (const auto* d = std::get_if<DiscreteArm>(&arm.family())) return evaluate(rm, d->dist);
  // Tail forms E h(X) = h(lo) + integral of h'(x) (1 - F(x)) over the support,
  // which keep the integrand bounded where the quantile is steep.
  const auto [lo, hi] = arm.support();
  const auto tail = [&](double x) { return 1.0 - arm.cdf(x); };
  return std::visit(
      Overloaded{
          [&](const Cvar& p) {
            const double var = arm.quantile(1.0 - p.alpha);
            return var + integrate(tail, var, hi) / p.alpha;
          },
          [&](const Spectral& p) {
            return lo + integrate([&](double x) { return 1.0 - p.Phi(arm.cdf(x)); }, lo, hi);
          },
          [&](const Distortion& p) {
            return lo + integrate([&](double x) { return p.g(1.0 - arm.cdf(x)); }, lo, hi);
          },
          [&](const Entropic& p) {
            const double m = p.beta > 0.0 ? hi : lo;
            const double s = std::exp(p.beta * (lo - m)) +
                             integrate([&](double x) { return p.beta * std::exp(p.beta * (x - m)) * tail(x); }, lo, hi);
            return m + std::log(s) / p.beta;
          },
          [&](const CertaintyEquivalent& p) {
            return p.u_inv(p.u(lo) + integrate([&](double x) { return p.du(x) * tail(x); }, lo, hi));
          },
          [&](const RankDependent& p) {
            return p.v(lo) + integrate([&](double x) { return p.dv(x) * (1.0 - p.w(arm.cdf(x))); }, lo, hi);
          },
      },
      rm.params());
}

}  // namespace riskbounds
