#include "riskbounds/risk_measure.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace riskbounds {

namespace {

constexpr int kValidationGrid = 1000;

std::string fmt_param(std::string_view name, double v) {
  std::ostringstream os;
  os.precision(12);
  os << name << ':' << v;
  return os.str();
}

[[noreturn]] void invalid(const std::string& what) { throw std::invalid_argument(what); }

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

std::string_view to_string(Family f) {
  switch (f) {
    case Family::CVaR: return "cvar";
    case Family::SRM: return "srm";
    case Family::DRM: return "drm";
    case Family::ERM: return "erm";
    case Family::CE: return "ce";
    case Family::RDEU: return "rdeu";
  }
  return "?";
}

RiskMeasure RiskMeasure::cvar(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) invalid("CVaR level alpha must lie in (0, 1)");
  return RiskMeasure(Cvar{alpha}, fmt_param("cvar", alpha));
}

RiskMeasure RiskMeasure::spectral(ScalarFn phi, ScalarFn Phi) {
  if (!phi || !Phi) invalid("SRM requires phi and its antiderivative");
  if (std::abs(Phi(0.0)) > 1e-6 || std::abs(Phi(1.0) - 1.0) > 1e-6) {
    invalid("SRM antiderivative must satisfy Phi(0) = 0 and Phi(1) = 1");
  }
  const double h = 1.0 / kValidationGrid;
  double prev_phi = phi(0.0);
  double prev_Phi = Phi(0.0);
  if (prev_phi < 0.0) invalid("SRM weighting function must be nonnegative");
  for (int i = 1; i <= kValidationGrid; ++i) {
    const double y = i * h;
    const double cur_phi = phi(y);
    const double cur_Phi = Phi(y);
    if (cur_phi < prev_phi - 1e-12) invalid("SRM weighting function must be nondecreasing");
    const double inc = cur_Phi - prev_Phi;
    if (inc < prev_phi * h - 1e-6 || inc > cur_phi * h + 1e-6) {
      invalid("SRM Phi is not an antiderivative of phi");
    }
    prev_phi = cur_phi;
    prev_Phi = cur_Phi;
  }
  return RiskMeasure(Spectral{std::move(phi), std::move(Phi)}, "srm");
}

RiskMeasure RiskMeasure::distortion(ScalarFn g, ScalarFn dg, std::optional<double> dg_sup) {
  if (!g || !dg) invalid("DRM requires g and g'");
  if (std::abs(g(0.0)) > 1e-9 || std::abs(g(1.0) - 1.0) > 1e-9) {
    invalid("distortion must satisfy g(0) = 0 and g(1) = 1");
  }
  const double h = 1.0 / kValidationGrid;
  double prev_g = g(0.0);
  double prev_dg = dg(0.0);
  for (int i = 1; i <= kValidationGrid; ++i) {
    const double y = i * h;
    const double cur_g = g(y);
    const double cur_dg = dg(y);
    if (cur_g < prev_g - 1e-12) invalid("distortion must be nondecreasing");
    if (cur_dg > prev_dg + 1e-9) invalid("distortion must be concave (g' nonincreasing)");
    const double inc = cur_g - prev_g;
    if (inc < cur_dg * h - 1e-6 || inc > prev_dg * h + 1e-6) {
      invalid("distortion derivative is inconsistent with g");
    }
    prev_g = cur_g;
    prev_dg = cur_dg;
  }
  return RiskMeasure(Distortion{std::move(g), std::move(dg), dg_sup}, "drm");
}

RiskMeasure RiskMeasure::entropic(double beta) {
  if (!std::isfinite(beta) || beta == 0.0) invalid("ERM requires a finite beta != 0; use the mean for beta = 0");
  return RiskMeasure(Entropic{beta}, fmt_param("erm", beta));
}

RiskMeasure RiskMeasure::certainty_equivalent(ScalarFn u, ScalarFn du, ScalarFn u_inv,
                                              const SupportBounds& domain) {
  if (!u || !du || !u_inv) invalid("CE requires u, u' and u^{-1}");
  const double h = domain.width() / kValidationGrid;
  double prev_u = u(domain.a());
  double prev_du = du(domain.a());
  for (int i = 0; i <= kValidationGrid; ++i) {
    const double x = domain.a() + i * h;
    const double ux = u(x);
    if (std::abs(u_inv(ux) - x) > 1e-8 * std::max(1.0, std::abs(x))) {
      invalid("CE inverse utility does not invert u");
    }
    if (i == 0) continue;
    const double dux = du(x);
    if (!(ux > prev_u)) invalid("CE utility must be strictly increasing on the support");
    if (dux < prev_du - 1e-9) invalid("CE utility must be convex (u' nondecreasing)");
    const double inc = ux - prev_u;
    const double tol = 1e-6 * std::max(1.0, std::abs(ux));
    if (inc < prev_du * h - tol || inc > dux * h + tol) invalid("CE derivative is inconsistent with u");
    prev_u = ux;
    prev_du = dux;
  }
  return RiskMeasure(CertaintyEquivalent{std::move(u), std::move(du), std::move(u_inv)}, "ce");
}

RiskMeasure RiskMeasure::rank_dependent(ScalarFn w, ScalarFn dw, ScalarFn v, ScalarFn dv,
                                        const SupportBounds& domain) {
  if (!w || !dw || !v || !dv) invalid("RDEU requires w, w', v and v'");
  if (std::abs(w(0.0)) > 1e-9 || std::abs(w(1.0) - 1.0) > 1e-9) {
    invalid("RDEU weight must satisfy w(0) = 0 and w(1) = 1");
  }
  if (std::abs(v(0.0)) > 1e-9) invalid("RDEU value function must satisfy v(0) = 0");
  double prev = w(0.0);
  for (int i = 1; i <= kValidationGrid; ++i) {
    const double cur = w(static_cast<double>(i) / kValidationGrid);
    if (cur < prev - 1e-12) invalid("RDEU weight must be nondecreasing");
    prev = cur;
  }
  const double h = domain.width() / kValidationGrid;
  prev = v(domain.a());
  for (int i = 1; i <= kValidationGrid; ++i) {
    const double cur = v(domain.a() + i * h);
    if (cur < prev - 1e-12) invalid("RDEU value function must be nondecreasing on the support");
    prev = cur;
  }
  return RiskMeasure(RankDependent{std::move(w), std::move(dw), std::move(v), std::move(dv), std::nullopt, {}},
                     "rdeu");
}

RiskMeasure RiskMeasure::with_label(std::string label) && {
  label_ = std::move(label);
  return std::move(*this);
}

RiskMeasure RiskMeasure::with_label(std::string label) const& {
  RiskMeasure copy = *this;
  copy.label_ = std::move(label);
  return copy;
}

double integrate_quantile(const DiscreteDistribution& d, double lo, double hi) {
  lo = std::clamp(lo, 0.0, 1.0);
  hi = std::clamp(hi, 0.0, 1.0);
  if (hi <= lo) return 0.0;
  const auto atoms = d.atoms();
  const auto cum = d.cumulative();
  // First atom whose cumulative mass exceeds lo.
  std::size_t i = static_cast<std::size_t>(std::upper_bound(cum.begin(), cum.end(), lo) - cum.begin());
  double total = 0.0;
  double level = lo;
  for (; i < atoms.size() && level < hi; ++i) {
    const double top = std::min(cum[i], hi);
    if (top > level) total += (top - level) * atoms[i].x;
    level = top;
  }
  return total;
}

double eval_cvar(double alpha, const DiscreteDistribution& d) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("CVaR level alpha must lie in (0, 1)");
  const auto atoms = d.atoms();
  double remaining = alpha;
  double acc = 0.0;
  for (std::size_t k = atoms.size(); k-- > 0 && remaining > 0.0;) {
    const double take = std::min(atoms[k].p, remaining);
    acc += take * atoms[k].x;
    remaining -= take;
  }
  return acc / alpha;
}

double eval_srm(const ScalarFn& Phi, const DiscreteDistribution& d) {
  const auto atoms = d.atoms();
  const auto cum = d.cumulative();
  double acc = 0.0;
  double prev = Phi(0.0);
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    const double cur = Phi(cum[i]);
    acc += atoms[i].x * (cur - prev);
    prev = cur;
  }
  return acc;
}

double eval_drm(const ScalarFn& g, const DiscreteDistribution& d) {
  const auto atoms = d.atoms();
  const auto cum = d.cumulative();
  const double a = d.bounds().a();
  double acc = a;
  // Segment [a, x_1) carries F = 0.
  double left = a;
  double level = 0.0;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    acc += g(1.0 - level) * (atoms[i].x - left);
    left = atoms[i].x;
    level = cum[i];
  }
  acc += g(std::max(0.0, 1.0 - level)) * (d.bounds().b() - left);
  return acc;
}

double eval_erm(double beta, const DiscreteDistribution& d) {
  if (!std::isfinite(beta) || beta == 0.0) throw std::invalid_argument("ERM requires beta != 0");
  const auto atoms = d.atoms();
  double shift = beta * atoms.front().x;
  for (const Atom& at : atoms) shift = std::max(shift, beta * at.x);
  double s = 0.0;
  for (const Atom& at : atoms) s += at.p * std::exp(beta * at.x - shift);
  return (std::log(s) + shift) / beta;
}

double eval_ce(const ScalarFn& u, const ScalarFn& u_inv, const DiscreteDistribution& d) {
  double s = 0.0;
  for (const Atom& at : d.atoms()) s += at.p * u(at.x);
  return u_inv(s);
}

double eval_rdeu(const ScalarFn& w, const ScalarFn& v, const DiscreteDistribution& d) {
  const auto atoms = d.atoms();
  const auto cum = d.cumulative();
  double acc = 0.0;
  double prev = w(0.0);
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    const double cur = w(cum[i]);
    acc += v(atoms[i].x) * (cur - prev);
    prev = cur;
  }
  return acc;
}

double evaluate(const RiskMeasure& rm, const DiscreteDistribution& d) {
  return std::visit(Overloaded{
                        [&](const Cvar& p) { return eval_cvar(p.alpha, d); },
                        [&](const Spectral& p) { return eval_srm(p.Phi, d); },
                        [&](const Distortion& p) { return eval_drm(p.g, d); },
                        [&](const Entropic& p) { return eval_erm(p.beta, d); },
                        [&](const CertaintyEquivalent& p) { return eval_ce(p.u, p.u_inv, d); },
                        [&](const RankDependent& p) { return eval_rdeu(p.w, p.v, d); },
                    },
                    rm.params());
}

}  // namespace riskbounds
