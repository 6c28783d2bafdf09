#include "riskbounds/catalog.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace riskbounds {

namespace {

std::vector<double> parse_numbers(std::string_view body, std::string_view full) {
  std::vector<double> out;
  std::size_t start = 0;
  while (start <= body.size()) {
    const std::size_t comma = body.find(',', start);
    const std::string token(body.substr(start, comma == std::string_view::npos ? body.size() - start : comma - start));
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (token.empty() || used != token.size()) {
      throw std::invalid_argument("malformed number in risk spec '" + std::string(full) + "'");
    }
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string label_of(std::string_view name, std::initializer_list<double> params) {
  std::ostringstream os;
  os.precision(12);
  os << name << ':';
  bool first = true;
  for (double p : params) {
    if (!first) os << ',';
    os << p;
    first = false;
  }
  return os.str();
}

void require_nonnegative_support(const SupportBounds& bounds, std::string_view what) {
  if (bounds.a() < 0.0) {
    throw std::invalid_argument(std::string(what) + " requires a support within [0, inf)");
  }
}

}  // namespace

RiskMeasure srm_power(double k) {
  if (!(k >= 1.0)) throw std::invalid_argument("srm-power requires k >= 1");
  return RiskMeasure::spectral([k](double y) { return k * std::pow(y, k - 1.0); },
                               [k](double y) { return std::pow(y, k); })
      .with_label(label_of("srm-power", {k}));
}

RiskMeasure drm_power(double s) {
  if (!(s > 0.0 && s <= 1.0)) throw std::invalid_argument("drm-power requires s in (0, 1]");
  const double sup = s == 1.0 ? 1.0 : std::numeric_limits<double>::infinity();
  return RiskMeasure::distortion([s](double y) { return std::pow(y, s); },
                                 [s](double y) {
                                   if (s == 1.0) return 1.0;
                                   return y <= 0.0 ? std::numeric_limits<double>::infinity()
                                                   : s * std::pow(y, s - 1.0);
                                 },
                                 sup)
      .with_label(label_of("drm-power", {s}));
}

RiskMeasure drm_dual(double s) {
  if (!(s >= 1.0)) throw std::invalid_argument("drm-dual requires s >= 1");
  return RiskMeasure::distortion([s](double y) { return 1.0 - std::pow(1.0 - y, s); },
                                 [s](double y) { return s * std::pow(1.0 - y, s - 1.0); }, s)
      .with_label(label_of("drm-dual", {s}));
}

RiskMeasure ce_power(double k, const SupportBounds& bounds) {
  if (!(k >= 1.0)) throw std::invalid_argument("ce-power requires k >= 1");
  require_nonnegative_support(bounds, "ce-power");
  return RiskMeasure::certainty_equivalent([k](double x) { return std::pow(x, k); },
                                           [k](double x) { return k * std::pow(x, k - 1.0); },
                                           [k](double y) { return std::pow(std::max(y, 0.0), 1.0 / k); },
                                           bounds)
      .with_label(label_of("ce-power", {k}));
}

RiskMeasure rdeu_power(double s, double k, const SupportBounds& bounds) {
  if (!(s >= 1.0)) throw std::invalid_argument("rdeu-power requires s >= 1");
  if (!(k > 0.0)) throw std::invalid_argument("rdeu-power requires k > 0");
  require_nonnegative_support(bounds, "rdeu-power");
  RiskMeasure rm = RiskMeasure::rank_dependent([s](double y) { return std::pow(y, s); },
                                               [s](double y) { return s * std::pow(y, s - 1.0); },
                                               [k](double x) { return std::pow(x, k); },
                                               [k](double x) {
                                                 return x <= 0.0 && k < 1.0
                                                            ? std::numeric_limits<double>::infinity()
                                                            : k * std::pow(x, k - 1.0);
                                               },
                                               bounds)
                       .with_label(label_of("rdeu-power", {s, k}));
  auto& p = std::get<RankDependent>(rm.mutable_params());
  p.dw_sup = s;
  p.dv_sup = [k](const SupportBounds& b) {
    if (k >= 1.0) return k * std::pow(b.b(), k - 1.0);
    return b.a() > 0.0 ? k * std::pow(b.a(), k - 1.0) : std::numeric_limits<double>::infinity();
  };
  return rm;
}

RiskMeasure cvar_as_srm(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("alpha must lie in (0, 1)");
  return RiskMeasure::spectral([alpha](double y) { return y >= 1.0 - alpha ? 1.0 / alpha : 0.0; },
                               [alpha](double y) { return std::max(0.0, y - (1.0 - alpha)) / alpha; })
      .with_label(label_of("srm-cvar", {alpha}));
}

RiskMeasure cvar_as_drm(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("alpha must lie in (0, 1)");
  return RiskMeasure::distortion([alpha](double y) { return std::min(y / alpha, 1.0); },
                                 [alpha](double y) { return y < alpha ? 1.0 / alpha : 0.0; }, 1.0 / alpha)
      .with_label(label_of("drm-cvar", {alpha}));
}

RiskMeasure erm_as_ce(double beta, const SupportBounds& bounds) {
  if (!(beta > 0.0)) throw std::invalid_argument("exponential utility is convex increasing only for beta > 0");
  return RiskMeasure::certainty_equivalent([beta](double x) { return std::exp(beta * x); },
                                           [beta](double x) { return beta * std::exp(beta * x); },
                                           [beta](double y) { return std::log(y) / beta; }, bounds)
      .with_label(label_of("ce-exp", {beta}));
}

RiskMeasure parse_risk(std::string_view spec, const SupportBounds& bounds) {
  const std::size_t colon = spec.find(':');
  if (colon == std::string_view::npos) {
    throw std::invalid_argument("risk spec '" + std::string(spec) + "' must look like name:params");
  }
  const std::string_view name = spec.substr(0, colon);
  const std::vector<double> v = parse_numbers(spec.substr(colon + 1), spec);
  auto expect = [&](std::size_t n) {
    if (v.size() != n) {
      throw std::invalid_argument("risk spec '" + std::string(spec) + "' expects " + std::to_string(n) +
                                  " parameter(s)");
    }
  };
  if (name == "cvar") {
    expect(1);
    return RiskMeasure::cvar(v[0]);
  }
  if (name == "erm") {
    expect(1);
    return RiskMeasure::entropic(v[0]);
  }
  if (name == "srm-power") {
    expect(1);
    return srm_power(v[0]);
  }
  if (name == "drm-power") {
    expect(1);
    return drm_power(v[0]);
  }
  if (name == "drm-dual") {
    expect(1);
    return drm_dual(v[0]);
  }
  if (name == "ce-power") {
    expect(1);
    return ce_power(v[0], bounds);
  }
  if (name == "rdeu-power") {
    expect(2);
    return rdeu_power(v[0], v[1], bounds);
  }
  throw std::invalid_argument("unknown risk measure '" + std::string(name) + "'");
}

}  // namespace riskbounds
