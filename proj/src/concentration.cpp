#include "riskbounds/concentration.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "riskbounds/error.hpp"

namespace riskbounds {

namespace {

void check(std::size_t n, double delta) {
  if (n < 1) throw std::invalid_argument("radius requires n >= 1");
  if (!(delta > 0.0 && delta <= 2.0)) throw std::invalid_argument("radius requires delta in (0, 2]");
}

}  // namespace

std::string_view to_string(RadiusRule r) {
  switch (r) {
    case RadiusRule::DKW: return "dkw";
    case RadiusRule::WassersteinFact22: return "fact22";
    case RadiusRule::ScaledDKW: return "scaled-dkw";
  }
  return "?";
}

RadiusRule parse_radius_rule(std::string_view s) {
  if (s == "dkw") return RadiusRule::DKW;
  if (s == "fact22") return RadiusRule::WassersteinFact22;
  if (s == "scaled-dkw") return RadiusRule::ScaledDKW;
  throw std::invalid_argument("unknown radius rule '" + std::string(s) + "' (dkw|fact22|scaled-dkw)");
}

double dkw_radius(std::size_t n, double delta) {
  check(n, delta);
  return std::sqrt(std::log(2.0 / delta) / (2.0 * static_cast<double>(n)));
}

double w1_radius(std::size_t n, double delta, const SupportBounds& bounds) {
  if (!(delta > 0.0 && delta <= 1.0)) throw std::invalid_argument("W1 radius requires delta in (0, 1]");
  check(n, delta);
  const double nn = static_cast<double>(n);
  const double l = std::log(1.0 / delta);
  if (nn < l) throw std::invalid_argument("W1 radius requires n >= log(1/delta)");
  const double w = bounds.width();
  const double r = 256.0 * w / std::sqrt(nn) + 8.0 * w * std::sqrt(std::numbers::e * l / nn);
  return std::min(r, w);
}

double scaled_dkw_radius(std::size_t n, double delta, const SupportBounds& bounds) {
  return bounds.width() * dkw_radius(n, delta);
}

Distance natural_distance(RadiusRule r) {
  return r == RadiusRule::DKW ? Distance::Supremum : Distance::Wasserstein1;
}

double radius(RadiusRule r, Distance distance, std::size_t n, double delta, const SupportBounds& bounds) {
  if (natural_distance(r) != distance) {
    throw UnsupportedCombination("radius rule '" + std::string(to_string(r)) + "' does not bound the " +
                                 std::string(to_string(distance)) + " distance");
  }
  switch (r) {
    case RadiusRule::DKW: return dkw_radius(n, delta);
    case RadiusRule::WassersteinFact22: return w1_radius(n, delta, bounds);
    case RadiusRule::ScaledDKW: return scaled_dkw_radius(n, delta, bounds);
  }
  return 0.0;
}

RadiusRule default_rule(Distance distance) {
  return distance == Distance::Supremum ? RadiusRule::DKW : RadiusRule::ScaledDKW;
}

}  // namespace riskbounds
