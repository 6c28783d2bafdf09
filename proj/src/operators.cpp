#include "riskbounds/operators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace riskbounds {

namespace {

// Masses below this are rounding residue from a boundary split.
constexpr double kZeroMass = 1e-14;

void require_radius(double c) {
  if (!(c >= 0.0) || !std::isfinite(c)) throw std::invalid_argument("ball radius must be finite and >= 0");
}

}  // namespace

BallSpec::BallSpec(Distance d, double radius) : distance(d), c(radius) { require_radius(radius); }

DiscreteDistribution pos_sup(const DiscreteDistribution& d, double c) {
  require_radius(c);
  const SupportBounds& bounds = d.bounds();
  if (c == 0.0) return d;
  if (c >= 1.0) return DiscreteDistribution::dirac(bounds.b(), bounds);
  const auto atoms = d.atoms();
  const auto cum = d.cumulative();
  std::vector<Atom> out;
  out.reserve(atoms.size() + 1);
  // l is the first atom whose cumulative mass exceeds c; everything before it
  // is removed and atom l keeps only the excess.
  std::size_t l = 0;
  while (l < atoms.size() && cum[l] <= c) ++l;
  if (l < atoms.size()) {
    const double keep = cum[l] - c;
    if (keep > kZeroMass) out.push_back({atoms[l].x, keep});
    for (std::size_t i = l + 1; i < atoms.size(); ++i) out.push_back(atoms[i]);
  }
  out.push_back({bounds.b(), c});
  return DiscreteDistribution::from_sorted(std::move(out), bounds);
}

DiscreteDistribution neg_sup(const DiscreteDistribution& d, double c) {
  require_radius(c);
  const SupportBounds& bounds = d.bounds();
  if (c == 0.0) return d;
  if (c >= 1.0) return DiscreteDistribution::dirac(bounds.a(), bounds);
  const auto atoms = d.atoms();
  const auto cum = d.cumulative();
  const double keep_total = 1.0 - c;
  std::vector<Atom> out;
  out.reserve(atoms.size() + 1);
  out.push_back({bounds.a(), c});
  double kept = 0.0;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (cum[i] <= keep_total) {
      out.push_back(atoms[i]);
      kept = cum[i];
      continue;
    }
    const double part = keep_total - kept;
    if (part > kZeroMass) out.push_back({atoms[i].x, part});
    break;
  }
  return DiscreteDistribution::from_sorted(std::move(out), bounds);
}

DiscreteDistribution pos_w1(const DiscreteDistribution& d, double c, WaterFillTrace* trace) {
  require_radius(c);
  const SupportBounds& bounds = d.bounds();
  const double b = bounds.b();
  if (trace) *trace = WaterFillTrace{};
  if (c == 0.0) return d;
  const auto atoms = d.atoms();
  const auto cum = d.cumulative();
  double area = 0.0;
  for (std::size_t k = atoms.size(); k-- > 0;) {
    const double gain = atoms[k].p * (b - atoms[k].x);
    if (gain <= 0.0) continue;  // atom already sits at b
    area += gain;
    if (trace) trace->cumulative_areas.push_back(area);
    if (area < c) continue;
    // Water level stops inside atom k: it keeps mass r, the rest moves to b.
    const double r = (area - c) / (b - atoms[k].x);
    const double below = k == 0 ? 0.0 : cum[k - 1];
    std::vector<Atom> out(atoms.begin(), atoms.begin() + static_cast<long>(k));
    if (r > kZeroMass) out.push_back({atoms[k].x, r});
    out.push_back({b, (1.0 - below) - r});
    if (trace) {
      trace->break_index = static_cast<long>(trace->cumulative_areas.size()) - 1;
      trace->residual_mass_or_level = r;
    }
    return DiscreteDistribution::from_sorted(std::move(out), bounds);
  }
  if (trace) {
    trace->saturated = true;
    trace->residual_mass_or_level = 0.0;
  }
  return DiscreteDistribution::dirac(b, bounds);
}

DiscreteDistribution neg_w1(const DiscreteDistribution& d, double c, WaterFillTrace* trace) {
  require_radius(c);
  const SupportBounds& bounds = d.bounds();
  const double a = bounds.a();
  if (trace) *trace = WaterFillTrace{};
  if (c == 0.0) return d;
  const auto atoms = d.atoms();
  const auto cum = d.cumulative();
  const std::size_t m = atoms.size();
  // area holds the integral of (1 - F) from x_{k+1} to b; each step extends it
  // down to x_k (x_{-1} = a, where F = 0).
  double area = 0.0;
  for (std::size_t j = m; j-- > 0;) {
    const long k = static_cast<long>(j) - 1;
    const double left = k >= 0 ? atoms[static_cast<std::size_t>(k)].x : a;
    const double tail = k >= 0 ? 1.0 - cum[static_cast<std::size_t>(k)] : 1.0;
    const double right = atoms[j].x;
    const double next = area + tail * (right - left);
    if (trace) trace->cumulative_areas.push_back(next);
    if (next < c) {
      area = next;
      continue;
    }
    // Level L in [left, right] with integral of (1 - F) over [L, b] equal to c.
    double level = right - (c - area) / tail;
    level = std::max(level, left);
    std::vector<Atom> out(atoms.begin(), atoms.begin() + (k + 1));
    out.push_back({level, tail});
    if (trace) {
      trace->break_index = static_cast<long>(trace->cumulative_areas.size()) - 1;
      trace->residual_mass_or_level = level;
    }
    return DiscreteDistribution::from_sorted(std::move(out), bounds);
  }
  if (trace) {
    trace->saturated = true;
    trace->residual_mass_or_level = a;
  }
  return DiscreteDistribution::dirac(a, bounds);
}

DiscreteDistribution extreme(const DiscreteDistribution& d, const BallSpec& ball, Side side) {
  if (ball.distance == Distance::Supremum) {
    return side == Side::Upper ? pos_sup(d, ball.c) : neg_sup(d, ball.c);
  }
  return side == Side::Upper ? pos_w1(d, ball.c) : neg_w1(d, ball.c);
}

}  // namespace riskbounds
