#include "riskbounds/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "riskbounds/error.hpp"

namespace riskbounds {

namespace {

constexpr double kRenormTolerance = 1e-9;

// Walks the union of both atom sets in increasing order, calling
// fn(x, F1(x), F2(x)) at every merged atom.
template <typename Fn>
void for_each_merged(const DiscreteDistribution& d1, const DiscreteDistribution& d2, Fn&& fn) {
  const auto a1 = d1.atoms();
  const auto a2 = d2.atoms();
  const auto c1 = d1.cumulative();
  const auto c2 = d2.cumulative();
  std::size_t i = 0, j = 0;
  double f1 = 0.0, f2 = 0.0;
  while (i < a1.size() || j < a2.size()) {
    double x;
    if (j == a2.size() || (i < a1.size() && a1[i].x < a2[j].x)) {
      x = a1[i].x;
      f1 = c1[i++];
    } else if (i == a1.size() || a2[j].x < a1[i].x) {
      x = a2[j].x;
      f2 = c2[j++];
    } else {
      x = a1[i].x;
      f1 = c1[i++];
      f2 = c2[j++];
    }
    fn(x, f1, f2);
  }
}

void require_same_bounds(const DiscreteDistribution& d1, const DiscreteDistribution& d2) {
  if (!(d1.bounds() == d2.bounds())) {
    throw std::invalid_argument("distributions have different support bounds");
  }
}

}  // namespace

SupportBounds::SupportBounds(double a, double b) : a_(a), b_(b) {
  if (!std::isfinite(a) || !std::isfinite(b) || !(a < b)) {
    throw std::invalid_argument("support bounds require finite a < b");
  }
}

std::string_view to_string(Distance d) {
  return d == Distance::Supremum ? "sup" : "w1";
}

Distance parse_distance(std::string_view s) {
  if (s == "sup" || s == "supremum" || s == "inf") return Distance::Supremum;
  if (s == "w1" || s == "wasserstein" || s == "wasserstein1") return Distance::Wasserstein1;
  throw std::invalid_argument("unknown distance '" + std::string(s) + "' (expected sup|w1)");
}

DiscreteDistribution::DiscreteDistribution(std::vector<Atom> atoms, SupportBounds bounds)
    : DiscreteDistribution(Sorted{},
                           [&] {
                             std::stable_sort(atoms.begin(), atoms.end(),
                                              [](const Atom& l, const Atom& r) { return l.x < r.x; });
                             return std::move(atoms);
                           }(),
                           bounds) {}

DiscreteDistribution DiscreteDistribution::from_sorted(std::vector<Atom> atoms, SupportBounds bounds) {
  return DiscreteDistribution(Sorted{}, std::move(atoms), bounds);
}

DiscreteDistribution DiscreteDistribution::dirac(double x, SupportBounds bounds) {
  return DiscreteDistribution(Sorted{}, {{x, 1.0}}, bounds);
}

DiscreteDistribution::DiscreteDistribution(Sorted, std::vector<Atom> atoms, SupportBounds bounds)
    : bounds_(bounds) {
  // Validate and coalesce in place; w counts the atoms kept so far.
  double total = 0.0;
  double prev_x = -std::numeric_limits<double>::infinity();
  std::size_t w = 0;
  for (const Atom& at : atoms) {
    if (!std::isfinite(at.x) || !std::isfinite(at.p)) {
      throw std::invalid_argument("atom with non-finite location or mass");
    }
    if (!bounds_.contains(at.x)) {
      throw std::invalid_argument("atom at " + std::to_string(at.x) + " lies outside [" +
                                  std::to_string(bounds_.a()) + ", " + std::to_string(bounds_.b()) + "]");
    }
    if (at.p < 0.0) throw std::invalid_argument("negative atom mass");
    if (at.x < prev_x) throw std::invalid_argument("atoms are not sorted");
    prev_x = at.x;
    total += at.p;
    if (at.p == 0.0) continue;
    if (w > 0 && atoms[w - 1].x == at.x) {
      atoms[w - 1].p += at.p;
    } else {
      atoms[w++] = at;
    }
  }
  atoms.resize(w);
  atoms_ = std::move(atoms);
  if (atoms_.empty()) throw std::invalid_argument("distribution has no mass");
  if (std::abs(total - 1.0) > kRenormTolerance) {
    throw std::invalid_argument("atom masses sum to " + std::to_string(total) + ", not 1");
  }
  cum_.resize(atoms_.size());
  double run = 0.0;
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    atoms_[i].p /= total;
    run += atoms_[i].p;
    cum_[i] = std::min(run, 1.0);
  }
  cum_.back() = 1.0;
}

double DiscreteDistribution::cdf(double x) const noexcept {
  auto it = std::upper_bound(atoms_.begin(), atoms_.end(), x,
                             [](double v, const Atom& at) { return v < at.x; });
  if (it == atoms_.begin()) return 0.0;
  return cum_[static_cast<std::size_t>(it - atoms_.begin()) - 1];
}

double DiscreteDistribution::quantile(double y) const {
  if (!(y > 0.0 && y <= 1.0)) {
    throw std::domain_error("quantile level must lie in (0, 1]");
  }
  auto it = std::lower_bound(cum_.begin(), cum_.end(), y);
  if (it == cum_.end()) return atoms_.back().x;
  return atoms_[static_cast<std::size_t>(it - cum_.begin())].x;
}

double DiscreteDistribution::quantile_or_lower(double y) const {
  if (y <= 0.0) return bounds_.a();
  return quantile(std::min(y, 1.0));
}

double DiscreteDistribution::mean() const noexcept {
  double m = 0.0;
  for (const Atom& at : atoms_) m += at.p * at.x;
  return m;
}

DiscreteDistribution DiscreteDistribution::shifted(double t) const {
  std::vector<Atom> out(atoms_);
  for (Atom& at : out) at.x += t;
  return from_sorted(std::move(out), SupportBounds(bounds_.a() + t, bounds_.b() + t));
}

DiscreteDistribution from_samples(std::span<const double> samples, SupportBounds bounds) {
  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  return from_sorted_samples(sorted, bounds);
}

DiscreteDistribution from_sorted_samples(std::span<const double> sorted, SupportBounds bounds) {
  if (sorted.empty()) throw DataError("cannot build an empirical distribution from zero samples");
  const double mass = 1.0 / static_cast<double>(sorted.size());
  std::vector<Atom> atoms;
  atoms.reserve(sorted.size());
  for (double x : sorted) {
    if (!std::isfinite(x) || !bounds.contains(x)) {
      throw DataError("sample " + std::to_string(x) + " lies outside [" + std::to_string(bounds.a()) +
                      ", " + std::to_string(bounds.b()) + "]");
    }
    if (!atoms.empty() && atoms.back().x == x) {
      atoms.back().p += mass;
    } else {
      atoms.push_back({x, mass});
    }
  }
  return DiscreteDistribution::from_sorted(std::move(atoms), bounds);
}

double distance(const DiscreteDistribution& d1, const DiscreteDistribution& d2, Distance kind) {
  require_same_bounds(d1, d2);
  if (kind == Distance::Supremum) {
    double sup = 0.0;
    for_each_merged(d1, d2, [&](double, double f1, double f2) { sup = std::max(sup, std::abs(f1 - f2)); });
    return sup;
  }
  double area = 0.0;
  double prev_x = 0.0, prev_gap = 0.0;
  bool first = true;
  for_each_merged(d1, d2, [&](double x, double f1, double f2) {
    if (!first) area += prev_gap * (x - prev_x);
    first = false;
    prev_x = x;
    prev_gap = std::abs(f1 - f2);
  });
  return area;
}

bool dominates(const DiscreteDistribution& d1, const DiscreteDistribution& d2, double tol) {
  require_same_bounds(d1, d2);
  bool ok = true;
  for_each_merged(d1, d2, [&](double, double f1, double f2) {
    if (f1 < f2 - tol) ok = false;
  });
  return ok;
}

}  // namespace riskbounds
