#pragma once

#include <span>
#include <string_view>
#include <vector>

namespace riskbounds {

/// Closed support interval [a, b] shared by every distribution in a computation.
class SupportBounds {
 public:
  SupportBounds(double a, double b);

  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }
  double width() const noexcept { return b_ - a_; }
  bool contains(double x) const noexcept { return x >= a_ && x <= b_; }

  friend bool operator==(const SupportBounds&, const SupportBounds&) = default;

 private:
  double a_;
  double b_;
};

struct Atom {
  double x;
  double p;

  friend bool operator==(const Atom&, const Atom&) = default;
};

enum class Distance { Supremum, Wasserstein1 };

std::string_view to_string(Distance d);
Distance parse_distance(std::string_view s);

/// Finitely supported distribution on [a, b].
///
/// Atoms are kept strictly increasing in x with strictly positive mass; the
/// cumulative masses are cached so that cdf and quantile are O(log m).
/// Instances are immutable after construction.
class DiscreteDistribution {
 public:
  /// Accepts atoms in any order. Equal x values are coalesced, zero masses are
  /// dropped and the total is renormalised when it is within 1e-9 of one.
  DiscreteDistribution(std::vector<Atom> atoms, SupportBounds bounds);

  /// Same contract, but the caller guarantees nondecreasing x.
  static DiscreteDistribution from_sorted(std::vector<Atom> atoms, SupportBounds bounds);
  static DiscreteDistribution dirac(double x, SupportBounds bounds);

  std::span<const Atom> atoms() const noexcept { return atoms_; }
  /// cumulative()[i] is the mass of atoms 0..i; the last entry is exactly 1.
  std::span<const double> cumulative() const noexcept { return cum_; }
  const SupportBounds& bounds() const noexcept { return bounds_; }
  std::size_t size() const noexcept { return atoms_.size(); }

  /// Right-continuous CDF.
  double cdf(double x) const noexcept;
  /// inf{x : F(x) >= y} for y in (0, 1]; throws for y outside that range.
  double quantile(double y) const;
  /// Quantile with the convention F^{-1}(y) = a for y <= 0.
  double quantile_or_lower(double y) const;
  double mean() const noexcept;

  /// Distribution of X + t with bounds shifted accordingly.
  DiscreteDistribution shifted(double t) const;

  friend bool operator==(const DiscreteDistribution&, const DiscreteDistribution&) = default;

 private:
  struct Sorted {};
  DiscreteDistribution(Sorted, std::vector<Atom> atoms, SupportBounds bounds);

  std::vector<Atom> atoms_;
  std::vector<double> cum_;
  SupportBounds bounds_;
};

/// Empirical distribution of the samples; every sample must lie in bounds.
DiscreteDistribution from_samples(std::span<const double> samples, SupportBounds bounds);

/// Uniform-mass EDF from samples already sorted ascending.
DiscreteDistribution from_sorted_samples(std::span<const double> sorted, SupportBounds bounds);

/// Supremum or Wasserstein-1 distance between two CDFs on the same bounds.
double distance(const DiscreteDistribution& d1, const DiscreteDistribution& d2, Distance kind);

/// True iff F1(x) >= F2(x) - tol at every merged atom, i.e. d2 is the riskier
/// loss: d2 first-order stochastically dominates d1.
bool dominates(const DiscreteDistribution& d1, const DiscreteDistribution& d2,
               double tol = 1e-12);

}  // namespace riskbounds
