#pragma once

#include <cstddef>
#include <string_view>

#include "riskbounds/distribution.hpp"

namespace riskbounds {

enum class RadiusRule { DKW, WassersteinFact22, ScaledDKW };

std::string_view to_string(RadiusRule r);
/// Accepts dkw, fact22, scaled-dkw.
RadiusRule parse_radius_rule(std::string_view s);

/// Two-sided DKW radius sqrt(log(2/delta) / (2n)) for the supremum distance.
double dkw_radius(std::size_t n, double delta);

/// Bounded-support Wasserstein-1 radius
///   256 (b-a)/sqrt(n) + 8 (b-a) sqrt(e log(1/delta) / n),
/// clamped to the W1 diameter b-a. Valid for n >= log(1/delta).
double w1_radius(std::size_t n, double delta, const SupportBounds& bounds);

/// (b-a) times the DKW radius; a valid W1 radius since ||F-G||_1 <= (b-a)||F-G||_inf.
double scaled_dkw_radius(std::size_t n, double delta, const SupportBounds& bounds);

/// The distance the rule's radius is valid for.
Distance natural_distance(RadiusRule r);

/// Radius for the rule; throws UnsupportedCombination when the rule does not
/// bound the requested distance.
double radius(RadiusRule r, Distance distance, std::size_t n, double delta, const SupportBounds& bounds);

/// Default rule per distance: DKW for supremum, ScaledDKW for W1.
RadiusRule default_rule(Distance distance);

}  // namespace riskbounds
