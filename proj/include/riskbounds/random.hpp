#pragma once

#include <cstdint>
#include <random>

namespace riskbounds {

/// One step of splitmix64; advances state.
std::uint64_t splitmix64(std::uint64_t& state) noexcept;

/// Independent seed for stream `index` derived from a base seed.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) noexcept;

/// mt19937_64 with hand-written variate transforms, so a seed yields the same
/// stream under every standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }
  /// Uniform on [0, 1) with 53 random bits.
  double uniform();
  /// Uniform on (0, 1).
  double uniform_open();
  double normal();
  /// Gamma(shape, 1), shape > 0.
  double gamma(double shape);
  /// Beta(A, B) on [0, 1].
  double beta(double A, double B);

 private:
  std::mt19937_64 eng_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace riskbounds
