#pragma once

#include <stdexcept>
#include <string>

namespace riskbounds {

/// A (risk measure, distance, method) triple for which no valid bound is known.
class UnsupportedCombination : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A Lipschitz constant that is infinite or undefined for the supplied functions.
class NonFiniteConstant : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-range input data (samples, files, instances).
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace riskbounds
