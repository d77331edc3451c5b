#ifndef CHEB3_ERRORS_HPP
#define CHEB3_ERRORS_HPP

#include <stdexcept>

namespace cheb3 {

struct UnsupportedRank : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Input to the invariant-side reduction is not constant on Weyl orbits.
struct NonInvariantInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NonDominantIndex : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A derived generating-function component disagrees with the bundled
// reference form at a point where exact agreement is mandatory.
struct ReductionMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Orbit-trace normalization by the stabilizer order left a remainder.
struct NonIntegralNormalization : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A numerator cell failed the invariance check during reduction.
struct NonInvariantCoefficient : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace cheb3

#endif
