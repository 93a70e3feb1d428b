#pragma once

namespace fusionkit {

/// Numerical tolerances shared by the character engine and the algebra
/// builders. `eq` bounds value equality of class functions and reals,
/// `integral` bounds the distance of a multiplicity or degree to the nearest
/// integer before it is rounded.
struct Tolerances {
  double eq = 1e-8;
  double integral = 1e-6;
};

}  // namespace fusionkit
