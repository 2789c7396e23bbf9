#pragma once

#include "pwc/pwcmap.hpp"

namespace pwc::bench {

inline DeltaFamily family_a() {
  return validate_family(
      PiecewiseAffineMap({0, Scalar::rational(2, 3), 1}, Scalar::rational(1, 2),
                         {Scalar::rational(2, 3), Scalar::rational(-1, 3)}),
      2);
}

/// The golden Sturmian parameter -2/3 + (1/2) sum_{i < terms} w_i 2^-i with
/// w_i = ceil((i+1) psi) - ceil(i psi), psi = (3 - sqrt 5)/2; certified to
/// depth 141 for terms = 200.
inline Scalar deep_delta(unsigned terms = 200) {
  const Scalar psi = Scalar::quadratic(mpq_class(3, 2), mpq_class(-1, 2), 5);
  auto ceil_of = [&](long i) { return -(Scalar(-i) * psi).floor_integer(); };
  Scalar sum(0), weight(1);
  for (unsigned i = 0; i < terms; ++i) {
    if (ceil_of(i + 1) - ceil_of(i) == 1) sum += weight;
    weight /= Scalar(2);
  }
  return Scalar::rational(-2, 3) + sum / Scalar(2);
}

}  // namespace pwc::bench
