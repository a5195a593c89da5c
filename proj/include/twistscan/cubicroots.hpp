// Exact real-root isolation for integer polynomials with simple roots,
// via Sturm sequences over exact rationals. Used for the quartic resolvent
// root phi, integral-point scan floors, and compact-component tests.

#pragma once

#include <vector>

#include "twistscan/bigint.hpp"

namespace twistscan {

struct RootInterval {
  Rat lo, hi;  // lo <= root <= hi, hi - lo <= 2^-prec
};

// All real roots of sum coeffs[i] * T^i (degree >= 1, squarefree over Q),
// ascending, each isolated to width <= 2^-prec.
std::vector<RootInterval> isolate_real_roots(const std::vector<Int>& coeffs,
                                             unsigned prec);

// Smallest integer >= the least real root.
Int ceil_of_least_root(const std::vector<Int>& coeffs);

// Smallest integer >= the largest real root.
Int ceil_of_largest_root(const std::vector<Int>& coeffs);

// Exact sign of the polynomial at a rational point.
int poly_sign_at(const std::vector<Int>& coeffs, const Rat& x);

}  // namespace twistscan
