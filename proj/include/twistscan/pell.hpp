// Generalized Pell equations a x^2 - b y^2 = u: base-solution enumeration in
// Z[sqrt(ab)], complete solution lists up to a bound via the fundamental-unit
// orbit, simultaneous systems sharing the middle variable, and norm-equation
// element enumeration used by the exceptional-point bookkeeping.
//
// All membership decisions are exact integer arithmetic; no real
// approximations.

#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "twistscan/bigint.hpp"

namespace twistscan::pell {

struct QuadValue {
  Int s, t;  // the element s + t sqrt(d); d from context
};

// Orbit representatives alpha = a x + sqrt(ab) y of a x^2 - b y^2 = u under
// the norm-one fundamental unit: 1 <= alpha < eps_plus, |conjugate| <= |a u|.
// Complete via bounded search. Requires ab non-square (the square case
// factors rationally, see enumerate_solutions), u != 0.
std::vector<QuadValue> base_solutions(int64_t a, int64_t b, const Int& u);

// All positive solutions (x, y) with x <= bound, ascending in x. Complete:
// matches exhaustive search. Square ab handled by rational factorization.
std::vector<std::pair<Int, Int>> enumerate_solutions(int64_t a, int64_t b,
                                                     const Int& u,
                                                     const Int& bound);

// Positive (x, y, z) with a x^2 - b y^2 = u and c y^2 - d z^2 = v, the y
// shared; complete up to bound on x (first equation) and y (second).
std::vector<std::array<Int, 3>> simultaneous_solve(int64_t a, int64_t b,
                                                   const Int& u, int64_t c,
                                                   int64_t d, const Int& v,
                                                   const Int& bound);

// Elements s + t sqrt(d) with s^2 - d t^2 = m and 1 < s + t sqrt(d) <= height;
// d >= 2 non-square. Complete up to the height.
std::vector<QuadValue> norm_equation_elements(int64_t d, const Int& m,
                                              const Int& height);

}  // namespace twistscan::pell
