// Exact counting of integral points on the cubic surface C(x1,x2) = x3^2 x4
// with gcd(x1,x2,x4) = 1, x3 x4 != 0, |xi| <= B: a direct brute counter and
// the lattice-descent counter driven by congruence classes mod h2 u^2, plus
// the per-x3 lower-bound constructor and growth tables.

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "twistscan/arith.hpp"

namespace twistscan::surface {

struct Lattice2 {
  // Row basis; |b1x * b2y - b1y * b2x| = det.
  int64_t b1x, b1y, b2x, b2y;
  int64_t det() const;
};

struct Solution {
  int64_t x1, x2, x3, x4;
};

struct BruteResult {
  int64_t count = 0;
  std::vector<Solution> solutions;  // filled when requested, x3 > 0 half
};
// Exact N{\deg}(B) by direct enumeration; any separable C.
BruteResult brute_count(const arith::BinaryCubic& C, int64_t B,
                        bool keep_solutions = false);

// Shear x2 <- x2 + b x1 with |b| minimal making C(1, b) != 0.
std::pair<arith::BinaryCubic, int64_t> normalize_cubic(
    const arith::BinaryCubic& C);

// Lattices covering the coprime solutions of C(y1, y2) = 0 (mod d), each of
// determinant d; pairwise disjoint on coprime pairs, so the descent counter
// can sum over them. At most mult_f(d) lattices.
std::vector<Lattice2> lattice_cover(const arith::BinaryCubic& C, int64_t d);

// Exact N(B) via the gcd descent C(y1,y2) = h2 u^2 v; equals brute_count.
int64_t count_via_lattices(const arith::BinaryCubic& C, int64_t B);

// Gauss-reduced shortest vector; sup-norm^2 <= 4 det.
std::pair<int64_t, int64_t> minkowski_small(const Lattice2& L);

// One solution per admissible (x3, alpha): x3 in [1, B] coprime to disc(C),
// alpha a root of C(x,1) mod x3^2, short-vector solution inside the box.
std::vector<Solution> lower_bound_construct(const arith::BinaryCubic& C,
                                            int64_t B);

struct GrowthRow {
  int64_t B;
  int64_t count;
  std::string per_B;       // count / B
  std::string per_B_logs;  // count / (B (log B)^max(lambda,2))
};
std::vector<GrowthRow> growth_table(const arith::BinaryCubic& C,
                                    const std::vector<int64_t>& grid);

}  // namespace twistscan::surface
