// Square-class decompositions of integral twist points, the Legendre-symbol
// local-solubility systems they satisfy, four-square splittings behind the
// square-family analysis, and exceptional-point detection (simultaneous-Pell
// and eta-norm bookkeeping).

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "twistscan/bigint.hpp"
#include "twistscan/twists.hpp"

namespace twistscan::descent {

// x = g xt, D = g Dt, y = g^2 yt and
//   xt = G1 y1^2, xt - A Dt = G2 y2^2, xt - B Dt = G3 y3^2
// with G1 G2 G3 = g (d1 d2 d3)^2, d1 | B-A, d2 | B, d3 | A.
struct FullTorsionDecomp {
  int64_t g, xt, Dt, yt;
  int64_t G[3];
  int64_t y[3];
  int64_t d1, d2, d3;
  bool compact;  // x < B D: G2, G3 < 0
};
// Requires D > 0 square-free and y != 0 (non-torsion).
FullTorsionDecomp full2_decompose(int64_t x, int64_t y,
                                  const twists::TwistCurve& curve);

struct RecoverResult {
  bool compact = false;      // negative third factor
  bool valid_point = false;  // (x, D, y) reconstructed
  int64_t x = 0, D = 0, y = 0;
};
// Left inverse of full2_decompose on its image: from (G_i y_i^2, G_j y_j^2)
// for an index pair i < j; nullopt when the implied Dt is not a positive
// integer.
std::optional<RecoverResult> full2_recover(int64_t vi, int64_t vj, int i,
                                           int j, int64_t A, int64_t B);

struct RMatrix {
  int64_t R13, R12, R21, R23, R32, R31;
};
// The table R13 = -A Dt g2, R12 = -B Dt g3, R21 = -(B-A) Dt g3,
// R23 = A Dt g1, R32 = B Dt g1, R31 = (B-A) Dt g2.
RMatrix rmatrix_full(int64_t A, int64_t B, int64_t Dt, int64_t gamma1,
                     int64_t gamma2, int64_t gamma3);

// gamma_i = gcd(A B (B-A), G_i) and n_i = G_i / gamma_i for a decomposition
// on the unbounded branch.
struct TripleClasses {
  int64_t gamma1, gamma2, gamma3;
  int64_t n1, n2, n3;
  RMatrix R;
};
TripleClasses triple_classes(const FullTorsionDecomp& d, int64_t A, int64_t B);

// True iff all six symbol families are 1 at every prime of each n_i.
bool local_conditions_full(int64_t n1, int64_t n2, int64_t n3,
                           const RMatrix& R);
// The 4^-omega product; equals local_conditions_full as 0/1.
Rat indicator_triple(int64_t n1, int64_t n2, int64_t n3, const RMatrix& R);

// Partial model: xt = g1 delta y1^2, xt^2 + A Dt xt + B Dt^2 = g2 delta y2^2,
// delta = gcd(xt, ...) | B, g1 g2 = g.
struct PartialDecomp {
  int64_t g, xt, Dt, yt;
  int64_t delta, g1, y1, g2, y2;
  bool compact;  // x below the largest real root: g1, g2 < 0
};
PartialDecomp partial_decompose(int64_t x, int64_t y,
                                const twists::TwistCurve& curve);

// The two-line system: (R12 n2 / p) = 1 at p | n1; at p | n2 the split
// condition (A^2-4B / p) = 1 plus, when (B/p) = 1, the Artin-symbol product
// (alpha mod p / p)(R21 n1 / p) = 1 with alpha = (-A + sqrt(A^2-4B))/2.
bool local_conditions_partial(const PartialDecomp& d, int64_t A, int64_t B);

// u - a = g1 y1^2, u + a = g2 y2^2, u - b = g3 y3^2, u + b = g4 y4^2;
// g1 g2 g3 g4 = D v^2 with v | 2ab(b^2 - a^2), D square-free.
struct FourSquareDecomp {
  int64_t g[4];
  int64_t y[4];
  int64_t u, a, b;
  int64_t D, v;
};
// Requires u > b > a > 0, gcd(a, b) = 1; nullopt when a factor vanishes.
std::optional<FourSquareDecomp> four_square_decompose(int64_t u, int64_t a,
                                                      int64_t b);
// The twelve displayed symbol conditions at primes of n_i.
bool local_conditions_4(const FourSquareDecomp& d);

// Exceptional points over a scanned corpus:
//   first kind  (full):    xBD and (x-AD)(B-A)D squares, gcd(x,D) = D, x > BD
//   second kind (full):    A, B squares and xD a square, x > BD
//   partial kind:          xB a square, x > 0
struct ExceptionalPoint {
  enum Kind { FirstKind, SecondKind, PartialKind } kind;
  int64_t D, x, y;
};
std::vector<ExceptionalPoint> exceptional_scan(const twists::Corpus& corpus);

// eta-norm candidates for the partial-model exceptional equation
// eta eta' = Dt^2 (A^2 - 4B) over Q(sqrt B): integer divisors when B is a
// square, elements of Z[sqrt B] up to the height otherwise (B > 0).
struct EtaCandidate {
  Int s, t;  // eta = s + t sqrt(B); t = 0 in the rational case
};
std::vector<EtaCandidate> eta_candidates(int64_t A, int64_t B, int64_t Dt,
                                         const Int& height);

// Compact-component catalogue: all bounded-branch points with Dt <= dt_cap
// from the corpus (exact small enumeration per the kappa-policy caps).
struct CompactEntry {
  int64_t D, x, y, g, Dt;
};
std::vector<CompactEntry> compact_catalogue(const twists::Corpus& corpus,
                                            int64_t dt_cap);

// Quadratic-reciprocity collapse (D_i/D_j)(D_j/D_i) = (-1)^((Di-1)/2 (Dj-1)/2)
// for odd positive coprime arguments.
int reciprocity_sign(int64_t Di, int64_t Dj);

}  // namespace twistscan::descent
