// Quadratic twist families in three models and their integral points:
//   short:   y^2 = x^3 + A D^2 x + B D^3
//   full:    y^2 = x (x - A D) (x - B D),        0 < A < B, gcd(A, B) = 1
//   partial: y^2 = x (x^2 + A D x + B D^2),      A^2 - 4B not a square
// Scans are exhaustive up to the configured x bound: the short model walks x
// directly (quadratic-residue filtered); the factored models enumerate the
// square-class candidates x = g * c * y1^2 forced by the divisor structure
// and verify every candidate on the curve, which reaches x_max = 10^8 cheaply.
// Every table carries the "complete up to x_max" caveat rather than an
// unconditional claim.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "twistscan/arith.hpp"
#include "twistscan/bigint.hpp"

namespace twistscan::twists {

enum class Model { Short, Full, Partial };

std::string model_name(Model m);
std::optional<Model> model_from_name(const std::string& s);

struct TwistCurve {
  Model model = Model::Short;
  int64_t A = 0, B = 0, D = 1;

  void validate() const;  // throws std::invalid_argument on bad families
  __int128 rhs(int64_t x) const;
  bool on_curve(int64_t x, int64_t y) const;
  // The binary cubic C with C(x, D) = rhs(x).
  arith::BinaryCubic homogenized() const;
};

struct PointRecord {
  int64_t x = 0, y = 0;
  bool torsion = false;  // y = 0
  bool compact = false;  // on the bounded real component
  bool operator==(const PointRecord& o) const {
    return x == o.x && y == o.y && torsion == o.torsion && compact == o.compact;
  }
};

struct TorsionClass {
  enum Kind { Irreducible, PartialTorsion, FullTorsion } kind;
  // PartialTorsion: x^3 + Ax + B = (x - r)(x^2 + q1 x + q0), quadratic irreducible
  int64_t r = 0, q1 = 0, q0 = 0;
  // FullTorsion: roots r1 < r2 < r3
  int64_t r1 = 0, r2 = 0, r3 = 0;
};
TorsionClass classify_torsion(int64_t A, int64_t B);

// All integral points with x between the least real root of the right side
// and x_max; both y signs, torsion flagged. Sorted by (x, y).
std::vector<PointRecord> integral_points(const TwistCurve& curve, int64_t x_max);
// Direct x-loop oracle (any model); x_max <= 2 * 10^9.
std::vector<PointRecord> integral_points_bruteforce(const TwistCurve& curve,
                                                    int64_t x_max);

struct GcdDecomp {
  int64_t g, xt, Dt, yt;  // x = g xt, D = g Dt, y = g^2 yt
};
GcdDecomp gcd_decompose(int64_t x, int64_t y, const TwistCurve& curve);

// Witness construction: D = beta * C(alpha, beta) square-free, d = D / beta,
// point (alpha d, d^2) on E_D. Keyed by D, first witness in the deterministic
// height-ordered enumeration kept.
struct Witness {
  int64_t x, y;
  int64_t alpha, beta;
};
std::map<int64_t, Witness> construct_points(int64_t A, int64_t B, int64_t N);

struct CurvePoints {
  int64_t D;
  std::vector<PointRecord> pts;
};

struct Corpus {
  Model model;
  int64_t A, B, N, x_max;
  std::vector<CurvePoints> curves;  // ascending D, both signs

  const std::vector<PointRecord>* find(int64_t D) const;
  int64_t nontorsion_count(int64_t D) const;  // #E*_D up to x_max
};

// Deterministic scan over all square-free |D| <= N (both signs). Negative D
// is scanned through the reflected positive-D family. When cache_path is
// non-empty, a complete cache is loaded (after validation) and partial caches
// are resumed; worker count never changes the output.
Corpus scan_family(Model model, int64_t A, int64_t B, int64_t N, int64_t x_max,
                   int threads = 1, const std::string& cache_path = "");

void save_corpus(const Corpus& corpus, const std::string& path);
Corpus load_corpus(const std::string& path);  // re-verifies every point

struct DensityRow {
  int64_t Nprime;
  int64_t nonempty;          // #{D in D(N'): E*_D != empty}
  int64_t total;             // #D(N')
  std::string sqrt_ref;      // N'^(1/2)
  std::string log_ref;       // N' / (log N')^kappa
  int64_t constructed = -1;  // distinct constructed |D| <= N' (optional)
};
std::vector<DensityRow> density_table(const Corpus& corpus,
                                      const std::vector<int64_t>& grid,
                                      const Rat& kappa, bool with_construct);

// Exact k-th moment (1/#D(N)) sum_D (#E*_D)^k over the corpus.
Rat moments(const Corpus& corpus, int k);

// The displayed Szpiro upper bound 6 + 2 log(16|4A^3+27B^2|)/log|D|,
// evaluated in fixed point with error well below 2^-32.
std::string szpiro_upper(int64_t A, int64_t B, int64_t D);

}  // namespace twistscan::twists
