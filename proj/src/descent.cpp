#include "twistscan/descent.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "twistscan/arith.hpp"
#include "twistscan/pell.hpp"

namespace twistscan::descent {

using arith::factorize_u64;
using arith::jacobi_i64;
using twists::Model;
using twists::TwistCurve;

namespace {

// square-free decomposition of a non-zero int64: n = s * f^2
std::pair<int64_t, int64_t> sqfree_i64(int64_t n) {
  auto d = arith::squarefree_part(Int(n));
  return {d.s.to_int64(), d.f.to_int64()};
}

}  // namespace

FullTorsionDecomp full2_decompose(int64_t x, int64_t y,
                                  const TwistCurve& curve) {
  curve.validate();
  if (curve.model != Model::Full)
    throw std::invalid_argument("full2_decompose: full model required");
  if (curve.D <= 0)
    throw std::invalid_argument("full2_decompose: D > 0 required");
  if (y == 0) throw std::invalid_argument("full2_decompose: torsion point");
  if (!curve.on_curve(x, y))
    throw std::invalid_argument("full2_decompose: point not on curve");
  int64_t A = curve.A, B = curve.B, D = curve.D;
  FullTorsionDecomp d;
  d.g = std::gcd(std::llabs(x), D);
  d.xt = x / d.g;
  d.Dt = D / d.g;
  if (y % (d.g * d.g) != 0)
    throw std::logic_error("full2_decompose: g^2 does not divide y");
  d.yt = y / (d.g * d.g);
  int64_t f[3] = {d.xt, d.xt - A * d.Dt, d.xt - B * d.Dt};
  for (int i = 0; i < 3; ++i) {
    if (f[i] == 0) throw std::logic_error("full2_decompose: zero factor");
    auto [s, sq] = sqfree_i64(f[i]);
    d.G[i] = s;
    d.y[i] = sq;
  }
  d.compact = x < B * D;
  d.d1 = std::gcd(std::llabs(d.G[1]), std::llabs(d.G[2]));
  d.d2 = std::gcd(std::llabs(d.G[2]), std::llabs(d.G[0]));
  d.d3 = std::gcd(std::llabs(d.G[0]), std::llabs(d.G[1]));
  // invariants from the factorization
  if ((B - A) % d.d1 || B % d.d2 || A % d.d3)
    throw std::logic_error("full2_decompose: delta divisibility failed");
  __int128 prod = (__int128)d.G[0] * d.G[1] * d.G[2];
  __int128 want = (__int128)d.g * d.d1 * d.d1 * d.d2 * d.d2 * d.d3 * d.d3;
  if (prod != want)
    throw std::logic_error("full2_decompose: G1 G2 G3 != g (d1 d2 d3)^2");
  if ((__int128)d.G[0] * d.y[0] * d.y[0] - (__int128)d.G[1] * d.y[1] * d.y[1] !=
      (__int128)A * d.Dt)
    throw std::logic_error("full2_decompose: first conic identity failed");
  if ((__int128)d.G[0] * d.y[0] * d.y[0] - (__int128)d.G[2] * d.y[2] * d.y[2] !=
      (__int128)B * d.Dt)
    throw std::logic_error("full2_decompose: second conic identity failed");
  if ((__int128)d.G[1] * d.y[1] * d.y[1] - (__int128)d.G[2] * d.y[2] * d.y[2] !=
      (__int128)(B - A) * d.Dt)
    throw std::logic_error("full2_decompose: third conic identity failed");
  return d;
}

std::optional<RecoverResult> full2_recover(int64_t vi, int64_t vj, int i,
                                           int j, int64_t A, int64_t B) {
  if (!(1 <= i && i < j && j <= 3))
    throw std::invalid_argument("full2_recover: need 1 <= i < j <= 3");
  int64_t coef = (i == 1 && j == 2) ? A : (i == 1 && j == 3) ? B : (B - A);
  int64_t diff = vi - vj;
  if (coef == 0 || diff % coef) return std::nullopt;
  int64_t Dt = diff / coef;
  if (Dt <= 0) return std::nullopt;
  // fill the three factor values
  int64_t f[4];  // 1-indexed
  f[i] = vi;
  f[j] = vj;
  if (i == 1) {
    f[2] = (j == 2) ? vj : f[1] - A * Dt;
    f[3] = (j == 3) ? vj : f[1] - B * Dt;
  } else {  // (i, j) = (2, 3)
    f[1] = vi + A * Dt;
  }
  RecoverResult r;
  if (f[1] <= 0 || f[2] == 0 || f[3] == 0) return std::nullopt;
  if (f[2] < 0 || f[3] < 0) r.compact = true;
  __int128 prod = (__int128)f[1] * f[2] * f[3];
  if (prod <= 0) {
    // x (x - AD)(x - BD) = y^2 needs a non-negative product: the pair only
    // marks a bounded-branch configuration, no point to reconstruct
    return r;
  }
  // g is the square-free part of G1 G2 G3
  int64_t G[4], yy[4];
  for (int k = 1; k <= 3; ++k) {
    auto [s, sq] = sqfree_i64(f[k]);
    G[k] = s;
    yy[k] = sq;
    if (yy[k] == 0) return std::nullopt;
  }
  __int128 Gprod = (__int128)G[1] * G[2] * G[3];
  if (Gprod <= 0) return r;
  auto [g, rest] = sqfree_i64((int64_t)Gprod);
  (void)rest;
  r.x = g * f[1];
  r.D = g * Dt;
  __int128 rhs = (__int128)r.x * (r.x - A * r.D) * (r.x - B * r.D);
  __int128 root;
  if (!arith::is_square_i128(rhs, &root)) return std::nullopt;
  r.y = (int64_t)root;
  r.valid_point = true;
  return r;
}

RMatrix rmatrix_full(int64_t A, int64_t B, int64_t Dt, int64_t gamma1,
                     int64_t gamma2, int64_t gamma3) {
  RMatrix R;
  R.R13 = -A * Dt * gamma2;
  R.R12 = -B * Dt * gamma3;
  R.R21 = -(B - A) * Dt * gamma3;
  R.R23 = A * Dt * gamma1;
  R.R32 = B * Dt * gamma1;
  R.R31 = (B - A) * Dt * gamma2;
  return R;
}

TripleClasses triple_classes(const FullTorsionDecomp& d, int64_t A, int64_t B) {
  if (d.compact)
    throw std::invalid_argument("triple_classes: unbounded branch required");
  int64_t mod = A * B * (B - A);
  TripleClasses t;
  t.gamma1 = std::gcd(std::llabs(mod), std::llabs(d.G[0]));
  t.gamma2 = std::gcd(std::llabs(mod), std::llabs(d.G[1]));
  t.gamma3 = std::gcd(std::llabs(mod), std::llabs(d.G[2]));
  t.n1 = d.G[0] / t.gamma1;
  t.n2 = d.G[1] / t.gamma2;
  t.n3 = d.G[2] / t.gamma3;
  t.R = rmatrix_full(A, B, d.Dt, t.gamma1, t.gamma2, t.gamma3);
  return t;
}

namespace {

void require_odd_sf(int64_t n, const char* who) {
  if (n < 1 || n % 2 == 0 || !arith::is_squarefree_u64((uint64_t)n))
    throw std::invalid_argument(std::string(who) +
                                ": n_i must be odd positive square-free");
}

int symbol_or_throw(int64_t top, int64_t p) {
  int s = jacobi_i64(top, (uint64_t)p);
  if (s == 0)
    throw std::invalid_argument("local conditions: shared factor in symbol");
  return s;
}

}  // namespace

bool local_conditions_full(int64_t n1, int64_t n2, int64_t n3,
                           const RMatrix& R) {
  require_odd_sf(n1, "local_conditions_full");
  require_odd_sf(n2, "local_conditions_full");
  require_odd_sf(n3, "local_conditions_full");
  for (auto& [p, e] : factorize_u64((uint64_t)n1)) {
    if (symbol_or_throw(R.R13 * n2, (int64_t)p) != 1) return false;
    if (symbol_or_throw(R.R12 * n3, (int64_t)p) != 1) return false;
  }
  for (auto& [p, e] : factorize_u64((uint64_t)n2)) {
    if (symbol_or_throw(R.R23 * n1, (int64_t)p) != 1) return false;
    if (symbol_or_throw(R.R21 * n3, (int64_t)p) != 1) return false;
  }
  for (auto& [p, e] : factorize_u64((uint64_t)n3)) {
    if (symbol_or_throw(R.R32 * n1, (int64_t)p) != 1) return false;
    if (symbol_or_throw(R.R31 * n2, (int64_t)p) != 1) return false;
  }
  return true;
}

Rat indicator_triple(int64_t n1, int64_t n2, int64_t n3, const RMatrix& R) {
  require_odd_sf(n1, "indicator_triple");
  require_odd_sf(n2, "indicator_triple");
  require_odd_sf(n3, "indicator_triple");
  Int num(1);
  int omega = 0;
  auto fold = [&](int64_t n, int64_t topA, int64_t topB) {
    for (auto& [p, e] : factorize_u64((uint64_t)n)) {
      ++omega;
      int sa = symbol_or_throw(topA, (int64_t)p);
      int sb = symbol_or_throw(topB, (int64_t)p);
      num *= Int((1 + sa) * (1 + sb));
      if (num.is_zero()) return;
    }
  };
  fold(n1, R.R13 * n2, R.R12 * n3);
  if (!num.is_zero()) fold(n2, R.R23 * n1, R.R21 * n3);
  if (!num.is_zero()) fold(n3, R.R32 * n1, R.R31 * n2);
  if (num.is_zero()) return Rat(Int(0));
  return Rat(num, Int::pow(Int(4), (uint64_t)omega));
}

PartialDecomp partial_decompose(int64_t x, int64_t y, const TwistCurve& curve) {
  curve.validate();
  if (curve.model != Model::Partial)
    throw std::invalid_argument("partial_decompose: partial model required");
  if (curve.D <= 0)
    throw std::invalid_argument("partial_decompose: D > 0 required");
  if (y == 0) throw std::invalid_argument("partial_decompose: torsion point");
  if (!curve.on_curve(x, y))
    throw std::invalid_argument("partial_decompose: point not on curve");
  int64_t A = curve.A, B = curve.B, D = curve.D;
  PartialDecomp d;
  d.g = std::gcd(std::llabs(x), D);
  d.xt = x / d.g;
  d.Dt = D / d.g;
  if (y % (d.g * d.g) != 0)
    throw std::logic_error("partial_decompose: g^2 does not divide y");
  d.yt = y / (d.g * d.g);
  __int128 Q128 = (__int128)d.xt * d.xt + (__int128)A * d.Dt * d.xt +
                  (__int128)B * d.Dt * d.Dt;
  int64_t Q = (int64_t)Q128;
  d.delta = std::gcd(std::llabs(d.xt), std::llabs(Q));
  if (B % d.delta)
    throw std::logic_error("partial_decompose: delta does not divide B");
  auto [s1, q1] = sqfree_i64(d.xt / d.delta);
  auto [s2, q2] = sqfree_i64(Q / d.delta);
  d.g1 = s1;
  d.y1 = q1;
  d.g2 = s2;
  d.y2 = q2;
  if ((__int128)d.g1 * d.g2 != d.g)
    throw std::logic_error("partial_decompose: g1 g2 != g");
  // hades identity
  __int128 lhs = (__int128)d.g1 * d.delta * d.y1 * d.y1;
  if (lhs != d.xt) throw std::logic_error("partial_decompose: xt split failed");
  if ((__int128)d.g2 * d.delta * d.y2 * d.y2 != Q128)
    throw std::logic_error("partial_decompose: quadratic split failed");
  if (std::llabs(d.yt) != (__int128)d.delta * std::llabs(d.y1) * std::llabs(d.y2))
    throw std::logic_error("partial_decompose: yt != delta y1 y2");
  d.compact = d.g1 < 0;
  return d;
}

bool local_conditions_partial(const PartialDecomp& d, int64_t A, int64_t B) {
  if (d.compact)
    throw std::invalid_argument("local_conditions_partial: unbounded branch");
  __int128 disc128 = (__int128)A * A - 4 * (__int128)B;
  int64_t disc = (int64_t)disc128;
  int64_t mod = 2 * B * disc;
  int64_t gamma1 = std::gcd(std::llabs(mod), std::llabs(d.g1));
  int64_t gamma2 = std::gcd(std::llabs(mod), std::llabs(d.g2));
  int64_t n1 = d.g1 / gamma1, n2 = d.g2 / gamma2;
  int64_t R21 = d.Dt * d.delta * gamma1;
  int64_t R12 = B * d.delta * gamma2;
  for (auto& [p, e] : factorize_u64((uint64_t)n1)) {
    if (symbol_or_throw(R12 * n2, (int64_t)p) != 1) return false;
  }
  for (auto& [pu, e] : factorize_u64((uint64_t)n2)) {
    int64_t p = (int64_t)pu;
    if (jacobi_i64(disc, (uint64_t)p) != 1) return false;  // split condition
    if (jacobi_i64(B, (uint64_t)p) == 1) {
      // Artin symbol: alpha = (-A + s)/2 mod p, s^2 = A^2 - 4B (mod p);
      // independent of the choice of s when (B/p) = 1.
      uint64_t pm = (uint64_t)p;
      uint64_t dm = (uint64_t)(((disc % p) + p) % p);
      uint64_t s = arith::sqrt_mod_prime(dm, pm);
      uint64_t inv2 = arith::invmod_i64(2, p);
      uint64_t am = arith::mulmod_u64((((-A % p) + p) % p + s) % pm, inv2, pm);
      int art = jacobi_i64((int64_t)am, pm);
      if (art == 0) return false;
      if (art * symbol_or_throw(R21 * n1, p) != 1) return false;
    }
  }
  return true;
}

std::optional<FourSquareDecomp> four_square_decompose(int64_t u, int64_t a,
                                                      int64_t b) {
  if (!(b > a && a > 0))
    throw std::invalid_argument("four_square: need u > b > a > 0");
  if (std::gcd(a, b) != 1)
    throw std::invalid_argument("four_square: gcd(a, b) = 1 required");
  if (u <= b) return std::nullopt;  // a factor would vanish or go negative
  FourSquareDecomp d;
  d.u = u;
  d.a = a;
  d.b = b;
  int64_t f[4] = {u - a, u + a, u - b, u + b};
  __int128 prod = 1;
  for (int i = 0; i < 4; ++i) {
    auto [s, q] = sqfree_i64(f[i]);
    d.g[i] = s;
    d.y[i] = q;
    prod *= s;
  }
  auto [D, v] = sqfree_i64((int64_t)prod);
  d.D = D;
  d.v = v;
  int64_t w = 2 * a * b * (b * b - a * a);
  if (w % d.v) throw std::logic_error("four_square: v does not divide 2ab(b^2-a^2)");
  // (u^2 - a^2)(u^2 - b^2) = D t^2 with t = v * y1 y2 y3 y4
  __int128 lhs = (__int128)(u - a) * (u + a) * (u - b) * (u + b);
  __int128 t = (__int128)d.v * d.y[0] * d.y[1] * d.y[2] * d.y[3];
  if (lhs != (__int128)d.D * t * t)
    throw std::logic_error("four_square: product identity failed");
  return d;
}

bool local_conditions_4(const FourSquareDecomp& d) {
  int64_t w = 2 * d.a * d.b * (d.b * d.b - d.a * d.a);
  int64_t n[4];
  for (int i = 0; i < 4; ++i)
    n[i] = d.g[i] / std::gcd(std::llabs(w), std::llabs(d.g[i]));
  const int64_t a = d.a, b = d.b;
  const int64_t* g = d.g;
  struct Cond {
    int idx;
    int64_t top;
  };
  std::vector<Cond> conds = {
      {0, 2 * a * g[1]},        {0, (b - a) * g[2]},  {0, (a + b) * g[3]},
      {1, -2 * a * g[0]},       {1, -(a + b) * g[2]}, {1, (b - a) * g[3]},
      {2, -(b - a) * g[0]},     {2, (a + b) * g[1]},  {2, 2 * b * g[3]},
      {3, -(a + b) * g[0]},     {3, -(b - a) * g[1]}, {3, -2 * b * g[2]}};
  for (const auto& c : conds) {
    if (n[c.idx] == 1) continue;
    for (auto& [p, e] : factorize_u64((uint64_t)n[c.idx])) {
      int s = jacobi_i64(c.top, (uint64_t)p);
      if (s != 1) return false;
    }
  }
  return true;
}

std::vector<ExceptionalPoint> exceptional_scan(const twists::Corpus& corpus) {
  std::vector<ExceptionalPoint> out;
  bool AB_square = false;
  if (corpus.model == Model::Full)
    AB_square = arith::is_square_u64((uint64_t)corpus.A) &&
                arith::is_square_u64((uint64_t)corpus.B);
  for (const auto& cp : corpus.curves) {
    if (cp.D <= 0) continue;  // positive-D catalogue; negatives via reflection
    for (const auto& p : cp.pts) {
      if (p.torsion) continue;
      if (corpus.model == Model::Full) {
        if (p.compact) continue;  // x > BD branch only
        int64_t A = corpus.A, B = corpus.B, D = cp.D, x = p.x;
        // first kind: xBD, (x - AD)(B - A)D squares and gcd(x, D) = D
        if (x > 0 && x % D == 0) {
          __int128 t1 = (__int128)x * B * D;
          __int128 t2 = (__int128)(x - A * D) * (B - A) * D;
          if (t1 > 0 && t2 > 0 && arith::is_square_i128(t1) &&
              arith::is_square_i128(t2))
            out.push_back({ExceptionalPoint::FirstKind, D, x, p.y});
        }
        if (AB_square) {
          __int128 t = (__int128)x * D;
          if (t > 0 && arith::is_square_i128(t))
            out.push_back({ExceptionalPoint::SecondKind, D, x, p.y});
        }
      } else if (corpus.model == Model::Partial) {
        if (p.x <= 0) continue;
        __int128 t = (__int128)p.x * corpus.B;
        if (t > 0 && arith::is_square_i128(t))
          out.push_back({ExceptionalPoint::PartialKind, cp.D, p.x, p.y});
      }
    }
  }
  return out;
}

std::vector<EtaCandidate> eta_candidates(int64_t A, int64_t B, int64_t Dt,
                                         const Int& height) {
  if (B <= 0)
    throw std::invalid_argument("eta_candidates: B > 0 required");
  if (Dt < 1) throw std::invalid_argument("eta_candidates: Dt >= 1");
  __int128 disc = (__int128)A * A - 4 * (__int128)B;
  Int m = Int::from_i128((__int128)Dt * Dt * disc);
  std::vector<EtaCandidate> out;
  if (arith::is_square_u64((uint64_t)B)) {
    // integer divisors of |m|, up to sign
    Int am = m.abs();
    for (Int d(1); d * d <= am; d += Int(1)) {
      if (!(am % d).is_zero()) continue;
      out.push_back({d, Int(0)});
      if (d * d != am) out.push_back({am / d, Int(0)});
    }
    std::sort(out.begin(), out.end(),
              [](const EtaCandidate& x, const EtaCandidate& y) {
                return x.s < y.s;
              });
  } else {
    for (auto& e : pell::norm_equation_elements(B, m, height))
      out.push_back({e.s, e.t});
  }
  return out;
}

std::vector<CompactEntry> compact_catalogue(const twists::Corpus& corpus,
                                            int64_t dt_cap) {
  std::vector<CompactEntry> out;
  for (const auto& cp : corpus.curves) {
    if (cp.D <= 0) continue;
    for (const auto& p : cp.pts) {
      if (p.torsion || !p.compact) continue;
      int64_t g = std::gcd(std::llabs(p.x), cp.D);
      if (g == 0) g = cp.D;
      int64_t Dt = cp.D / g;
      if (Dt <= dt_cap) out.push_back({cp.D, p.x, p.y, g, Dt});
    }
  }
  return out;
}

int reciprocity_sign(int64_t Di, int64_t Dj) {
  if (Di < 1 || Dj < 1 || Di % 2 == 0 || Dj % 2 == 0)
    throw std::invalid_argument("reciprocity_sign: odd positive required");
  return ((Di - 1) / 2 % 2 == 1 && (Dj - 1) / 2 % 2 == 1) ? -1 : 1;
}

}  // namespace twistscan::descent
