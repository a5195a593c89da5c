#include "twistscan/surface.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <stdexcept>

#include "twistscan/fixedlog.hpp"

namespace twistscan::surface {

int64_t Lattice2::det() const {
  __int128 d = (__int128)b1x * b2y - (__int128)b1y * b2x;
  if (d < 0) d = -d;
  return (int64_t)d;
}

BruteResult brute_count(const arith::BinaryCubic& C, int64_t B,
                        bool keep_solutions) {
  if (B < 1) throw std::invalid_argument("brute_count: B >= 1");
  if (!C.separable()) throw std::invalid_argument("brute_count: C not separable");
  BruteResult res;
  for (int64_t x1 = -B; x1 <= B; ++x1) {
    for (int64_t x2 = -B; x2 <= B; ++x2) {
      __int128 N = C.eval(x1, x2);
      if (N == 0) continue;
      __int128 absN = N < 0 ? -N : N;
      // x3^2 | N with |N| / x3^2 <= B
      int64_t lo = 1;
      if (absN / B > 4) {
        lo = (int64_t)arith::isqrt_u64((uint64_t)(absN / B));
        lo = std::max<int64_t>(1, lo - 1);
      }
      while ((__int128)B * lo * lo < absN) ++lo;
      for (int64_t x3 = lo; x3 <= B; ++x3) {
        __int128 sq = (__int128)x3 * x3;
        if (sq > absN) break;
        if (absN % sq) continue;
        int64_t x4 = (int64_t)(N / sq);
        if (std::gcd(std::gcd(std::llabs(x1), std::llabs(x2)),
                     std::llabs(x4)) != 1)
          continue;
        res.count += 2;  // x3 and -x3
        if (keep_solutions) res.solutions.push_back({x1, x2, x3, x4});
      }
    }
  }
  return res;
}

std::pair<arith::BinaryCubic, int64_t> normalize_cubic(
    const arith::BinaryCubic& C) {
  if (!C.separable())
    throw std::invalid_argument("normalize_cubic: C not separable");
  auto shear = [&](int64_t b) {
    // C(x1, x2 + b x1)
    arith::BinaryCubic r;
    r.c3 = C.c3 + C.c2 * b + C.c1 * b * b + C.c0 * b * b * b;
    r.c2 = C.c2 + 2 * C.c1 * b + 3 * C.c0 * b * b;
    r.c1 = C.c1 + 3 * C.c0 * b;
    r.c0 = C.c0;
    return r;
  };
  for (int64_t ab = 0;; ++ab) {
    for (int64_t b : {ab, -ab}) {
      arith::BinaryCubic S = shear(b);
      if (S.c3 != 0) return {S, b};
      if (b == 0) break;
    }
  }
}

namespace {

// Congruence class of coprime solutions mod a prime power:
//   kind A: y1 = alpha * y2 (mod m);  kind B: y2 = beta * y1 (mod m), p | beta.
struct CongClass {
  bool second;  // false: kind A, true: kind B
  int64_t m;
  int64_t val;
};

// All classes covering coprime solutions of C = 0 mod p^v, pairwise disjoint
// on coprime pairs.
std::vector<CongClass> classes_mod_prime_power(const arith::BinaryCubic& C,
                                               int64_t p, int v) {
  std::vector<CongClass> out;
  auto ra = arith::roots_mod_prime_power(C, p, v, arith::Dehom::FirstVar);
  for (int64_t alpha : ra.residues) out.push_back({false, ra.modulus, alpha});
  auto rb = arith::roots_mod_prime_power(C, p, v, arith::Dehom::SecondVar);
  for (int64_t beta : rb.residues)
    if (beta % p == 0) out.push_back({true, rb.modulus, beta});
  return out;
}

// Hermite-reduce generators (rows) to a 2x2 basis.
Lattice2 basis_from_generators(std::vector<std::pair<Int, Int>> gens,
                               int64_t expect_det) {
  // Column-echelon style: gcd the first coordinates.
  auto reduce_pair = [](std::pair<Int, Int>& a, std::pair<Int, Int>& b) {
    // make b.first = 0 using gcd steps on (a, b)
    while (!b.first.is_zero()) {
      Int q = Int::fdiv(a.first, b.first);
      a.first = a.first - q * b.first;
      a.second = a.second - q * b.second;
      std::swap(a, b);
    }
  };
  std::pair<Int, Int> r1{Int(0), Int(0)}, r2{Int(0), Int(0)};
  for (auto& g : gens) {
    std::pair<Int, Int> w = g;
    reduce_pair(r1, w);  // afterwards w.first == 0
    // fold w into r2 by gcd on second coordinates
    while (!w.second.is_zero()) {
      if (r2.second.is_zero()) { std::swap(r2, w); break; }
      Int q = Int::fdiv(r2.second, w.second);
      r2.second = r2.second - q * w.second;
      std::swap(r2, w);
    }
  }
  if (r1.first.is_zero() || r2.second.is_zero())
    throw std::logic_error("basis_from_generators: rank < 2");
  // normalize signs and reduce r1.second mod r2.second
  if (r1.first.is_neg()) { r1.first = -r1.first; r1.second = -r1.second; }
  if (r2.second.is_neg()) r2.second = -r2.second;
  Int q = Int::fdiv(r1.second, r2.second);
  r1.second = r1.second - q * r2.second;
  Lattice2 L{r1.first.to_int64(), r1.second.to_int64(), 0,
             r2.second.to_int64()};
  if (L.det() != expect_det)
    throw std::logic_error("basis_from_generators: determinant mismatch");
  return L;
}

Lattice2 lattice_from_classes(const std::vector<CongClass>& combo) {
  // CRT the two kinds separately: y1 = A y2 (mod MA), y2 = Bb y1 (mod MB).
  int64_t MA = 1, MB = 1;
  int64_t Aval = 0, Bval = 0;
  for (const auto& c : combo) {
    if (!c.second) {
      Aval = MA == 1 ? c.val % c.m : arith::crt_pair(Aval, MA, c.val % c.m, c.m);
      MA *= c.m;
    } else {
      Bval = MB == 1 ? c.val % c.m : arith::crt_pair(Bval, MB, c.val % c.m, c.m);
      MB *= c.m;
    }
  }
  Int M = Int(MA) * Int(MB);
  // The quotient L / (M Z^2) is cyclic, generated by the CRT lift of the
  // per-side kernel directions (A, 1) mod MA and (1, B) mod MB.
  std::vector<std::pair<Int, Int>> gens;
  gens.push_back({M, Int(0)});
  gens.push_back({Int(0), M});
  if (MB == 1) {
    gens.push_back({Int(Aval), Int(1)});
  } else if (MA == 1) {
    gens.push_back({Int(1), Int(Bval)});
  } else {
    int64_t a1 = arith::crt_pair(Aval % MA, MA, 1 % MB, MB);
    int64_t a2 = arith::crt_pair(1 % MA, MA, Bval % MB, MB);
    gens.push_back({Int(a1), Int(a2)});
  }
  return basis_from_generators(std::move(gens), MA * MB);
}

}  // namespace

std::vector<Lattice2> lattice_cover(const arith::BinaryCubic& C, int64_t d) {
  if (d < 1) throw std::invalid_argument("lattice_cover: d >= 1");
  if (!C.separable()) throw std::invalid_argument("lattice_cover: C not separable");
  if (d == 1) return {Lattice2{1, 0, 0, 1}};
  std::vector<std::vector<CongClass>> per_prime;
  for (auto& [p, e] : arith::factorize_u64(static_cast<uint64_t>(d))) {
    per_prime.push_back(classes_mod_prime_power(C, (int64_t)p, e));
    if (per_prime.back().empty()) return {};
  }
  std::vector<Lattice2> out;
  std::vector<size_t> idx(per_prime.size(), 0);
  while (true) {
    std::vector<CongClass> combo;
    for (size_t i = 0; i < per_prime.size(); ++i)
      combo.push_back(per_prime[i][idx[i]]);
    out.push_back(lattice_from_classes(combo));
    size_t i = 0;
    for (; i < idx.size(); ++i) {
      if (++idx[i] < per_prime[i].size()) break;
      idx[i] = 0;
    }
    if (i == idx.size()) break;
  }
  return out;
}

std::pair<int64_t, int64_t> minkowski_small(const Lattice2& L) {
  // Lagrange-Gauss reduction.
  __int128 ax = L.b1x, ay = L.b1y, bx = L.b2x, by = L.b2y;
  auto n2 = [](__int128 x, __int128 y) { return x * x + y * y; };
  if (n2(ax, ay) > n2(bx, by)) { std::swap(ax, bx); std::swap(ay, by); }
  while (true) {
    __int128 dot = ax * bx + ay * by;
    __int128 nn = n2(ax, ay);
    // nearest integer to dot / nn
    __int128 t = (2 * dot + (dot >= 0 ? nn : -nn)) / (2 * nn);
    bx -= t * ax;
    by -= t * ay;
    if (n2(bx, by) >= n2(ax, ay)) break;
    std::swap(ax, bx);
    std::swap(ay, by);
  }
  int64_t sx = (int64_t)ax, sy = (int64_t)ay;
  __int128 sup = std::max(sx < 0 ? -(__int128)sx : (__int128)sx,
                          sy < 0 ? -(__int128)sy : (__int128)sy);
  assert(sup * sup <= 4 * (__int128)L.det());
  return {sx, sy};
}

namespace {

// Enumerate lattice points in [-Y, Y]^2 and hand them to the sink.
template <typename F>
void for_lattice_points_in_box(const Lattice2& L, int64_t Y, F&& sink) {
  // Gauss-reduce the basis first so ranges stay tight.
  __int128 ax = L.b1x, ay = L.b1y, bx = L.b2x, by = L.b2y;
  auto n2 = [](__int128 x, __int128 y) { return x * x + y * y; };
  if (n2(ax, ay) > n2(bx, by)) { std::swap(ax, bx); std::swap(ay, by); }
  while (true) {
    __int128 dot = ax * bx + ay * by;
    __int128 nn = n2(ax, ay);
    __int128 t = (2 * dot + (dot >= 0 ? nn : -nn)) / (2 * nn);
    bx -= t * ax;
    by -= t * ay;
    if (n2(bx, by) >= n2(ax, ay)) break;
    std::swap(ax, bx);
    std::swap(ay, by);
  }
  __int128 det = ax * by - ay * bx;
  if (det < 0) det = -det;
  // |x ^ a| = |t| det for x = s a + t b
  __int128 amax = (ax < 0 ? -ax : ax) + (ay < 0 ? -ay : ay);
  int64_t T = (int64_t)((amax * Y) / det) + 1;
  for (int64_t t = -T; t <= T; ++t) {
    // s range from |s*ax + t*bx| <= Y and |s*ay + t*by| <= Y
    __int128 lo = -((__int128)1 << 100), hi = ((__int128)1 << 100);
    bool empty = false;
    auto clamp = [&](__int128 a, __int128 c) {
      // |s * a + c| <= Y
      if (a == 0) {
        if (c > Y || c < -Y) empty = true;
        return;
      }
      __int128 l = -Y - c, h = Y - c;  // l <= s*a <= h
      if (a < 0) {
        __int128 nl = -h, nh = -l;
        l = nl;
        h = nh;
        a = -a;
      }
      __int128 slo = l >= 0 ? (l + a - 1) / a : -((-l) / a);
      __int128 shi = h >= 0 ? h / a : -((-h + a - 1) / a);
      lo = std::max(lo, slo);
      hi = std::min(hi, shi);
    };
    clamp(ax, (__int128)bx * t);
    clamp(ay, (__int128)by * t);
    if (empty || lo > hi) continue;
    for (__int128 s = lo; s <= hi; ++s) {
      int64_t x = (int64_t)(s * ax + (__int128)t * bx);
      int64_t y = (int64_t)(s * ay + (__int128)t * by);
      sink(x, y);
    }
  }
}

}  // namespace

int64_t count_via_lattices(const arith::BinaryCubic& C, int64_t B) {
  if (B < 1) throw std::invalid_argument("count_via_lattices: B >= 1");
  if (!C.separable())
    throw std::invalid_argument("count_via_lattices: C not separable");
  int64_t total = 0;
  // Memoize congruence classes per prime power across the (h2, u) loop.
  std::map<std::pair<int64_t, int>, std::vector<CongClass>> class_memo;
  auto classes_of = [&](int64_t p, int e) -> const std::vector<CongClass>& {
    auto key = std::make_pair(p, e);
    auto it = class_memo.find(key);
    if (it == class_memo.end())
      it = class_memo.emplace(key, classes_mod_prime_power(C, p, e)).first;
    return it->second;
  };
  for (int64_t h1 = 1; h1 * h1 <= B; ++h1) {
    for (int64_t h2 = 1; h1 * h1 * h2 <= B; ++h2) {
      if (!arith::is_squarefree_u64(h2)) continue;
      int64_t Y = B / (h1 * h1 * h2);
      int64_t umax = B / (h1 * h1 * h1 * h2 * h2);
      if (umax < 1) break;
      for (int64_t u = 1; u <= umax; ++u) {
        int64_t d = h2 * u * u;
        // factor d once, build class combos
        std::vector<std::vector<CongClass>> per_prime;
        bool none = false;
        for (auto& [p, e] : arith::factorize_u64((uint64_t)d)) {
          per_prime.push_back(classes_of((int64_t)p, e));
          if (per_prime.back().empty()) { none = true; break; }
        }
        if (none) continue;
        std::vector<size_t> idx(per_prime.size(), 0);
        while (true) {
          std::vector<CongClass> combo;
          for (size_t i = 0; i < per_prime.size(); ++i)
            combo.push_back(per_prime[i][idx[i]]);
          Lattice2 L = per_prime.empty() ? Lattice2{1, 0, 0, 1}
                                         : lattice_from_classes(combo);
          for_lattice_points_in_box(L, Y, [&](int64_t y1, int64_t y2) {
            if (y1 == 0 && y2 == 0) return;
            if (std::gcd(std::llabs(y1), std::llabs(y2)) != 1) return;
            __int128 N = C.eval(y1, y2);
            if (N == 0) return;
            assert(N % d == 0);
            __int128 v = N / d;
            if (v > B || v < -B) return;
            if (std::gcd((int64_t)(h1 * h2),
                         std::llabs((int64_t)v)) != 1)
              return;
            total += 2;
          });
          size_t i = 0;
          for (; i < idx.size(); ++i) {
            if (++idx[i] < per_prime[i].size()) break;
            idx[i] = 0;
          }
          if (i == idx.size()) break;
        }
      }
    }
  }
  return total;
}

std::vector<Solution> lower_bound_construct(const arith::BinaryCubic& C,
                                            int64_t B) {
  if (C.c3 == 0)
    throw std::invalid_argument("lower_bound_construct: C(1,0) = 0");
  if (!C.separable())
    throw std::invalid_argument("lower_bound_construct: C not separable");
  Int disc = C.discriminant();
  std::vector<Solution> out;
  for (int64_t x3 = 1; x3 <= B; ++x3) {
    if (Int::gcd(Int(x3), disc) != Int(1)) continue;
    // roots of C(x,1) mod x3^2 via per-prime lifts (simple roots: x3
    // coprime to disc), CRT over the prime powers of x3^2
    std::vector<int64_t> roots = {0};
    int64_t mod = 1;
    bool dead = false;
    for (auto& [p, e] : arith::factorize_u64((uint64_t)x3)) {
      auto rr = arith::roots_mod_prime_power(C, (int64_t)p, 2 * e,
                                             arith::Dehom::FirstVar);
      if (rr.residues.empty()) { dead = true; break; }
      std::vector<int64_t> next;
      for (int64_t r0 : roots)
        for (int64_t r1 : rr.residues)
          next.push_back(mod == 1 ? r1
                                  : arith::crt_pair(r0, mod, r1, rr.modulus));
      roots = std::move(next);
      mod *= rr.modulus;
    }
    if (dead) continue;
    int64_t m = x3 * x3;
    for (int64_t alpha : roots) {
      Lattice2 L{m, 0, alpha % m, 1};
      auto [sx, sy] = minkowski_small(L);
      // candidate short vectors; prefer primitive ones with C != 0
      std::vector<std::pair<int64_t, int64_t>> cands = {{sx, sy}};
      {
        // second reduced vector for fallbacks
        __int128 ax = m, ay = 0, bx = alpha % m, by = 1;
        auto n2 = [](__int128 x, __int128 y) { return x * x + y * y; };
        if (n2(ax, ay) > n2(bx, by)) { std::swap(ax, bx); std::swap(ay, by); }
        while (true) {
          __int128 dot = ax * bx + ay * by;
          __int128 nn = n2(ax, ay);
          __int128 t = (2 * dot + (dot >= 0 ? nn : -nn)) / (2 * nn);
          bx -= t * ax;
          by -= t * ay;
          if (n2(bx, by) >= n2(ax, ay)) break;
          std::swap(ax, bx);
          std::swap(ay, by);
        }
        cands.push_back({(int64_t)bx, (int64_t)by});
        cands.push_back({(int64_t)(ax + bx), (int64_t)(ay + by)});
        cands.push_back({(int64_t)(ax - bx), (int64_t)(ay - by)});
      }
      for (auto [x1, x2] : cands) {
        if (x1 == 0 && x2 == 0) continue;
        int64_t g = std::gcd(std::llabs(x1), std::llabs(x2));
        if (g != 1) {
          if (std::gcd(g, x3) != 1) continue;
          x1 /= g;
          x2 /= g;
        }
        if (std::llabs(x1) > B || std::llabs(x2) > B) continue;
        __int128 N = C.eval(x1, x2);
        if (N == 0) continue;
        if (N % ((__int128)m) != 0) continue;
        __int128 x4 = N / m;
        if (x4 == 0 || x4 > B || x4 < -B) continue;
        out.push_back({x1, x2, x3, (int64_t)x4});
        break;
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const Solution& a, const Solution& b) {
    return std::tie(a.x3, a.x1, a.x2, a.x4) < std::tie(b.x3, b.x1, b.x2, b.x4);
  });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const Solution& a, const Solution& b) {
                          return a.x1 == b.x1 && a.x2 == b.x2 &&
                                 a.x3 == b.x3 && a.x4 == b.x4;
                        }),
            out.end());
  return out;
}

std::vector<GrowthRow> growth_table(const arith::BinaryCubic& C,
                                    const std::vector<int64_t>& grid) {
  for (size_t i = 1; i < grid.size(); ++i)
    if (grid[i] <= grid[i - 1])
      throw std::invalid_argument("growth_table: grid must ascend");
  int lam = C.lambda();
  int ex = std::max(lam, 2);
  std::vector<GrowthRow> rows;
  for (int64_t B : grid) {
    GrowthRow row;
    row.B = B;
    row.count = count_via_lattices(C, B);
    Rat perB(Int(row.count), Int(B));
    row.per_B = perB.to_decimal(6);
    if (B >= 2) {
      Rat lnB = q48_to_rat(ln_q48((uint64_t)B));
      Rat denom = Rat(Int(B));
      for (int i = 0; i < ex; ++i) denom = denom * lnB;
      row.per_B_logs = (Rat(Int(row.count)) / denom).to_decimal(6);
    } else {
      row.per_B_logs = "inf";
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace twistscan::surface
