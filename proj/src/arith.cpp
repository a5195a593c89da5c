#include "twistscan/arith.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace twistscan::arith {

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>(
      static_cast<unsigned __int128>(a) * b % m);
}

uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t m) {
  uint64_t r = m == 1 ? 0 : 1;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

int64_t invmod_i64(int64_t a, int64_t m) {
  int64_t g = m, x = 0, x1 = 1, a1 = ((a % m) + m) % m;
  while (a1) {
    int64_t q = g / a1;
    g -= q * a1; std::swap(g, a1);
    x -= q * x1; std::swap(x, x1);
  }
  if (g != 1) throw std::domain_error("invmod: not invertible");
  return ((x % m) + m) % m;
}

int64_t crt_pair(int64_t r1, int64_t m1, int64_t r2, int64_t m2) {
  // x = r1 + m1 * t, t = (r2 - r1) / m1 (mod m2)
  int64_t t = ((r2 - r1) % m2 + m2) % m2;
  t = static_cast<int64_t>(mulmod_u64(t, invmod_i64(m1 % m2, m2), m2));
  return r1 + m1 * t;
}

// ---------------------------------------------------------------------------
// Primes.

namespace {
std::vector<uint32_t> g_primes;
uint32_t g_prime_limit = 0;
std::mutex g_prime_mutex;
}  // namespace

const std::vector<uint32_t>& primes_upto(uint32_t n) {
  std::lock_guard<std::mutex> lock(g_prime_mutex);
  if (n <= g_prime_limit) return g_primes;
  uint32_t limit = std::max<uint32_t>(n, 1u << 20);
  std::vector<bool> comp(limit + 1, false);
  g_primes.clear();
  for (uint32_t i = 2; i <= limit; ++i) {
    if (!comp[i]) {
      g_primes.push_back(i);
      for (uint64_t j = static_cast<uint64_t>(i) * i; j <= limit; j += i)
        comp[j] = true;
    }
  }
  g_prime_limit = limit;
  return g_primes;
}

bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                     23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  // Deterministic Miller-Rabin for n < 3.3 * 10^24 with this witness set.
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) { d >>= 1; ++s; }
  for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                     23ull, 29ull, 31ull, 37ull}) {
    uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) { composite = false; break; }
    }
    if (composite) return false;
  }
  return true;
}

namespace {

uint64_t pollard_rho(uint64_t n) {
  if ((n & 1) == 0) return 2;
  // Brent's cycle variant with deterministic parameter sweep.
  for (uint64_t c = 1;; ++c) {
    uint64_t x = 2, y = 2, d = 1;
    int power = 1, lam = 1;
    while (d == 1) {
      if (power == lam) { x = y; power *= 2; lam = 0; }
      y = (mulmod_u64(y, y, n) + c) % n;
      ++lam;
      uint64_t diff = x > y ? x - y : y - x;
      if (diff == 0) break;
      d = std::gcd(diff, n);
    }
    if (d != 1 && d != n) return d;
  }
}

void factor_rec(uint64_t n, std::vector<uint64_t>& out) {
  if (n == 1) return;
  if (is_prime_u64(n)) { out.push_back(n); return; }
  uint64_t d = pollard_rho(n);
  factor_rec(d, out);
  factor_rec(n / d, out);
}

thread_local std::unordered_map<uint64_t, std::vector<std::pair<uint64_t, int>>>
    t_factor_memo;

}  // namespace

std::vector<std::pair<uint64_t, int>> factorize_u64(uint64_t n) {
  if (n == 0) throw std::domain_error("factorize: zero");
  auto it = t_factor_memo.find(n);
  if (it != t_factor_memo.end()) return it->second;
  uint64_t m = n;
  std::vector<uint64_t> ps;
  for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
    while (m % p == 0) { ps.push_back(p); m /= p; }
  }
  // Trial division up to 10^6, then rho on what remains.
  if (m > 1) {
    const auto& primes = primes_upto(1000000);
    for (uint32_t p : primes) {
      if (p < 17) continue;
      if (static_cast<uint64_t>(p) * p > m) break;
      while (m % p == 0) { ps.push_back(p); m /= p; }
      if (m == 1) break;
    }
    if (m > 1) factor_rec(m, ps);
  }
  std::sort(ps.begin(), ps.end());
  std::vector<std::pair<uint64_t, int>> out;
  for (uint64_t p : ps) {
    if (!out.empty() && out.back().first == p) ++out.back().second;
    else out.push_back({p, 1});
  }
  if (t_factor_memo.size() < (1u << 20)) t_factor_memo.emplace(n, out);
  return out;
}

Factorization factorize(const Int& n) {
  if (n.is_zero()) throw std::domain_error("factorize: zero");
  Int a = n.abs();
  if (!a.fits_int64())
    throw std::domain_error("factorize: input beyond 64-bit desk scale");
  Factorization f;
  f.value = a;
  for (auto& [p, e] : factorize_u64(static_cast<uint64_t>(a.to_int64())))
    f.factors.push_back({Int(static_cast<long long>(p)), e});
  return f;
}

int omega_u64(uint64_t n) {
  return static_cast<int>(factorize_u64(n).size());
}

// ---------------------------------------------------------------------------
// Squares.

std::pair<Int, bool> int_sqrt(const Int& n) { return Int::sqrt_floor(n); }

Int kth_root_floor(const Int& n, int k) {
  if (n.is_neg()) throw std::domain_error("kth_root_floor: negative");
  if (k < 1) throw std::domain_error("kth_root_floor: k >= 1 required");
  if (k == 1 || n.is_zero()) return n;
  Int lo(0), hi = Int(1) << static_cast<unsigned>(n.bit_length() / k + 2);
  while (lo + Int(1) < hi) {
    Int mid = (lo + hi) >> 1;
    if (Int::pow(mid, k) <= n) lo = mid;
    else hi = mid;
  }
  return lo;
}

uint64_t isqrt_u64(uint64_t n) {
  if (n == 0) return 0;
  uint64_t r = static_cast<uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n && (r + 1) != 0) ++r;
  return r;
}

namespace {
// Quadratic-residue bitmasks for a cheap non-square rejection.
struct SquareTables {
  bool mod64[64] = {}, mod63[63] = {}, mod65[65] = {}, mod11[11] = {};
  SquareTables() {
    for (int i = 0; i < 64; ++i) mod64[i * i % 64] = true;
    for (int i = 0; i < 63; ++i) mod63[i * i % 63] = true;
    for (int i = 0; i < 65; ++i) mod65[i * i % 65] = true;
    for (int i = 0; i < 11; ++i) mod11[i * i % 11] = true;
  }
};
const SquareTables g_sq;
}  // namespace

bool is_square_u64(uint64_t n) {
  if (!g_sq.mod64[n & 63]) return false;
  if (!g_sq.mod63[n % 63]) return false;
  if (!g_sq.mod65[n % 65]) return false;
  if (!g_sq.mod11[n % 11]) return false;
  uint64_t r = isqrt_u64(n);
  return r * r == n;
}

bool is_square_i128(__int128 n, __int128* root) {
  if (n < 0) return false;
  unsigned __int128 u = static_cast<unsigned __int128>(n);
  if (!g_sq.mod64[static_cast<unsigned>(u & 63)]) return false;
  if (!g_sq.mod63[static_cast<unsigned>(u % 63)]) return false;
  if (!g_sq.mod65[static_cast<unsigned>(u % 65)]) return false;
  unsigned __int128 r =
      static_cast<unsigned __int128>(std::sqrt(static_cast<double>(u)));
  while (r > 0 && r * r > u) --r;
  while ((r + 1) * (r + 1) <= u) ++r;
  if (r * r != u) return false;
  if (root) *root = static_cast<__int128>(r);
  return true;
}

// ---------------------------------------------------------------------------
// Jacobi symbol.

int jacobi_i64(int64_t a, uint64_t n) {
  if (n == 0 || (n & 1) == 0)
    throw std::domain_error("jacobi: modulus must be odd positive");
  int result = 1;
  // (a/n) depends only on a mod n.
  int64_t am = a % static_cast<int64_t>(n);
  if (am < 0) am += n;
  uint64_t u = static_cast<uint64_t>(am), v = n;
  while (u != 0) {
    while ((u & 1) == 0) {
      u >>= 1;
      // (2/v) = (-1)^((v^2-1)/8)
      if ((v & 7) == 3 || (v & 7) == 5) result = -result;
    }
    std::swap(u, v);
    if ((u & 3) == 3 && (v & 3) == 3) result = -result;
    u %= v;
  }
  return v == 1 ? result : 0;
}

int jacobi(const Int& a, const Int& n) {
  if (!n.is_odd() || n.sign() <= 0)
    throw std::domain_error("jacobi: modulus must be odd positive");
  if (n.fits_int64() && a.fits_int64())
    return jacobi_i64(a.to_int64(), static_cast<uint64_t>(n.to_int64()));
  // Generic binary algorithm on Int.
  Int u = Int::mod_nonneg(a, n), v = n;
  int result = 1;
  while (!u.is_zero()) {
    while (u.is_even()) {
      u = u >> 1;
      int64_t v8 = (v % Int(8)).to_int64();
      if (v8 == 3 || v8 == 5) result = -result;
    }
    std::swap(u, v);
    if ((u % Int(4)).to_int64() == 3 && (v % Int(4)).to_int64() == 3)
      result = -result;
    u = u % v;
  }
  return v == Int(1) ? result : 0;
}

// ---------------------------------------------------------------------------
// Square-free structure.

std::vector<int64_t> squarefree_sieve(int64_t N) {
  if (N < 1) throw std::domain_error("squarefree_sieve: N >= 1 required");
  std::vector<bool> ok(N + 1, true);
  for (int64_t p = 2; p * p <= N; ++p) {
    // crossing off multiples of every square >= 4 is correct and simple
    int64_t q = p * p;
    for (int64_t j = q; j <= N; j += q) ok[j] = false;
  }
  std::vector<int64_t> out;
  for (int64_t i = 1; i <= N; ++i)
    if (ok[i]) out.push_back(i);
  return out;
}

bool is_squarefree_u64(uint64_t n) {
  if (n == 0) return false;
  for (auto& [p, e] : factorize_u64(n))
    if (e > 1) return false;
  return true;
}

SquarefreeDecomp squarefree_part(const Int& n) {
  if (n.is_zero()) throw std::domain_error("squarefree_part: zero");
  Factorization f = factorize(n);
  Int s(1), sq(1);
  for (auto& [p, e] : f.factors) {
    if (e & 1) s *= p;
    sq *= Int::pow(p, e / 2);
  }
  if (n.is_neg()) s = -s;
  return {s, sq};
}

int64_t squarefree_part_i64(int64_t n) {
  SquarefreeDecomp d = squarefree_part(Int(n));
  return d.s.to_int64();
}

// ---------------------------------------------------------------------------
// Binary cubics.

Int BinaryCubic::discriminant() const {
  Int a(c3), b(c2), c(c1), d(c0);
  return Int(18) * a * b * c * d - Int(4) * b * b * b * d + b * b * c * c -
         Int(4) * a * c * c * c - Int(27) * a * a * d * d;
}

int BinaryCubic::lambda() const {
  if (!separable()) throw std::domain_error("lambda: cubic not separable");
  // Exact rational-root extraction on the form: linear factors q*x1 - p*x2
  // correspond to primitive (p, q) with C(p, q) = 0.
  std::vector<std::pair<int64_t, int64_t>> roots;  // projective (p : q)
  if (c3 == 0) roots.push_back({1, 0});            // x2 | C
  // Finite roots of c3 t^3 + c2 t^2 + c1 t + c0 with t = p/q.
  // Candidate p | c0, q | c3 (classic rational root bound); handle c0 = 0.
  std::vector<int64_t> poly = {c0, c1, c2, c3};
  while (poly.size() > 1 && poly.back() == 0) poly.pop_back();
  auto eval_pq = [&](int64_t p, int64_t q) {
    __int128 acc = 0;
    __int128 pp = 1;
    // sum poly[i] * p^i * q^(deg-i)
    int deg = static_cast<int>(poly.size()) - 1;
    for (int i = 0; i <= deg; ++i) {
      __int128 term = poly[i] * pp;
      for (int j = 0; j < deg - i; ++j) term *= q;
      acc += term;
      pp *= p;
    }
    return acc;
  };
  int64_t lead = poly.back(), cst = poly.front();
  auto divisors = [](int64_t n) {
    std::vector<int64_t> ds;
    n = std::llabs(n);
    for (int64_t i = 1; i * i <= n; ++i) {
      if (n % i == 0) { ds.push_back(i); if (i != n / i) ds.push_back(n / i); }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
  };
  if (cst == 0) {
    roots.push_back({0, 1});
    // divide out t
    std::vector<int64_t> rest(poly.begin() + 1, poly.end());
    poly = rest;
    lead = poly.back();
    cst = poly.front();
  }
  if (poly.size() > 1 && cst != 0) {
    for (int64_t p : divisors(cst)) {
      for (int64_t q : divisors(lead)) {
        if (std::gcd(p, q) != 1) continue;
        for (int sgn : {1, -1}) {
          if (eval_pq(sgn * p, q) == 0) roots.push_back({sgn * p, q});
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  size_t r = roots.size();
  // separable cubic: r in {0,1,3} linear factors over Q
  if (r >= 3) return 3;
  if (r == 1) return 2;  // linear times irreducible quadratic
  if (r == 2) return 3;  // can only happen with a hidden third rational root
  return 1;
}

// ---------------------------------------------------------------------------
// Polynomial roots modulo prime powers.

namespace {

int64_t poly_eval_mod(const std::vector<int64_t>& c, int64_t x, int64_t m) {
  __int128 acc = 0;
  for (size_t i = c.size(); i-- > 0;) {
    acc = (acc * x + c[i]) % m;
  }
  int64_t r = static_cast<int64_t>(acc % m);
  return r < 0 ? r + m : r;
}

std::vector<int64_t> poly_derivative(const std::vector<int64_t>& c) {
  std::vector<int64_t> d;
  for (size_t i = 1; i < c.size(); ++i)
    d.push_back(c[i] * static_cast<int64_t>(i));
  return d;
}

}  // namespace

std::vector<int64_t> poly_roots_mod_prime_power(
    const std::vector<int64_t>& coeffs, int64_t p, int v) {
  std::vector<int64_t> cur;
  for (int64_t x = 0; x < p; ++x)
    if (poly_eval_mod(coeffs, x, p) == 0) cur.push_back(x);
  if (v == 1) return cur;
  std::vector<int64_t> deriv = poly_derivative(coeffs);
  int64_t mod = p;
  for (int level = 2; level <= v; ++level) {
    int64_t next_mod = mod * p;
    std::vector<int64_t> next;
    for (int64_t r : cur) {
      int64_t dv = poly_eval_mod(deriv, r, p);
      if (dv % p != 0) {
        // Simple root: unique Newton lift r' = r - f(r)/f'(r) mod next_mod.
        int64_t fr = poly_eval_mod(coeffs, r, next_mod);
        int64_t inv = invmod_i64(poly_eval_mod(deriv, r, next_mod) % next_mod,
                                 next_mod);
        int64_t rr = static_cast<int64_t>(
            (static_cast<__int128>(next_mod) + r -
             static_cast<__int128>(fr) * inv % next_mod) % next_mod);
        next.push_back(rr);
      } else {
        // Singular: scan the p lifts of r.
        for (int64_t t = 0; t < p; ++t) {
          int64_t rr = r + t * mod;
          if (poly_eval_mod(coeffs, rr, next_mod) == 0) next.push_back(rr);
        }
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    cur = std::move(next);
    mod = next_mod;
  }
  return cur;
}

PrimePowerRoots roots_mod_prime_power(const BinaryCubic& C, int64_t p, int v,
                                      Dehom which) {
  std::vector<int64_t> coeffs =
      which == Dehom::FirstVar ? C.dehom_x() : C.dehom_y();
  int64_t mod = 1;
  for (int i = 0; i < v; ++i) mod *= p;
  return {mod, poly_roots_mod_prime_power(coeffs, p, v)};
}

int64_t roots_count_mod(const BinaryCubic& C, int64_t n, Dehom which) {
  if (n < 1) throw std::domain_error("roots_count_mod: n >= 1 required");
  if (n == 1) return 1;
  int64_t count = 1;
  for (auto& [p, e] : factorize_u64(static_cast<uint64_t>(n))) {
    auto rr = roots_mod_prime_power(C, static_cast<int64_t>(p), e, which);
    count *= static_cast<int64_t>(rr.residues.size());
    if (count == 0) return 0;
  }
  return count;
}

int rho_of_prime(const BinaryCubic& C, uint64_t p) {
  // Count distinct roots of C(x,1) in F_p as deg gcd(x^p - x, C(x,1)).
  std::vector<int64_t> c = C.dehom_x();
  // Reduce coefficients mod p; handle degenerate (low-degree) cases directly.
  uint64_t a[4];
  for (int i = 0; i < 4; ++i)
    a[i] = static_cast<uint64_t>(((c[i] % static_cast<int64_t>(p)) + p) % p);
  if (p <= 3 || a[3] == 0) {
    int cnt = 0;
    for (uint64_t x = 0; x < p; ++x) {
      uint64_t val = ((a[3] * x % p + a[2]) * x % p + a[1]) * x % p;
      val = (val + a[0]) % p;
      if (val == 0) ++cnt;
    }
    return cnt;
  }
  // Monicize: roots unchanged when leading coefficient is a unit.
  uint64_t inv = powmod_u64(a[3], p - 2, p);
  uint64_t m2 = mulmod_u64(a[2], inv, p), m1 = mulmod_u64(a[1], inv, p),
           m0 = mulmod_u64(a[0], inv, p);
  // t = x^p mod (x^3 + m2 x^2 + m1 x + m0) via square-and-multiply.
  auto mulmod_poly = [&](const uint64_t f[3], const uint64_t g[3],
                         uint64_t out[3]) {
    uint64_t t[5] = {0, 0, 0, 0, 0};
    for (int i = 0; i < 3; ++i) {
      if (!f[i]) continue;
      for (int j = 0; j < 3; ++j)
        t[i + j] = (t[i + j] + mulmod_u64(f[i], g[j], p)) % p;
    }
    for (int i = 4; i >= 3; --i) {
      uint64_t coef = t[i];
      if (!coef) continue;
      t[i] = 0;
      t[i - 1] = (t[i - 1] + p - mulmod_u64(coef, m2, p)) % p;
      t[i - 2] = (t[i - 2] + p - mulmod_u64(coef, m1, p)) % p;
      t[i - 3] = (t[i - 3] + p - mulmod_u64(coef, m0, p)) % p;
    }
    out[0] = t[0]; out[1] = t[1]; out[2] = t[2];
  };
  uint64_t base[3] = {0, 1, 0};  // x
  uint64_t acc[3] = {1, 0, 0};   // 1
  uint64_t e = p;
  while (e) {
    if (e & 1) { uint64_t tmp[3]; mulmod_poly(acc, base, tmp);
      acc[0] = tmp[0]; acc[1] = tmp[1]; acc[2] = tmp[2]; }
    uint64_t sq[3]; mulmod_poly(base, base, sq);
    base[0] = sq[0]; base[1] = sq[1]; base[2] = sq[2];
    e >>= 1;
  }
  // gcd(x^p - x, cubic) degree = number of distinct roots in F_p.
  std::vector<uint64_t> A = {m0, m1, m2, 1};
  std::vector<uint64_t> B = {acc[0], (acc[1] + p - 1) % p, acc[2]};  // x^p - x
  auto strip = [](std::vector<uint64_t>& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
  };
  strip(B);
  while (!B.empty()) {
    // A mod B
    uint64_t invB = powmod_u64(B.back(), p - 2, p);
    while (A.size() >= B.size()) {
      uint64_t coef = mulmod_u64(A.back(), invB, p);
      size_t off = A.size() - B.size();
      if (coef) {
        for (size_t i = 0; i < B.size(); ++i)
          A[off + i] = (A[off + i] + p - mulmod_u64(coef, B[i], p)) % p;
      }
      A.pop_back();
      strip(A);
      if (A.empty()) break;
    }
    std::swap(A, B);
  }
  // gcd is A (possibly empty when x^p - x = 0 mod the cubic: fully split).
  if (A.empty()) return 3;
  return static_cast<int>(A.size()) - 1;
}

int64_t mult_f(const BinaryCubic& C, int64_t n) {
  if (C.c3 == 0) throw std::domain_error("mult_f: C(1,0) = 0");
  if (n < 1) throw std::domain_error("mult_f: n >= 1 required");
  if (n == 1) return 1;
  int64_t out = 1;
  for (auto& [pu, e] : factorize_u64(static_cast<uint64_t>(n))) {
    int64_t p = static_cast<int64_t>(pu);
    bool p_c10 = (C.c3 % p == 0);  // C(1,0) = c3
    bool p_c01 = (C.c0 % p == 0);  // C(0,1) = c0
    int64_t val;
    if (p_c10 && p_c01) {
      val = static_cast<int64_t>(
                roots_mod_prime_power(C, p, e, Dehom::FirstVar).residues.size()) +
            static_cast<int64_t>(
                roots_mod_prime_power(C, p, e, Dehom::SecondVar).residues.size());
    } else if (!p_c10) {
      val = static_cast<int64_t>(
          roots_mod_prime_power(C, p, e, Dehom::FirstVar).residues.size());
    } else {
      val = static_cast<int64_t>(
          roots_mod_prime_power(C, p, e, Dehom::SecondVar).residues.size());
    }
    out *= val;
    if (out == 0) return 0;
  }
  return out;
}

std::optional<int64_t> hensel_lift(const std::vector<int64_t>& coeffs,
                                   int64_t r, int64_t p, int v) {
  if (p < 3 || !is_prime_u64(static_cast<uint64_t>(p)))
    throw std::domain_error("hensel_lift: p must be an odd prime");
  if (poly_eval_mod(coeffs, ((r % p) + p) % p, p) != 0)
    throw std::domain_error("hensel_lift: r is not a root mod p");
  r = ((r % p) + p) % p;
  std::vector<int64_t> deriv = poly_derivative(coeffs);
  if (poly_eval_mod(deriv, r, p) != 0) {
    // Simple root: Newton to the target exponent.
    int64_t mod = p;
    for (int level = 2; level <= v; ++level) {
      mod *= p;
      int64_t fr = poly_eval_mod(coeffs, r, mod);
      int64_t dv = poly_eval_mod(deriv, r, mod);
      int64_t inv = invmod_i64(dv, mod);
      r = static_cast<int64_t>(
          (static_cast<__int128>(mod) + r -
           static_cast<__int128>(fr) * inv % mod) % mod);
    }
    return r;
  }
  // Singular root: exhaustive level scan among lifts of r.
  auto all = poly_roots_mod_prime_power(coeffs, p, v);
  for (int64_t x : all)
    if (x % p == r) return x;
  return std::nullopt;
}

RhoMeanSum rho_mean_sum(const BinaryCubic& C, uint64_t N) {
  RhoMeanSum out;
  const auto& primes = primes_upto(static_cast<uint32_t>(N));
  Rat acc;
  bool exact = N <= 10000;
  unsigned __int128 fixed = 0;
  for (uint32_t p : primes) {
    if (p > N) break;
    int rho = rho_of_prime(C, p);
    if (rho == 0) continue;
    if (exact) acc += Rat(Int(rho), Int(static_cast<long long>(p)));
    fixed += (static_cast<unsigned __int128>(rho) << 64) / p;
  }
  out.exact = acc;
  out.exact_valid = exact;
  out.fixed_q64 = fixed;
  return out;
}

// ---------------------------------------------------------------------------
// Fundamental units.

FundamentalUnit fundamental_unit(int64_t d) {
  if (d < 2) throw std::domain_error("fundamental_unit: d >= 2 required");
  uint64_t a0 = isqrt_u64(static_cast<uint64_t>(d));
  if (a0 * a0 == static_cast<uint64_t>(d))
    throw std::domain_error("fundamental_unit: d is a square");
  // Continued fraction of sqrt(d): m_{k+1} = d_k a_k - m_k,
  // d_{k+1} = (d - m_{k+1}^2)/d_k, a_{k+1} = floor((a0 + m_{k+1})/d_{k+1}).
  int64_t m = 0, den = 1;
  int64_t a = static_cast<int64_t>(a0);
  Int h_prev(1), h(static_cast<long long>(a));
  Int k_prev(0), k(1);
  while (true) {
    m = den * a - m;
    den = (d - m * m) / den;
    a = (static_cast<int64_t>(a0) + m) / den;
    if (den == 1) {
      // End of period: h + k*sqrt(d) with h^2 - d k^2 = (-1)^period.
      Int t = h, u = k;
      Int norm = t * t - Int(d) * u * u;
      FundamentalUnit fu;
      fu.t = t;
      fu.u = u;
      fu.norm = norm == Int(1) ? 1 : -1;
      assert(norm == Int(1) || norm == Int(-1));
      return fu;
    }
    Int h_next = Int(static_cast<long long>(a)) * h + h_prev;
    Int k_next = Int(static_cast<long long>(a)) * k + k_prev;
    h_prev = std::move(h); h = std::move(h_next);
    k_prev = std::move(k); k = std::move(k_next);
  }
}

uint64_t sqrt_mod_prime(uint64_t a, uint64_t p) {
  a %= p;
  if (a == 0) return 0;
  if (p == 2) return a;
  if (powmod_u64(a, (p - 1) / 2, p) != 1)
    throw std::domain_error("sqrt_mod_prime: not a residue");
  if ((p & 3) == 3) return powmod_u64(a, (p + 1) / 4, p);
  // Tonelli-Shanks.
  uint64_t q = p - 1;
  int s = 0;
  while ((q & 1) == 0) { q >>= 1; ++s; }
  uint64_t z = 2;
  while (powmod_u64(z, (p - 1) / 2, p) != p - 1) ++z;
  uint64_t m = s, c = powmod_u64(z, q, p), t = powmod_u64(a, q, p),
           r = powmod_u64(a, (q + 1) / 2, p);
  while (t != 1) {
    uint64_t i = 0, tt = t;
    while (tt != 1) { tt = mulmod_u64(tt, tt, p); ++i; }
    uint64_t b = c;
    for (uint64_t j = 0; j + i + 1 < m; ++j) b = mulmod_u64(b, b, p);
    m = i;
    c = mulmod_u64(b, b, p);
    t = mulmod_u64(t, c, p);
    r = mulmod_u64(r, b, p);
  }
  return r;
}

}  // namespace twistscan::arith
