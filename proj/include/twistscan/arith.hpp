// Exact integer / number-theory kernel shared by all modules: factorization,
// squares and square-free structure, Jacobi symbols, root counting modulo n,
// Hensel lifting, continued-fraction fundamental units.
//
// Everything here is pure and deterministic; the only module state is a
// thread-local factorization memo, so unrestricted concurrent use is fine.

#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "twistscan/bigint.hpp"

namespace twistscan::arith {

// ---------------------------------------------------------------------------
// Primality and factorization (inputs stay desk-scale: |n| < 2^63).

struct Factorization {
  Int value;                              // the factored positive integer
  std::vector<std::pair<Int, int>> factors;  // primes ascending, exponents >= 1
};

bool is_prime_u64(uint64_t n);
// Deterministic: trial division to 10^6, then Pollard rho.
std::vector<std::pair<uint64_t, int>> factorize_u64(uint64_t n);
Factorization factorize(const Int& n);  // n != 0; factors |n|

int omega_u64(uint64_t n);  // number of distinct prime factors

// Primes up to n, cached ascending.
const std::vector<uint32_t>& primes_upto(uint32_t n);

// ---------------------------------------------------------------------------
// Squares.

// Floor sqrt plus exactness flag; n >= 0.
std::pair<Int, bool> int_sqrt(const Int& n);
// Floor k-th root; n >= 0, k >= 1.
Int kth_root_floor(const Int& n, int k);
uint64_t isqrt_u64(uint64_t n);
bool is_square_u64(uint64_t n);
// Works for any non-negative signed 128-bit value.
bool is_square_i128(__int128 n, __int128* root = nullptr);

// ---------------------------------------------------------------------------
// Quadratic symbols.

// Jacobi symbol (a/n); n odd positive. Multiplicative in both arguments,
// zero exactly when gcd(a, n) > 1.
int jacobi(const Int& a, const Int& n);
int jacobi_i64(int64_t a, uint64_t n);

// ---------------------------------------------------------------------------
// Square-free structure.

// Ascending square-free integers in [1, N].
std::vector<int64_t> squarefree_sieve(int64_t N);
bool is_squarefree_u64(uint64_t n);

struct SquarefreeDecomp {
  Int s;  // square-free part, carries the sign of the input
  Int f;  // n = s * f^2, f >= 1
};
SquarefreeDecomp squarefree_part(const Int& n);  // n != 0
int64_t squarefree_part_i64(int64_t n);

// ---------------------------------------------------------------------------
// Binary cubic forms C(x1, x2) = c3 x1^3 + c2 x1^2 x2 + c1 x1 x2^2 + c0 x2^3.

struct BinaryCubic {
  int64_t c3 = 0, c2 = 0, c1 = 0, c0 = 0;

  __int128 eval(__int128 x, __int128 y) const {
    return ((c3 * x + c2 * y) * x + c1 * y * y) * x + c0 * y * y * y;
  }
  // C(x, 1) as a dense coefficient vector [c0, c1, c2, c3] (degree order).
  std::vector<int64_t> dehom_x() const { return {c0, c1, c2, c3}; }
  // C(1, x).
  std::vector<int64_t> dehom_y() const { return {c3, c2, c1, c0}; }

  Int discriminant() const;   // 18abcd - 4b^3d + b^2c^2 - 4ac^3 - 27a^2d^2
  bool separable() const { return !discriminant().is_zero(); }
  // Number of irreducible factors over Q (1..3); requires separable.
  int lambda() const;
};

// ---------------------------------------------------------------------------
// Roots of integer polynomials modulo prime powers and general moduli.

enum class Dehom { FirstVar, SecondVar };  // C(x,1) vs C(1,x)

// All residues r mod p^v with poly(r) = 0 (mod p^v). Exact for every case;
// uses Newton steps for simple roots and per-level scans when the derivative
// degenerates. Coefficients and p^v must fit int64 (p^v < 2^62).
std::vector<int64_t> poly_roots_mod_prime_power(
    const std::vector<int64_t>& coeffs, int64_t p, int v);

// rho(n) (which = FirstVar) or rho'(n) (which = SecondVar): the number of
// residues x mod n with C(x,1) = 0 resp. C(1,x) = 0 (mod n). Multiplicative;
// computed by CRT from prime powers. rho(1) = 1.
int64_t roots_count_mod(const BinaryCubic& C, int64_t n, Dehom which);

struct PrimePowerRoots {
  int64_t modulus;               // p^v
  std::vector<int64_t> residues;
};
PrimePowerRoots roots_mod_prime_power(const BinaryCubic& C, int64_t p, int v,
                                      Dehom which);

// Number of distinct roots of C(x,1) mod p, by gcd(x^p - x, C) degree.
// Fast enough to sweep every prime up to 10^6.
int rho_of_prime(const BinaryCubic& C, uint64_t p);

// Multiplicative f of eq-style three-case definition: f(p^v) = rho(p^v) when
// p does not divide C(1,0); rho'(p^v) when p | C(1,0) but not C(0,1);
// rho(p^v) + rho'(p^v) when p divides both.
int64_t mult_f(const BinaryCubic& C, int64_t n);

// Hensel lift: poly(r) = 0 (mod p), p odd prime. Returns r' = r (mod p) with
// poly(r') = 0 (mod p^v), or nullopt when a singular root does not lift.
std::optional<int64_t> hensel_lift(const std::vector<int64_t>& coeffs,
                                   int64_t r, int64_t p, int v);

// ---------------------------------------------------------------------------
// Partial sums of rho(p)/p (the log log trend).

struct RhoMeanSum {
  Rat exact;        // populated when N <= 10^4
  bool exact_valid = false;
  // Q64.64 fixed-point accumulation; error < #primes * 2^-64.
  unsigned __int128 fixed_q64 = 0;
  double approx() const {
    return static_cast<double>(fixed_q64) / 18446744073709551616.0;
  }
};
RhoMeanSum rho_mean_sum(const BinaryCubic& C, uint64_t N);

// ---------------------------------------------------------------------------
// Pell / continued fractions.

struct FundamentalUnit {
  Int t, u;   // minimal t + u*sqrt(d) > 1 with t^2 - d u^2 = norm
  int norm;   // -1 or +1
};
// Fundamental unit of Z[sqrt(d)] (not the maximal order); d >= 2 non-square.
FundamentalUnit fundamental_unit(int64_t d);

// ---------------------------------------------------------------------------
// Misc small helpers shared across modules.

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m);
uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t m);
int64_t invmod_i64(int64_t a, int64_t m);  // m > 0, gcd(a, m) = 1
// x = r1 (mod m1), x = r2 (mod m2), gcd(m1, m2) = 1; result mod m1*m2.
int64_t crt_pair(int64_t r1, int64_t m1, int64_t r2, int64_t m2);
// Square root of a modulo odd prime p (Tonelli-Shanks); requires (a/p) = 1.
uint64_t sqrt_mod_prime(uint64_t a, uint64_t p);

}  // namespace twistscan::arith
