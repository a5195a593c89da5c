#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <numeric>

#include "twistscan/arith.hpp"
#include "twistscan/cubicroots.hpp"

using namespace twistscan;
using namespace twistscan::arith;

namespace {

// Independent oracle: count roots of C(x,1) or C(1,x) mod n by brute loop.
int64_t rho_brute(const BinaryCubic& C, int64_t n, Dehom which) {
  int64_t cnt = 0;
  for (int64_t x = 0; x < n; ++x) {
    __int128 v = which == Dehom::FirstVar ? C.eval(x, 1) : C.eval(1, x);
    __int128 r = v % n;
    if (r < 0) r += n;
    if (r == 0) ++cnt;
  }
  return cnt;
}

uint64_t rng_state = 88172645463325252ull;
uint64_t rnd() {
  rng_state ^= rng_state << 13;
  rng_state ^= rng_state >> 7;
  rng_state ^= rng_state << 17;
  return rng_state;
}

}  // namespace

TEST_CASE("bigint basics") {
  Int a("123456789012345678901234567890");
  Int b("987654321098765432109876543210");
  CHECK((a * b).to_string() == "121932631137021795226185032733622923332237463801111263526900");
  CHECK((b / a).to_string() == "8");
  CHECK((b % a).to_string() == "9000000000900000000090");
  CHECK(Int("-17") + Int("42") == Int(25));
  CHECK(Int::pow(Int(3), 40).to_string() == "12157665459056928801");
  CHECK(Int::gcd(Int(462), Int(1071)) == Int(21));
  CHECK(Int(-7) % Int(3) == Int(-1));
  CHECK(Int::mod_nonneg(Int(-7), Int(3)) == Int(2));
  CHECK(Int::fdiv(Int(-7), Int(3)) == Int(-3));
  auto [r, exact] = Int::sqrt_floor(Int("152415787532388367501905199875019052100"));
  CHECK(exact);
  CHECK(r.to_string() == "12345678901234567890");
}

TEST_CASE("rationals") {
  Rat x(Int(1), Int(3));
  Rat y(Int(1), Int(6));
  CHECK((x + y) == Rat(Int(1), Int(2)));
  CHECK((x - y) == y);
  CHECK(Rat(Int(2), Int(-4)).to_string() == "-1/2");
  CHECK(Rat(Int(355), Int(113)).to_decimal(4) == "3.1415");
}

TEST_CASE("int_sqrt op examples") {
  CHECK(int_sqrt(Int(0)) == std::pair<Int, bool>{Int(0), true});
  CHECK(int_sqrt(Int(24)) == std::pair<Int, bool>{Int(4), false});
  CHECK(int_sqrt(Int(7496644)) == std::pair<Int, bool>{Int(2738), true});
  CHECK(Int(2738) * Int(2738) == Int(7496644));
}

TEST_CASE("jacobi op examples and multiplicativity") {
  CHECK(jacobi(Int(1), Int(3)) == 1);
  // (2/15) = (2/3)(2/5) = (-1)(-1), confirmed by brute squares mod 3 and 5
  CHECK(jacobi(Int(2), Int(15)) == 1);
  CHECK(jacobi(Int(3), Int(9)) == 0);
  CHECK_THROWS(jacobi(Int(1), Int(4)));
  CHECK_THROWS(jacobi(Int(1), Int(-3)));
  // (a/p) for odd prime p agrees with Euler's criterion.
  for (uint64_t p : {3ull, 5ull, 7ull, 11ull, 101ull, 997ull}) {
    for (int64_t a = -20; a <= 20; ++a) {
      if (a % static_cast<int64_t>(p) == 0) continue;
      int64_t am = ((a % static_cast<int64_t>(p)) + p) % p;
      int euler = powmod_u64(am, (p - 1) / 2, p) == 1 ? 1 : -1;
      CHECK(jacobi_i64(a, p) == euler);
    }
  }
  // multiplicativity in both arguments, 10^4 random triples
  for (int i = 0; i < 10000; ++i) {
    int64_t a = static_cast<int64_t>(rnd() % 2001) - 1000;
    int64_t b = static_cast<int64_t>(rnd() % 2001) - 1000;
    uint64_t n = 2 * (rnd() % 500) + 1;
    CHECK(jacobi_i64(a * b, n) == jacobi_i64(a, n) * jacobi_i64(b, n));
  }
  // and in the modulus
  for (int i = 0; i < 2000; ++i) {
    int64_t a = static_cast<int64_t>(rnd() % 2001) - 1000;
    uint64_t n = 2 * (rnd() % 200) + 1;
    uint64_t m = 2 * (rnd() % 200) + 1;
    CHECK(jacobi_i64(a, n * m) == jacobi_i64(a, n) * jacobi_i64(a, m));
  }
}

TEST_CASE("squarefree sieve") {
  CHECK(squarefree_sieve(1) == std::vector<int64_t>{1});
  CHECK(squarefree_sieve(10) == std::vector<int64_t>{1, 2, 3, 5, 6, 7, 10});
  CHECK(squarefree_sieve(12) == std::vector<int64_t>{1, 2, 3, 5, 6, 7, 10, 11});
  // independent check by trial division
  auto sf = squarefree_sieve(500);
  size_t k = 0;
  for (int64_t n = 1; n <= 500; ++n) {
    bool ok = true;
    for (int64_t p = 2; p * p <= n; ++p)
      if (n % (p * p) == 0) { ok = false; break; }
    if (ok) {
      REQUIRE(k < sf.size());
      CHECK(sf[k++] == n);
    }
  }
  CHECK(k == sf.size());
}

TEST_CASE("squarefree_part") {
  auto d = squarefree_part(Int(12));
  CHECK(d.s == Int(3));
  CHECK(d.f == Int(2));
  d = squarefree_part(Int(-8));
  CHECK(d.s == Int(-2));
  CHECK(d.f == Int(2));
  d = squarefree_part(Int(7));
  CHECK(d.s == Int(7));
  CHECK(d.f == Int(1));
  CHECK_THROWS(squarefree_part(Int(0)));
  // roundtrip s * f^2 = n with s squarefree, exhaustive |n| <= 10^4
  for (int64_t n = -10000; n <= 10000; ++n) {
    if (n == 0) continue;
    auto dd = squarefree_part(Int(n));
    CHECK(dd.s * dd.f * dd.f == Int(n));
    int64_t s = dd.s.to_int64();
    CHECK(is_squarefree_u64(static_cast<uint64_t>(std::llabs(s))));
  }
}

TEST_CASE("factorization") {
  auto f = factorize(Int(360));
  REQUIRE(f.factors.size() == 3);
  CHECK(f.factors[0] == std::pair<Int, int>{Int(2), 3});
  CHECK(f.factors[1] == std::pair<Int, int>{Int(3), 2});
  CHECK(f.factors[2] == std::pair<Int, int>{Int(5), 1});
  // semiprime beyond the trial-division bound
  auto g = factorize_u64(1000003ull * 1000033ull);
  REQUIRE(g.size() == 2);
  CHECK(g[0].first == 1000003ull);
  CHECK(g[1].first == 1000033ull);
  CHECK(is_prime_u64(1000000007ull));
  CHECK(!is_prime_u64(1000000007ull * 3));
}

TEST_CASE("roots_mod: rho examples and properties") {
  BinaryCubic C{1, 0, 0, -2};  // C(x,1) = x^3 - 2
  CHECK(rho_brute(C, 5, Dehom::FirstVar) == 1);
  CHECK(rho_brute(C, 7, Dehom::FirstVar) == 0);
  CHECK(rho_brute(C, 31, Dehom::FirstVar) == 3);
  CHECK(roots_count_mod(C, 5, Dehom::FirstVar) == 1);
  CHECK(roots_count_mod(C, 7, Dehom::FirstVar) == 0);
  CHECK(roots_count_mod(C, 31, Dehom::FirstVar) == 3);
  CHECK(roots_count_mod(C, 1, Dehom::FirstVar) == 1);

  // multiplicative over coprime moduli, exhaustive m, n <= 50
  std::vector<BinaryCubic> cubics = {
      {1, 0, 0, 1}, {1, 0, -1, 1}, {1, 0, 0, -2}, {2, 1, -3, 5}};
  for (const auto& Cc : cubics) {
    std::vector<int64_t> vals(2501, 0);
    for (int64_t n = 1; n <= 2500; ++n) vals[n] = -1;
    for (int64_t m = 1; m <= 50; ++m) {
      for (int64_t n = 1; n <= 50; ++n) {
        if (std::gcd(m, n) != 1) continue;
        int64_t lhs = roots_count_mod(Cc, m * n, Dehom::FirstVar);
        int64_t rhs = roots_count_mod(Cc, m, Dehom::FirstVar) *
                      roots_count_mod(Cc, n, Dehom::FirstVar);
        CHECK(lhs == rhs);
      }
    }
    (void)vals;
  }
}

TEST_CASE("roots_mod matches brute force on mixed moduli") {
  std::vector<BinaryCubic> cubics = {
      {1, 0, 0, 1}, {1, 0, -1, 1}, {1, 1, 1, 1}, {3, -2, 0, 4}, {1, 0, 0, -2}};
  for (const auto& C : cubics) {
    for (int64_t n = 1; n <= 200; ++n) {
      CHECK(roots_count_mod(C, n, Dehom::FirstVar) == rho_brute(C, n, Dehom::FirstVar));
      CHECK(roots_count_mod(C, n, Dehom::SecondVar) == rho_brute(C, n, Dehom::SecondVar));
    }
  }
}

TEST_CASE("rho prime-power stability and Huxley bound") {
  std::vector<BinaryCubic> cubics = {{1, 0, 0, 1}, {1, 0, -1, 1}, {1, 0, 0, -2}};
  for (const auto& C : cubics) {
    Int disc = C.discriminant();
    for (uint32_t p : primes_upto(100)) {
      if (p > 100) break;
      int64_t vp_disc = 0;
      {
        Int d = disc.abs();
        while ((d % Int((long long)p)).is_zero()) {
          d = d / Int((long long)p);
          ++vp_disc;
        }
      }
      int64_t rho1 = roots_count_mod(C, p, Dehom::FirstVar);
      int64_t bound = 3;
      for (int i = 0; i < vp_disc / 2; ++i) bound *= p;
      int64_t mod = p;
      for (int v = 2; v <= 4; ++v) {
        mod *= p;
        if (mod > 100000000ll) break;
        int64_t rv = roots_count_mod(C, mod, Dehom::FirstVar);
        int64_t rv2 = roots_count_mod(C, mod, Dehom::SecondVar);
        if (!(disc % Int((long long)p)).is_zero()) CHECK(rv == rho1);
        CHECK(rv <= bound);
        CHECK(rv2 <= bound);
      }
    }
  }
}

TEST_CASE("rho = rho' away from C(1,0) C(0,1)") {
  std::vector<BinaryCubic> cubics = {{1, 0, 0, 1}, {2, 1, -3, 5}, {1, 0, 0, -2}};
  for (const auto& C : cubics) {
    for (uint32_t p : primes_upto(100)) {
      if (p > 100) break;
      if (C.c3 % p == 0 || C.c0 % p == 0) continue;
      int64_t mod = 1;
      for (int v = 1; v <= 3; ++v) {
        mod *= p;
        if (mod > 10000000ll) break;
        CHECK(roots_count_mod(C, mod, Dehom::FirstVar) ==
              roots_count_mod(C, mod, Dehom::SecondVar));
      }
    }
  }
}

TEST_CASE("rho_of_prime equals brute count") {
  std::vector<BinaryCubic> cubics = {
      {1, 0, 0, 1}, {1, 0, -1, 1}, {1, 1, 1, 1}, {3, -2, 0, 4}, {1, 0, 0, -2}};
  for (const auto& C : cubics) {
    for (uint32_t p : primes_upto(300)) {
      if (p > 300) break;
      CHECK(rho_of_prime(C, p) == rho_brute(C, p, Dehom::FirstVar));
    }
  }
}

TEST_CASE("mult_f examples") {
  BinaryCubic C{1, 0, 0, 1};  // x1^3 + x2^3
  CHECK(mult_f(C, 1) == 1);
  CHECK(mult_f(C, 7) == 3);  // roots 3, 5, 6 of x^3 = -1 mod 7
  CHECK(mult_f(C, 5) == 1);
}

TEST_CASE("hensel_lift") {
  // x^3 - 2 has the root 3 mod 5; brute scan of x^3 = 2 mod 25 gives 3.
  {
    int64_t found = -1;
    for (int64_t x = 0; x < 25; ++x)
      if (((x * x * x) % 25 + 25) % 25 == 2) found = x;
    CHECK(found == 3);
  }
  auto r = hensel_lift({-2, 0, 0, 1}, 3, 5, 2);
  REQUIRE(r.has_value());
  CHECK(*r == 3);
  // exact root persists
  auto r2 = hensel_lift({-1, 0, 1}, 1, 3, 3);
  REQUIRE(r2.has_value());
  CHECK(*r2 == 1);
  // singular case x^2, r = 0 mod 3: lifts to 0, 3, 6 mod 9; fallback finds one
  auto r3 = hensel_lift({0, 0, 1}, 0, 3, 2);
  REQUIRE(r3.has_value());
  CHECK(*r3 % 3 == 0);
  CHECK((*r3) * (*r3) % 9 == 0);
  // singular with no lift: x^2 - 3 mod 9, root 0 mod 3
  auto r4 = hensel_lift({-3, 0, 1}, 0, 3, 2);
  CHECK(!r4.has_value());
}

TEST_CASE("fundamental units") {
  auto u2 = fundamental_unit(2);
  CHECK(u2.t == Int(1));
  CHECK(u2.u == Int(1));
  CHECK(u2.norm == -1);
  auto u3 = fundamental_unit(3);
  CHECK(u3.t == Int(2));
  CHECK(u3.u == Int(1));
  CHECK(u3.norm == 1);
  auto u5 = fundamental_unit(5);  // in Z[sqrt(5)]
  CHECK(u5.t == Int(2));
  CHECK(u5.u == Int(1));
  CHECK(u5.norm == -1);
  auto u61 = fundamental_unit(61);
  CHECK(u61.t * u61.t - Int(61) * u61.u * u61.u == Int(u61.norm));
  CHECK_THROWS(fundamental_unit(9));
  CHECK_THROWS(fundamental_unit(1));

  // the +1-norm solutions below 10^6 are generated by the unit
  for (int64_t d : {2, 3, 5, 6, 7, 10, 13}) {
    auto fu = fundamental_unit(d);
    Int t = fu.t, u = fu.u;
    if (fu.norm == -1) {  // square it
      Int t2 = t * t + Int(d) * u * u;
      u = Int(2) * t * u;
      t = t2;
    }
    // iterate (t,u) -> (t*t0 + d u*u0, t*u0 + u*t0)
    std::vector<std::pair<int64_t, int64_t>> gen;
    Int ct = t, cu = u;
    while (ct <= Int(1000000)) {
      gen.push_back({ct.to_int64(), cu.to_int64()});
      Int nt = ct * t + Int(d) * cu * u;
      Int nu = ct * u + cu * t;
      ct = nt;
      cu = nu;
    }
    size_t k = 0;
    for (int64_t x = 2; x <= 1000000; ++x) {
      int64_t y2 = (x * x - 1);
      if (y2 % d) continue;
      int64_t yy = y2 / d;
      int64_t y = static_cast<int64_t>(isqrt_u64(yy));
      if (y * y == yy && y > 0) {
        REQUIRE(k < gen.size());
        CHECK(gen[k].first == x);
        CHECK(gen[k].second == y);
        ++k;
      }
    }
    CHECK(k == gen.size());
  }
}

TEST_CASE("cubic root isolation") {
  // x^3 - 2: single real root 2^(1/3) in (1.2599, 1.2600)
  auto roots = isolate_real_roots({Int(-2), Int(0), Int(0), Int(1)}, 32);
  REQUIRE(roots.size() == 1);
  CHECK(roots[0].lo.to_double_approx() == doctest::Approx(1.259921).epsilon(1e-4));
  // (x-1)(x-2)(x-3) = x^3 - 6x^2 + 11x - 6
  roots = isolate_real_roots({Int(-6), Int(11), Int(-6), Int(1)}, 32);
  REQUIRE(roots.size() == 3);
  CHECK(roots[0].lo.to_double_approx() == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(roots[2].hi.to_double_approx() == doctest::Approx(3.0).epsilon(1e-6));
  CHECK(ceil_of_least_root({Int(-6), Int(11), Int(-6), Int(1)}) == Int(1));
  CHECK(ceil_of_least_root({Int(-2), Int(0), Int(0), Int(1)}) == Int(2));
  CHECK(ceil_of_least_root({Int(8), Int(0), Int(0), Int(1)}) == Int(-2));
}

TEST_CASE("lambda of cubic forms") {
  CHECK(BinaryCubic{1, 0, 0, 1}.lambda() == 2);   // (x+y)(x^2-xy+y^2)
  CHECK(BinaryCubic{1, 0, -1, 1}.lambda() == 1);  // irreducible
  CHECK(BinaryCubic{0, 1, 1, 0}.lambda() == 3);   // x y (x + y)
  CHECK(BinaryCubic{1, 0, 0, -2}.lambda() == 1);
  CHECK(BinaryCubic{1, -6, 11, -6}.lambda() == 3);
}

TEST_CASE("sqrt_mod_prime") {
  for (uint64_t p : {3ull, 5ull, 13ull, 37ull, 101ull, 65537ull}) {
    for (uint64_t a = 1; a < std::min<uint64_t>(p, 50); ++a) {
      if (powmod_u64(a, (p - 1) / 2, p) != 1) continue;
      uint64_t s = sqrt_mod_prime(a, p);
      CHECK(mulmod_u64(s, s, p) == a % p);
    }
  }
}
