#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include "twistscan/arith.hpp"
#include "twistscan/quartic.hpp"

using namespace twistscan;
using namespace twistscan::quartic;

namespace {

uint64_t rng_state = 0x9e3779b97f4a7c15ull;
uint64_t rnd() {
  rng_state ^= rng_state << 13;
  rng_state ^= rng_state >> 7;
  rng_state ^= rng_state << 17;
  return rng_state;
}
int64_t rnd_range(int64_t lo, int64_t hi) {
  return lo + static_cast<int64_t>(rnd() % static_cast<uint64_t>(hi - lo + 1));
}
BinaryQuartic rnd_quartic(int64_t bound) {
  return {Int(rnd_range(-bound, bound)), Int(rnd_range(-bound, bound)),
          Int(rnd_range(-bound, bound)), Int(rnd_range(-bound, bound)),
          Int(rnd_range(-bound, bound))};
}
Unimodular rnd_gamma(int64_t bound) {
  // random word in T^k and S keeps entries modest and det = 1
  Unimodular g = Unimodular::identity();
  for (int i = 0; i < 6; ++i) {
    g = g.mul(Unimodular::translation(Int(rnd_range(-bound, bound))));
    if (rnd() & 1) g = g.mul(Unimodular::inversion());
  }
  return g;
}

}  // namespace

TEST_CASE("invariants fixtures") {
  BinaryQuartic f{1, 0, -2, 6, -12};
  auto inv = invariants(f);
  CHECK(inv.I == Int(0));
  CHECK(inv.J == Int(-4));
  CHECK(inv.Delta == Int(-432));
  f = {1, 0, 0, 0, 1};
  inv = invariants(f);
  CHECK(inv.I == Int(1));
  CHECK(inv.J == Int(0));
  CHECK(inv.Delta == Int(1));
  f = {0, 0, 0, 0, 0};
  inv = invariants(f);
  CHECK(inv.I == Int(0));
  CHECK(inv.J == Int(0));
  CHECK(inv.Delta == Int(0));
}

TEST_CASE("seminvariants fixtures") {
  auto s = seminvariants({1, 0, -2, 6, -12});
  CHECK(s.a == Int(1));
  CHECK(s.H == Int(2));
  CHECK(s.R == Int(6));
  s = seminvariants({1, 0, 0, 0, 1});
  CHECK(s.a == Int(1));
  CHECK(s.H == Int(0));
  CHECK(s.R == Int(0));
  s = seminvariants({2, 1, 0, 0, 1});
  CHECK(s.a == Int(2));
  CHECK(s.H == Int(1));
  CHECK(s.R == Int(2));
}

TEST_CASE("covariant G") {
  auto g = covariant_G({1, 0, 0, 0, 1});
  CHECK(g == std::vector<Int>{Int(0), Int(0), Int(-1), Int(0), Int(0)});
  g = covariant_G({1, 0, -2, 6, -12});
  CHECK(g[0] == Int(2));  // = H
  g = covariant_G({0, 0, 0, 0, 0});
  for (auto& c : g) CHECK(c.is_zero());
  // leading coefficient equals H for random forms
  for (int i = 0; i < 200; ++i) {
    BinaryQuartic f = rnd_quartic(30);
    CHECK(covariant_G(f)[0] == seminvariants(f).H);
  }
}

TEST_CASE("expanded discriminant equals I^3 - 27 J^2") {
  for (int i = 0; i < 2000; ++i) {
    BinaryQuartic f = rnd_quartic(100);
    CHECK(disc_expanded(f) == invariants(f).Delta);
  }
}

TEST_CASE("integral syzygy 64H^3 - 16Ia^2H - 16Ja^3 = 16R^2") {
  for (int i = 0; i < 2000; ++i) {
    BinaryQuartic f = rnd_quartic(100);
    auto inv = invariants(f);
    auto s = seminvariants(f);
    Int lhs = Int(64) * s.H * s.H * s.H - Int(16) * inv.I * s.a * s.a * s.H -
              Int(16) * inv.J * s.a * s.a * s.a;
    CHECK(lhs == Int(16) * s.R * s.R);
  }
}

TEST_CASE("action fixtures") {
  BinaryQuartic f{1, 2, 3, 4, 5};
  CHECK(act(Unimodular::identity(), f) == f);
  // translation b=1 on X^4: (X+Y)^4
  BinaryQuartic x4{1, 0, 0, 0, 0};
  CHECK(act(Unimodular::translation(Int(1)), x4) ==
        BinaryQuartic{1, 1, 1, 1, 1});
  // inversion: (a4, -a3, a2, -a1, a0)
  CHECK(act(Unimodular::inversion(), f) == BinaryQuartic{5, -4, 3, -2, 1});
}

TEST_CASE("action preserves invariants and value; composition order") {
  for (int i = 0; i < 1000; ++i) {
    BinaryQuartic f = rnd_quartic(50);
    Unimodular g = rnd_gamma(20);
    auto inv0 = invariants(f);
    BinaryQuartic h = act(g, f);
    auto inv1 = invariants(h);
    CHECK(inv0.I == inv1.I);
    CHECK(inv0.J == inv1.J);
    CHECK(inv0.Delta == inv1.Delta);
    // act(g, f)(v) = f(g v)
    Int x(rnd_range(-5, 5)), y(rnd_range(-5, 5));
    auto [gx, gy] = g.apply(x, y);
    CHECK(h.eval(x, y) == f.eval(gx, gy));
    // composition: act(g1, act(g2, f)) = act(g2 g1, f)
    Unimodular g2 = rnd_gamma(10);
    CHECK(act(g, act(g2, f)) == act(g2.mul(g), f));
  }
}

TEST_CASE("pointed action preserves the marked value") {
  for (int i = 0; i < 300; ++i) {
    BinaryQuartic f = rnd_quartic(20);
    Unimodular g = rnd_gamma(10);
    Int px(rnd_range(-9, 9)), py(rnd_range(-9, 9));
    PointedForm pf{f, px, py};
    PointedForm qf = act_pointed(g, pf);
    CHECK(qf.form.eval(qf.px, qf.py) == f.eval(px, py));
  }
}

TEST_CASE("mordell_form fixtures") {
  // A=0, B=1, D=1, P=(2,3)
  BinaryQuartic f = mordell_form(Int(2), Int(3), Int(0), Int(1), Int(1));
  CHECK(f == BinaryQuartic{1, 0, -2, 6, -12});
  auto inv = invariants(f);
  CHECK(inv.I == Int(0));
  CHECK(inv.J == Int(-4));
  // A=-2, B=1, D=1, P=(0,1)
  f = mordell_form(Int(0), Int(1), Int(-2), Int(1), Int(1));
  CHECK(f == BinaryQuartic{1, 0, 0, 2, 8});
  inv = invariants(f);
  CHECK(inv.I == Int(8));
  CHECK(inv.J == Int(-4));
  // A=0, B=1, D=2, P=(2,4): 16 = 8 + 8
  f = mordell_form(Int(2), Int(4), Int(0), Int(1), Int(2));
  CHECK(f == BinaryQuartic{1, 0, -2, 8, -12});
  CHECK(invariants(f).J == Int(-32));
  CHECK_THROWS(mordell_form(Int(1), Int(1), Int(0), Int(1), Int(1)));
}

TEST_CASE("lower_disc basics") {
  // M = 1 returns f_P itself
  auto ld = lower_disc(Int(2), Int(3), Int(0), Int(1), Int(1), Int(1));
  CHECK(ld.F == mordell_form(Int(2), Int(3), Int(0), Int(1), Int(1)));
  CHECK(ld.k == Int(0));
  CHECK_THROWS(lower_disc(Int(2), Int(3), Int(0), Int(1), Int(1), Int(-1)));

  // Scan A, B in [-3,3], D <= 60 for points with odd M = |D|/gcd(2x, |D|) > 1
  // (the scan is the oracle for every Lemma property).
  int found = 0;
  for (int64_t A = -3; A <= 3 && found < 25; ++A) {
    for (int64_t B = -3; B <= 3 && found < 25; ++B) {
      if (4 * A * A * A + 27 * B * B == 0) continue;
      for (int64_t D = 2; D <= 60 && found < 25; ++D) {
        if (!arith::is_squarefree_u64(D)) continue;
        for (int64_t x = -50; x <= 1000; ++x) {
          __int128 rhs = (__int128)x * x * x + (__int128)A * D * D * x +
                         (__int128)B * D * D * D;
          __int128 root;
          if (rhs < 0 || !arith::is_square_i128(rhs, &root)) continue;
          int64_t y = (int64_t)root;
          int64_t g2 = std::gcd(2 * x, D);
          int64_t M = D / g2;
          if (M <= 1 || M % 2 == 0) continue;
          auto lf = lower_disc(Int(x), Int(y), Int(A), Int(B), Int(D), Int(M));
          ++found;
          CHECK(lf.F.a0 == Int(M));                       // F(1,0) = M
          CHECK(lf.F.eval(Int(1), Int(0)) == Int(M));
          auto inv = invariants(lf.F);
          Int DM = Int(D) / Int(M);
          CHECK(inv.I == Int(-4) * Int(A) * DM * DM);
          CHECK(inv.J == Int(-4) * Int(B) * DM * DM * DM);
          auto invf = invariants(mordell_form(Int(x), Int(y), Int(A), Int(B), Int(D)));
          CHECK(inv.Delta * Int::pow(Int(M), 6) == invf.Delta);
          // every coefficient of G_F divisible by the odd part of
          // g = gcd(2x, D) (the odd part divides x0 and y0, so each displayed
          // coefficient vanishes mod it; the factor 2 can genuinely fail)
          int64_t g_odd = g2;
          while (g_odd % 2 == 0) g_odd /= 2;
          for (const Int& c : covariant_G(lf.F))
            CHECK((c % Int(g_odd)).is_zero());
          break;
        }
      }
    }
  }
  CHECK(found >= 10);
}

TEST_CASE("canonical_pointed") {
  BinaryQuartic f{3, 1, -2, 6, -12};
  auto c1 = canonical_pointed(f, Int(1), Int(0));
  // idempotent
  auto c2 = canonical_pointed(c1.form, c1.px, c1.py);
  CHECK(c1 == c2);
  // orbit collapse under translations
  for (int b = -5; b <= 5; ++b) {
    BinaryQuartic g = act(Unimodular::translation(Int(b)), f);
    auto c3 = canonical_pointed(g, Int(1), Int(0));
    CHECK(c3 == c1);
  }
  // a general point moves onto (gcd, 0) with the value preserved
  auto c4 = canonical_pointed(f, Int(2), Int(4));
  CHECK(c4.px == Int(2));
  CHECK(c4.py == Int(0));
  CHECK(c4.form.eval(c4.px, c4.py) == f.eval(Int(2), Int(4)));
  CHECK_THROWS(canonical_pointed(f, Int(0), Int(0)));
}

TEST_CASE("reduce") {
  // already minimal
  auto r = reduce({1, 0, 0, 0, 1});
  CHECK(r.f == BinaryQuartic{1, 0, 0, 0, 1});
  CHECK(r.bounds_ok);
  CHECK_THROWS(reduce({0, 0, 0, 0, 0}));

  // randomized roundtrip: blow up a fixed form, reduce, check bounds + orbit
  BinaryQuartic base{1, 0, -2, 6, -12};
  for (int i = 0; i < 300; ++i) {
    Unimodular g = rnd_gamma(50);
    BinaryQuartic f = act(g, base);
    auto red = reduce(f);
    CHECK(red.bounds_ok);
    CHECK(act(red.gamma, f) == red.f);
    auto inv0 = invariants(f);
    auto inv1 = invariants(red.f);
    CHECK(inv0.I == inv1.I);
    CHECK(inv0.J == inv1.J);
  }
  // and on random nondegenerate forms
  for (int i = 0; i < 300; ++i) {
    BinaryQuartic f = rnd_quartic(40);
    if (invariants(f).Delta.is_zero()) continue;
    Unimodular g = rnd_gamma(30);
    BinaryQuartic h = act(g, f);
    auto red = reduce(h);
    CHECK(act(red.gamma, h) == red.f);
    CHECK(invariants(red.f).Delta == invariants(f).Delta);
    CHECK(red.bounds_ok);
  }
}

TEST_CASE("syzygy_descend") {
  // g = 1, F_red = (1,0,-2,6,-12): A=0, B=1 -> (h,a,r) = (2,1,3)
  auto d = syzygy_descend({1, 0, -2, 6, -12}, Int(1));
  CHECK(d.h == Int(2));
  CHECK(d.a == Int(1));
  CHECK(d.r == Int(3));
  CHECK(!d.torsion);
  // torsion branch r = 0: X^4 + Y^4 has R = 0, I = 1, J = 0 -> needs
  // I = -4Ag^2: 1 not divisible by 4 -> error names the claim
  CHECK_THROWS(syzygy_descend({1, 0, 0, 0, 1}, Int(1)));
  // X^4 - Y^4: I = -1... also not of pipeline shape; build a valid torsion
  // case from a 2-torsion point instead: A=-1,B=0,D=1,P=(1,0)
  auto f = mordell_form(Int(1), Int(0), Int(-1), Int(0), Int(1));
  auto red = reduce(f);
  auto dt = syzygy_descend(red.f, Int(1));
  CHECK(dt.torsion);
}

TEST_CASE("thue_enumerate") {
  BinaryQuartic f{1, 0, 0, 0, 1};  // X^4 + Y^4
  auto sols = thue_enumerate(f, Int(1));
  CHECK(sols.size() == 5);  // (0,0), (+-1,0), (0,+-1)
  sols = thue_enumerate(f, Int(17));
  // brute oracle over a generous box
  std::vector<std::pair<Int, Int>> brute;
  for (int64_t x = -10; x <= 10; ++x)
    for (int64_t y = -10; y <= 10; ++y)
      if (x * x * x * x + y * y * y * y <= 17) brute.push_back({Int(x), Int(y)});
  std::sort(brute.begin(), brute.end());
  CHECK(sols == brute);
  CHECK(sols.size() == 21);  // includes the eight |F| = 17 points

  // pipeline identity: f_P(1, 0) = 1
  BinaryQuartic fp{1, 0, -2, 6, -12};
  auto s2 = thue_enumerate(fp, Int(1));
  bool has10 = false;
  for (auto& [x, y] : s2) has10 |= (x == Int(1) && y == Int(0));
  CHECK(has10);
  // closed under negation
  for (auto& [x, y] : s2) {
    bool found = false;
    for (auto& [u, v] : s2) found |= (u == -x && v == -y);
    CHECK(found);
  }
  // brute comparison for the pipeline form
  std::vector<std::pair<Int, Int>> brute2;
  for (int64_t x = -60; x <= 60; ++x)
    for (int64_t y = -60; y <= 60; ++y) {
      Int v = fp.eval(Int(x), Int(y));
      if (v.abs() <= Int(1)) brute2.push_back({Int(x), Int(y)});
    }
  std::sort(brute2.begin(), brute2.end());
  CHECK(s2 == brute2);

  // degenerate rejections
  CHECK_THROWS(thue_enumerate({0, 1, 0, 0, 1}, Int(5)));       // a0 = 0 ray
  CHECK_THROWS(thue_enumerate_form({Int(1), Int(0), Int(0), Int(0), Int(0)},
                                   Int(5)));                   // y | F
}
