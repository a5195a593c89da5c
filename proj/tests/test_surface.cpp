#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <set>

#include "twistscan/surface.hpp"

using namespace twistscan;
using namespace twistscan::arith;
using namespace twistscan::surface;

namespace {
const BinaryCubic kFermat{1, 0, 0, 1};   // x1^3 + x2^3, lambda = 2
const BinaryCubic kIrred{1, 0, -1, 1};   // x1^3 - x1 x2^2 + x2^3, lambda = 1
const BinaryCubic kSplit{0, 1, 1, 0};    // x1 x2 (x1 + x2), lambda = 3
}  // namespace

TEST_CASE("brute_count fixtures") {
  CHECK(brute_count(kFermat, 2).count == 12);
  CHECK(brute_count(kFermat, 1).count == 8);
  BinaryCubic big{1, 0, 0, 60};  // x1^3 + 60 x2^3
  CHECK(brute_count(big, 1).count == 4);  // only (+-1, 0), x3 = +-1, x4 = +-1
  CHECK_THROWS(brute_count({1, 0, 0, 0}, 5));  // x1^3 not separable
}

TEST_CASE("brute solutions satisfy h1^3 h2^2 | x3") {
  auto res = brute_count(kFermat, 20, true);
  REQUIRE(res.count > 0);
  for (auto& s : res.solutions) {
    int64_t g = std::gcd(std::llabs(s.x1), std::llabs(s.x2));
    REQUIRE(g >= 1);
    int64_t h2 = squarefree_part_i64(g);
    REQUIRE(g % h2 == 0);
    int64_t h1s = g / h2;
    int64_t h1 = (int64_t)isqrt_u64((uint64_t)h1s);
    REQUIRE(h1 * h1 == h1s);
    CHECK(s.x3 % (h1 * h1 * h1 * h2 * h2) == 0);
  }
}

TEST_CASE("normalize_cubic") {
  auto [c0, b0] = normalize_cubic(kFermat);
  CHECK(b0 == 0);
  CHECK(c0.c3 == kFermat.c3);
  auto [c1, b1] = normalize_cubic(kSplit);
  CHECK(c1.c3 != 0);
  CHECK(std::llabs(b1) <= 3);
  CHECK(c1.separable());
  CHECK(c1.lambda() == 3);
  CHECK_THROWS(normalize_cubic({0, 0, 1, 0}));  // x1 x2^2 not separable
}

TEST_CASE("lattice_cover examples") {
  CHECK(lattice_cover(kFermat, 1).size() == 1);
  CHECK(lattice_cover(kFermat, 7).size() == 3);  // roots 3, 5, 6 of x^3 = -1
  CHECK(lattice_cover(kFermat, 5).size() == 1);
}

TEST_CASE("lattice_cover soundness and disjointness") {
  for (const BinaryCubic* C : {&kFermat, &kIrred, &kSplit}) {
    for (int64_t d = 1; d <= 80; ++d) {
      auto cover = lattice_cover(*C, d);
      for (auto& L : cover) CHECK(L.det() == d);
      for (int64_t y1 = -d; y1 <= d; ++y1) {
        for (int64_t y2 = -d; y2 <= d; ++y2) {
          if (std::gcd(std::llabs(y1), std::llabs(y2)) != 1) continue;
          __int128 v = C->eval(y1, y2);
          bool divides = (v % d) == 0;
          int member = 0;
          for (auto& L : cover) {
            __int128 det = (__int128)L.b1x * L.b2y - (__int128)L.b1y * L.b2x;
            __int128 s = (__int128)y1 * L.b2y - (__int128)y2 * L.b2x;
            __int128 t = (__int128)y2 * L.b1x - (__int128)y1 * L.b1y;
            if (s % det == 0 && t % det == 0) ++member;
          }
          if (divides) CHECK(member == 1);
          else CHECK(member == 0);
        }
      }
    }
  }
}

TEST_CASE("lattice_cover cardinality bound (mult_f)") {
  for (const BinaryCubic* C : {&kFermat, &kIrred}) {
    for (int64_t d = 1; d <= 200; ++d)
      CHECK((int64_t)lattice_cover(*C, d).size() <= mult_f(*C, d));
  }
}

TEST_CASE("count_via_lattices equals brute_count") {
  for (const BinaryCubic* C : {&kFermat, &kIrred, &kSplit}) {
    for (int64_t B : {10, 20, 40, 60}) {
      CAPTURE(C->c0);
      CAPTURE(B);
      CHECK(count_via_lattices(*C, B) == brute_count(*C, B).count);
    }
  }
}

TEST_CASE("minkowski_small") {
  auto [x, y] = minkowski_small({1, 0, 0, 1});
  CHECK(std::max(std::llabs(x), std::llabs(y)) == 1);
  auto [x2, y2] = minkowski_small({49, 0, 5, 1});
  CHECK(std::max(std::llabs(x2), std::llabs(y2)) <= 14);
  CHECK(!(x2 == 0 && y2 == 0));
  auto [x3, y3] = minkowski_small({1000, 0, 0, 1});
  CHECK(std::llabs(x3) + std::llabs(y3) == 1);  // (0, +-1)
}

TEST_CASE("lower_bound_construct") {
  auto sols = lower_bound_construct(kFermat, 60);
  std::set<std::tuple<int64_t, int64_t, int64_t, int64_t>> seen;
  for (auto& s : sols) {
    CHECK(kFermat.eval(s.x1, s.x2) == (__int128)s.x3 * s.x3 * s.x4);
    CHECK(s.x4 != 0);
    CHECK(std::gcd(std::gcd(std::llabs(s.x1), std::llabs(s.x2)),
                   std::llabs(s.x4)) == 1);
    CHECK(seen.insert({s.x1, s.x2, s.x3, s.x4}).second);
  }
  // roots mod 49 lift from mod 7: with a box wide enough for the fallback
  // vector of the root on the rational zero ray, all three roots contribute
  auto wide = lower_bound_construct(kFermat, 2000);
  int64_t at7 = 0;
  for (auto& s : wide)
    if (s.x3 == 7) ++at7;
  CHECK(at7 >= 3);
  // emissions are solutions counted by brute_count
  auto brute = brute_count(kFermat, 60, true).solutions;
  std::set<std::tuple<int64_t, int64_t, int64_t, int64_t>> bset;
  for (auto& s : brute) bset.insert({s.x1, s.x2, s.x3, s.x4});
  for (auto& s : sols) {
    // brute keeps the x3 > 0 representative; ours are x3 > 0 already
    CHECK(bset.count({s.x1, s.x2, s.x3, s.x4}) == 1);
  }
}

TEST_CASE("growth_table") {
  auto rows = growth_table(kFermat, {10, 20});
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].B == 10);
  CHECK(rows[0].count == count_via_lattices(kFermat, 10));
  CHECK_THROWS(growth_table(kFermat, {20, 10}));
}
