#include "twistscan/selfcheck.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <sstream>

#include "twistscan/arith.hpp"
#include "twistscan/charsum.hpp"
#include "twistscan/descent.hpp"
#include "twistscan/pell.hpp"
#include "twistscan/quartic.hpp"
#include "twistscan/surface.hpp"
#include "twistscan/twists.hpp"

namespace twistscan::selfcheck {

namespace {

struct Rng {
  uint64_t state;
  uint64_t next() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  }
  int64_t range(int64_t lo, int64_t hi) {
    return lo + (int64_t)(next() % (uint64_t)(hi - lo + 1));
  }
};

using Check = std::function<bool(const Options&, std::string&)>;

bool arith_suite(const Options& opt, std::string& detail) {
  Rng rng{opt.seed * 2654435761ull + 1};
  // jacobi multiplicativity
  for (int i = 0; i < 10000; ++i) {
    int64_t a = rng.range(-1000, 1000), b = rng.range(-1000, 1000);
    uint64_t n = 2 * (rng.next() % 500) + 1;
    if (arith::jacobi_i64(a * b, n) !=
        arith::jacobi_i64(a, n) * arith::jacobi_i64(b, n)) {
      detail = "jacobi multiplicativity failed";
      return false;
    }
  }
  // squarefree_part roundtrip
  for (int64_t n = -2000; n <= 2000; ++n) {
    if (n == 0) continue;
    auto d = arith::squarefree_part(Int(n));
    if (d.s * d.f * d.f != Int(n)) {
      detail = "squarefree_part roundtrip failed";
      return false;
    }
  }
  // rho multiplicativity (injectable fault for the harness test)
  arith::BinaryCubic C{1, 0, 0, opt.inject_fault ? -3 : -2};
  for (int64_t m = 1; m <= 40; ++m) {
    for (int64_t n = 1; n <= 40; ++n) {
      if (std::gcd(m, n) != 1) continue;
      int64_t lhs = arith::roots_count_mod(C, m * n, arith::Dehom::FirstVar);
      int64_t rhs = arith::roots_count_mod(C, m, arith::Dehom::FirstVar) *
                    arith::roots_count_mod(C, n, arith::Dehom::FirstVar);
      int64_t want = opt.inject_fault ? rhs + 1 : rhs;
      if (lhs != want) {
        detail = "rho multiplicativity failed at m=" + std::to_string(m) +
                 " n=" + std::to_string(n);
        return false;
      }
    }
  }
  detail = "jacobi, squarefree, rho batteries passed";
  return true;
}

bool quartic_suite(const Options& opt, std::string& detail) {
  Rng rng{opt.seed * 0x9e3779b97f4a7c15ull + 7};
  using namespace quartic;
  for (int i = 0; i < 2000; ++i) {
    BinaryQuartic f{Int(rng.range(-100, 100)), Int(rng.range(-100, 100)),
                    Int(rng.range(-100, 100)), Int(rng.range(-100, 100)),
                    Int(rng.range(-100, 100))};
    auto inv = invariants(f);
    if (disc_expanded(f) != inv.Delta) {
      detail = "expanded discriminant mismatch";
      return false;
    }
    auto s = seminvariants(f);
    Int lhs = Int(64) * s.H * s.H * s.H - Int(16) * inv.I * s.a * s.a * s.H -
              Int(16) * inv.J * s.a * s.a * s.a;
    if (lhs != Int(16) * s.R * s.R) {
      detail = "syzygy failed";
      return false;
    }
    if (covariant_G(f)[0] != s.H) {
      detail = "covariant leading coefficient != H";
      return false;
    }
  }
  detail = "invariant identities on 2000 random quartics";
  return true;
}

bool surface_suite(const Options&, std::string& detail) {
  using namespace surface;
  arith::BinaryCubic fermat{1, 0, 0, 1}, irred{1, 0, -1, 1}, split{0, 1, 1, 0};
  for (const arith::BinaryCubic* C : {&fermat, &irred, &split}) {
    for (int64_t B : {10, 20, 40}) {
      if (count_via_lattices(*C, B) != brute_count(*C, B).count) {
        detail = "descent counter disagrees with brute force";
        return false;
      }
    }
  }
  if (brute_count(fermat, 2).count != 12) {
    detail = "N(2) fixture failed";
    return false;
  }
  detail = "descent counter equals brute force on three cubics";
  return true;
}

bool twists_suite(const Options&, std::string& detail) {
  using namespace twists;
  for (auto [A, B] : std::vector<std::pair<int64_t, int64_t>>{{1, 2}, {1, 3}}) {
    for (int64_t D : {2, 6, -5}) {
      TwistCurve c{Model::Full, A, B, D};
      if (integral_points(c, 20000) != integral_points_bruteforce(c, 20000)) {
        detail = "structured full-model scan disagrees with x-loop";
        return false;
      }
    }
  }
  TwistCurve c{Model::Partial, 1, 1, 111};
  bool found = false;
  for (auto& p : integral_points(c, 200))
    found |= (p.x == 148 && p.y == 2738);
  if (!found) {
    detail = "partial fixture point missing";
    return false;
  }
  detail = "scan engines agree; fixture points present";
  return true;
}

bool descent_suite(const Options&, std::string& detail) {
  using namespace descent;
  using twists::Model;
  auto corpus = twists::scan_family(Model::Full, 1, 2, 60, 1000000, 1);
  for (auto& cp : corpus.curves) {
    if (cp.D <= 0) continue;
    twists::TwistCurve curve{Model::Full, 1, 2, cp.D};
    for (auto& p : cp.pts) {
      if (p.torsion) continue;
      auto d = full2_decompose(p.x, p.y, curve);
      if (!d.compact) {
        auto tc = triple_classes(d, 1, 2);
        if (indicator_triple(tc.n1, tc.n2, tc.n3, tc.R) != Rat(Int(1))) {
          detail = "indicator not 1 on a real point";
          return false;
        }
      }
    }
  }
  twists::TwistCurve pc{Model::Partial, 1, 1, 111};
  auto pd = partial_decompose(148, 2738, pc);
  if (!(pd.g == 37 && pd.xt == 4 && pd.Dt == 3 && pd.delta == 1 &&
        pd.g1 == 1 && pd.y1 == 2 && pd.g2 == 37 && pd.y2 == 1)) {
    detail = "partial fixture decomposition mismatch";
    return false;
  }
  if (!local_conditions_partial(pd, 1, 1)) {
    detail = "partial fixture local conditions failed";
    return false;
  }
  detail = "decompositions, indicators, partial fixture passed";
  return true;
}

bool pell_suite(const Options&, std::string& detail) {
  auto s = pell::enumerate_solutions(1, 2, Int(1), Int(100));
  if (s.size() != 3 || s[0] != std::pair<Int, Int>{Int(3), Int(2)}) {
    detail = "x^2 - 2y^2 = 1 fixture failed";
    return false;
  }
  auto sim = pell::simultaneous_solve(1, 2, Int(1), 1, 3, Int(1), Int(1000000));
  if (sim.size() != 1 || sim[0][0] != Int(3)) {
    detail = "simultaneous fixture failed";
    return false;
  }
  detail = "pell fixtures passed";
  return true;
}

bool charsum_suite(const Options&, std::string& detail) {
  using namespace descent;
  auto ts = truncated_S(spec_pair_demo(), 3);
  if (ts.S != Rat(Int(3))) {
    detail = "S(3) != 3 on the pair spec";
    return false;
  }
  auto rep = unlinked_max_sets(spec_full12(1, 2, 1, 1, 1, 1));
  if (rep.M != 4 || rep.maximum_sets.size() != 9) {
    detail = "12-index maximum sets wrong";
    return false;
  }
  auto rep32 = unlinked_max_sets(spec_foursquare32(1, 2));
  if (rep32.M != 8) {
    detail = "32-index maximum size wrong";
    return false;
  }
  detail = "linkage combinatorics and S(N) fixtures passed";
  return true;
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"arith", "quartic", "surface", "twists", "descent", "pell",
          "charsum"};
}

std::vector<SuiteResult> run_suites(const Options& opt,
                                    const std::vector<std::string>& only) {
  std::vector<std::pair<std::string, Check>> checks = {
      {"arith", arith_suite},     {"quartic", quartic_suite},
      {"surface", surface_suite}, {"twists", twists_suite},
      {"descent", descent_suite}, {"pell", pell_suite},
      {"charsum", charsum_suite}};
  std::vector<SuiteResult> out;
  for (auto& [name, fn] : checks) {
    if (!only.empty() &&
        std::find(only.begin(), only.end(), name) == only.end())
      continue;
    SuiteResult r;
    r.name = name;
    auto t0 = std::chrono::steady_clock::now();
    try {
      r.ok = fn(opt, r.detail);
    } catch (const std::exception& e) {
      r.ok = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    out.push_back(r);
  }
  return out;
}

}  // namespace twistscan::selfcheck
