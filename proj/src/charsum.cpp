#include "twistscan/charsum.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "twistscan/arith.hpp"

namespace twistscan::descent {

void LinkageSpec::validate() const {
  size_t n = names.size();
  if (n == 0 || n > 64) throw std::invalid_argument("spec: 1 <= |I| <= 64");
  if (Phi.size() != n) throw std::invalid_argument("spec: Phi size");
  for (size_t i = 0; i < n; ++i) {
    if (Phi[i].size() != n) throw std::invalid_argument("spec: Phi row size");
    if (Phi[i][i] != 0) throw std::invalid_argument("spec: Phi diagonal");
  }
  for (auto& J : J_sets)
    for (int j : J)
      if (j < 0 || (size_t)j >= n) throw std::invalid_argument("spec: J index");
}

// ---------------------------------------------------------------------------
// Maximal unlinked sets: Bron-Kerbosch with pivoting on the unlinked graph.

namespace {

void bron_kerbosch(uint64_t R, uint64_t P, uint64_t X,
                   const std::vector<uint64_t>& adj,
                   std::vector<std::vector<int>>& out) {
  if (P == 0 && X == 0) {
    std::vector<int> clique;
    for (int v = 0; v < 64; ++v)
      if (R >> v & 1) clique.push_back(v);
    out.push_back(clique);
    return;
  }
  uint64_t PX = P | X;
  int pivot = __builtin_ctzll(PX);
  uint64_t best = P & ~adj[pivot];
  for (int v = 0; v < 64; ++v) {
    if (!(PX >> v & 1)) continue;
    uint64_t cand = P & ~adj[v];
    if (__builtin_popcountll(cand) < __builtin_popcountll(best)) {
      best = cand;
      pivot = v;
    }
  }
  (void)pivot;
  uint64_t work = best;
  while (work) {
    int v = __builtin_ctzll(work);
    work &= work - 1;
    bron_kerbosch(R | (1ull << v), P & adj[v], X & adj[v], adj, out);
    P &= ~(1ull << v);
    X |= 1ull << v;
  }
}

}  // namespace

UnlinkedReport unlinked_max_sets(const LinkageSpec& spec) {
  spec.validate();
  int n = (int)spec.size();
  std::vector<uint64_t> adj(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && !spec.linked(i, j)) adj[i] |= 1ull << j;
  UnlinkedReport rep;
  uint64_t all = n == 64 ? ~0ull : (1ull << n) - 1;
  bron_kerbosch(0, all, 0, adj, rep.maximal_sets);
  for (auto& s : rep.maximal_sets)
    rep.M = std::max(rep.M, (int)s.size());
  for (auto& s : rep.maximal_sets)
    if ((int)s.size() == rep.M) rep.maximum_sets.push_back(s);
  std::sort(rep.maximum_sets.begin(), rep.maximum_sets.end());
  std::sort(rep.maximal_sets.begin(), rep.maximal_sets.end());
  return rep;
}

// ---------------------------------------------------------------------------
// Admissibility.

namespace {

bool rat_is_square(const Rat& r, Rat* root = nullptr) {
  if (r.sign() < 0) return false;
  auto [ns, ne] = Int::sqrt_floor(r.num());
  if (!ne) return false;
  auto [ds, de] = Int::sqrt_floor(r.den());
  if (!de) return false;
  if (root) *root = Rat(ns, ds);
  return true;
}

// conductor of Q(sqrt m), m square-free != 1: |m| if m = 1 mod 4 else 4|m|
Int quad_conductor(const Int& m) {
  Int am = m.abs();
  bool one_mod4 = Int::mod_nonneg(m, Int(4)) == Int(1);
  return one_mod4 ? am : Int(4) * am;
}

// sqrt(alpha) in Q(zeta_c) for rational alpha: the square-free part m of
// alpha must satisfy cond(Q(sqrt m)) | c.
bool rational_sqrt_in_cyclotomic(const Rat& alpha, const Int& c) {
  if (alpha.is_zero()) return true;
  Int m = arith::squarefree_part(alpha.num() * alpha.den()).s;
  if (m == Int(1)) return true;
  if (c.is_zero()) return false;
  return (c % quad_conductor(m)).is_zero();
}

// alpha = u + v sqrt(d) a square in Q(sqrt d)?
bool in_K_square(const Rat& u, const Rat& v, const Int& d) {
  if (v.is_zero()) {
    // rational alpha: square iff alpha or alpha/d is a rational square
    return rat_is_square(u) || rat_is_square(u / Rat(d));
  }
  // (p + q sqrt d)^2 = alpha: p^2 + d q^2 = u, 2 p q = v
  Rat disc = u * u - Rat(d) * v * v;  // = (p^2 - d q^2)^2
  Rat w;
  if (!rat_is_square(disc, &w)) return false;
  for (const Rat& ww : {w, -w}) {
    Rat p2 = (u + ww) * Rat(Int(1), Int(2));
    Rat p;
    if (!rat_is_square(p2, &p)) continue;
    if (p.is_zero()) continue;
    Rat q = v / (Rat(Int(2)) * p);
    if (p * p + Rat(d) * q * q == u) return true;
  }
  return false;
}

// sqrt(alpha) in K(zeta_c) for alpha in K = Q(sqrt d): test alpha / m in K^2
// over square-free rational twists m with cond(Q(sqrt m)) | c (the
// specialization the pipelines use; the norm forces m^2 | N(alpha) modulo
// squares).
bool quadratic_sqrt_in_cyclotomic(const Rat& u, const Rat& v, const Int& d,
                                  const Int& c) {
  if (in_K_square(u, v, d)) return true;
  // enumerate candidate twists from the square-free kernel of the norm
  Rat norm = u * u - Rat(d) * v * v;
  if (norm.is_zero()) return false;
  // m must satisfy N(alpha)/m^2 in Q^2, so sqfree(N) = 1 and |m| | kernel f
  auto decomp = arith::squarefree_part(norm.num() * norm.den());
  std::vector<Int> mags;
  Int f = decomp.f;
  for (Int i(1); i * i <= f; i += Int(1)) {
    if (!(f % i).is_zero()) continue;
    mags.push_back(i);
    if (i * i != f) mags.push_back(f / i);
  }
  for (const Int& mag : mags) {
    Int m = arith::squarefree_part(mag == Int(0) ? Int(1) : mag).s;
    for (int sgn : {1, -1}) {
      Int mm = sgn > 0 ? m : -m;
      if (mm == Int(1)) continue;  // already tested
      if (!(c % quad_conductor(mm)).is_zero()) continue;
      Rat rm(mm);
      if (in_K_square(u / rm, v / rm, d)) return true;
    }
  }
  return false;
}

bool sqrt_in_cyclotomic(const SquareClassDatum& a) {
  if (!a.quadratic) return rational_sqrt_in_cyclotomic(a.r, a.c);
  return quadratic_sqrt_in_cyclotomic(a.qu, a.qv, a.disc, a.c);
}

SquareClassDatum product_datum(const SquareClassDatum& x,
                               const SquareClassDatum& y) {
  SquareClassDatum p;
  if (!x.quadratic && !y.quadratic) {
    p.r = x.r * y.r;
  } else if (x.quadratic && y.quadratic && x.disc == y.disc) {
    p.quadratic = true;
    p.disc = x.disc;
    p.qu = x.qu * y.qu + Rat(x.disc) * x.qv * y.qv;
    p.qv = x.qu * y.qv + x.qv * y.qu;
  } else if (x.quadratic != y.quadratic) {
    const SquareClassDatum& q = x.quadratic ? x : y;
    const SquareClassDatum& r = x.quadratic ? y : x;
    p.quadratic = true;
    p.disc = q.disc;
    p.qu = q.qu * r.r;
    p.qv = q.qv * r.r;
  } else {
    throw std::invalid_argument("admissible: mixed quadratic fields");
  }
  // c for the compositum: least common multiple
  Int g = Int::gcd(x.c, y.c);
  p.c = x.c * y.c / (g.is_zero() ? Int(1) : g);
  return p;
}

}  // namespace

Admissibility admissible(const LinkageSpec& spec, const std::vector<int>& U) {
  spec.validate();
  for (size_t a = 0; a < U.size(); ++a)
    for (size_t b = a + 1; b < U.size(); ++b)
      if (spec.linked(U[a], U[b]))
        throw std::invalid_argument("admissible: U is not unlinked");
  Admissibility res;
  std::string why;
  for (auto& J : spec.J_sets) {
    bool inside = true;
    for (int u : U) inside &= std::count(J.begin(), J.end(), u) > 0;
    if (inside && !J.empty()) res.inside_J = true;
  }
  // (P3): singles with Phi(i, j) = 0 for all j in U
  for (int i : U) {
    bool all_zero = true;
    for (int j : U) all_zero &= spec.Phi[i][j] == 0;
    if (!all_zero) continue;
    if (!sqrt_in_cyclotomic(spec.alpha[i])) {
      if (!why.empty()) why += ",";
      why += "P3(" + spec.names[i] + ")";
    }
  }
  // (P4): pairs with identical Phi rows on U
  for (size_t a = 0; a < U.size(); ++a) {
    for (size_t b = a + 1; b < U.size(); ++b) {
      int i = U[a], j = U[b];
      bool same = true;
      for (int k : U) same &= spec.Phi[i][k] == spec.Phi[j][k];
      if (!same) continue;
      SquareClassDatum prod = product_datum(spec.alpha[i], spec.alpha[j]);
      if (!sqrt_in_cyclotomic(prod)) {
        if (!why.empty()) why += ",";
        why += "P4(" + spec.names[i] + "," + spec.names[j] + ")";
      }
    }
  }
  res.ok = why.empty();
  res.reason = why;
  return res;
}

// ---------------------------------------------------------------------------
// Truncated sums.

namespace {

struct PrimeData {
  int64_t p;
  // per index: weight numerator is 1 with denominator shift (log2 of base)
  // or the prime is filtered out (weight zero)
  std::vector<int> denom_shift;  // -1 = filtered out
  std::vector<int> chi;          // character value in {-1, 0, 1}
};

int artin_value(int64_t p, int64_t A, int64_t B) {
  // zero unless p splits completely in K(sqrt B)
  __int128 disc128 = (__int128)A * A - 4 * (__int128)B;
  int64_t disc = (int64_t)disc128;
  if (arith::jacobi_i64(disc, (uint64_t)p) != 1) return 0;
  if (arith::jacobi_i64(B, (uint64_t)p) != 1) return 0;
  uint64_t pm = (uint64_t)p;
  uint64_t dm = (uint64_t)(((disc % p) + p) % p);
  uint64_t s = arith::sqrt_mod_prime(dm, pm);
  uint64_t inv2 = arith::invmod_i64(2, p);
  uint64_t am = arith::mulmod_u64(((((-A) % p) + p) % p + s) % pm, inv2, pm);
  return arith::jacobi_i64((int64_t)am, pm);
}

}  // namespace

TruncatedSum truncated_S(const LinkageSpec& spec, int64_t N) {
  spec.validate();
  if (N < 1) throw std::invalid_argument("truncated_S: N >= 1");
  int n_idx = (int)spec.size();
  Int two_beta(2);
  for (const Int& b : spec.betas) two_beta *= b;
  // accumulators: numerator over the fixed denominator 2^CAP
  constexpr int CAP = 120;
  Int acc(0), acc_main(0), tuples(0);

  // admissible maximum unlinked sets outside every J: supports for the main
  // term
  UnlinkedReport rep = unlinked_max_sets(spec);
  std::vector<uint64_t> main_supports;
  for (auto& U : rep.maximum_sets) {
    Admissibility ad = admissible(spec, U);
    if (ad.ok && !ad.inside_J) {
      uint64_t mask = 0;
      for (int u : U) mask |= 1ull << u;
      main_supports.push_back(mask);
    }
  }

  std::vector<uint64_t> J_masks;
  for (auto& J : spec.J_sets) {
    uint64_t m = 0;
    for (int j : J) m |= 1ull << j;
    J_masks.push_back(m);
  }

  for (int64_t n = 1; n <= N; ++n) {
    if (!arith::is_squarefree_u64((uint64_t)n)) continue;
    if (Int::gcd(Int(n), two_beta) != Int(1)) continue;
    std::vector<PrimeData> pd;
    for (auto& [pu, e] : arith::factorize_u64((uint64_t)n)) {
      PrimeData d;
      d.p = (int64_t)pu;
      d.denom_shift.resize(n_idx);
      d.chi.resize(n_idx);
      for (int i = 0; i < n_idx; ++i) {
        const IndexWeight& w = spec.weights[i];
        int shift = 0;
        bool filtered = false;
        for (const Int& dd : w.sandwich)
          if (arith::jacobi(dd, Int(d.p)) != 1) filtered = true;
        if (!filtered && w.base > 1) {
          bool counted = true;
          if (!w.omega_top.is_zero())
            counted = arith::jacobi(w.omega_top, Int(d.p)) == 1;
          if (counted) {
            int b = w.base;
            while (b > 1) {
              if (b % 2) throw std::logic_error("weights: base must be 2^k");
              b /= 2;
              ++shift;
            }
          }
        }
        d.denom_shift[i] = filtered ? -1 : shift;
        const IndexCharacter& ch = spec.chars[i];
        int c = arith::jacobi(ch.jacobi_top, Int(d.p));
        if (ch.artin && c != 0) c *= artin_value(d.p, ch.artin_A, ch.artin_B);
        d.chi[i] = c;
      }
      pd.push_back(d);
    }
    int r = (int)pd.size();
    // pairwise Legendre symbols between the primes of n
    std::vector<std::vector<int>> leg(r, std::vector<int>(r, 1));
    for (int a = 0; a < r; ++a)
      for (int b = 0; b < r; ++b)
        if (a != b) leg[a][b] = arith::jacobi_i64(pd[a].p, (uint64_t)pd[b].p);
    // recursive assignment of primes to indices
    std::vector<int> assign(r, 0);
    auto rec = [&](auto&& self, int k, int sign, int shift) -> void {
      if (k == r) {
        // exclusions: prod_{i not in J} D_i != 1
        for (uint64_t Jm : J_masks) {
          bool outside = false;
          for (int t = 0; t < r; ++t) outside |= !(Jm >> assign[t] & 1);
          if (!outside) return;
        }
        tuples += Int(1);
        if (sign != 0) acc += Int(sign) << (unsigned)(CAP - shift);
        // main term: support inside one of the admissible maximum sets
        uint64_t support = 0;
        for (int t = 0; t < r; ++t) support |= 1ull << assign[t];
        for (uint64_t Um : main_supports) {
          if ((support & ~Um) == 0) {
            if (sign != 0) acc_main += Int(sign) << (unsigned)(CAP - shift);
          }
        }
        return;
      }
      for (int i = 0; i < n_idx; ++i) {
        if (pd[k].denom_shift[i] < 0) continue;  // weight zero
        int s2 = sign * pd[k].chi[i];
        int sh2 = shift + pd[k].denom_shift[i];
        // linkage symbols with primes already placed
        if (s2 != 0) {
          for (int t = 0; t < r && s2 != 0; ++t) {
            if (t >= k) break;
            int j = assign[t];
            if (spec.Phi[j][i]) s2 *= leg[t][k];  // (D_j / D_i) gains (p_t/p_k)
            if (spec.Phi[i][j]) s2 *= leg[k][t];  // (D_i / D_j) gains (p_k/p_t)
          }
        }
        assign[k] = i;
        self(self, k + 1, s2, sh2);
      }
    };
    rec(rec, 0, 1, 0);
  }
  TruncatedSum out;
  out.S = Rat(acc, Int(1) << CAP);
  out.main_term = Rat(acc_main, Int(1) << CAP);
  out.tuple_count = tuples;
  return out;
}

// ---------------------------------------------------------------------------
// Concrete specs.

LinkageSpec spec_pair_demo() {
  LinkageSpec s;
  s.names = {"1", "2"};
  s.Phi = {{0, 1}, {0, 0}};
  s.alpha.resize(2);
  s.alpha[0].r = Rat(Int(1));
  s.alpha[1].r = Rat(Int(1));
  s.weights.resize(2);
  s.chars.resize(2);
  s.betas = {Int(1), Int(1)};
  return s;
}

LinkageSpec spec_full12(int64_t A, int64_t B, int64_t Dt, int64_t gamma1,
                        int64_t gamma2, int64_t gamma3) {
  LinkageSpec s;
  const int firsts[3] = {1, 2, 3};
  // R table
  int64_t R[4][5] = {};
  R[1][3] = -A * Dt * gamma2;
  R[1][2] = -B * Dt * gamma3;
  R[2][1] = -(B - A) * Dt * gamma3;
  R[2][3] = A * Dt * gamma1;
  R[3][2] = B * Dt * gamma1;
  R[3][1] = (B - A) * Dt * gamma2;
  for (int i : firsts) {
    R[i][0] = 1;
    __int128 prod = 1;
    for (int k : firsts)
      if (k != i) prod *= R[i][k];
    R[i][4] = (int64_t)prod;
  }
  std::vector<std::pair<int, int>> idx;
  for (int i : firsts)
    for (int j : {0, 1, 2, 3, 4})
      if (j != i) idx.push_back({i, j});
  for (auto& [i, j] : idx) s.names.push_back(std::to_string(i) + std::to_string(j));
  size_t n = idx.size();
  s.Phi.assign(n, std::vector<uint8_t>(n, 0));
  for (size_t u = 0; u < n; ++u) {
    for (size_t v = 0; v < n; ++v) {
      auto [k, l] = idx[u];
      auto [i, j] = idx[v];
      (void)l;
      if (u != v && k != i && k != j && j != 0) s.Phi[u][v] = 1;
    }
  }
  s.alpha.resize(n);
  s.weights.resize(n);
  s.chars.resize(n);
  for (size_t u = 0; u < n; ++u) {
    auto [i, j] = idx[u];
    s.alpha[u].r = Rat(Int(R[i][j]));
    s.weights[u].base = 4;
    s.chars[u].jacobi_top = Int(R[i][j]);
  }
  Int beta = (Int(A) * Int(B) * Int(B - A) * Int(Dt)).abs();
  if (beta.is_zero()) beta = Int(1);
  s.betas.assign(n, beta);
  // excluded subsets per the two degenerations
  bool AB_sq = arith::is_square_u64((uint64_t)std::llabs(A * B));
  auto find = [&](int i, int j) {
    for (size_t u = 0; u < n; ++u)
      if (idx[u] == std::make_pair(i, j)) return (int)u;
    return -1;
  };
  auto is_sq = [](int64_t v) { return v > 0 && arith::is_square_u64((uint64_t)v); };
  if (Dt == 1 && !AB_sq && is_sq(R[3][2]) && is_sq(R[3][1])) {
    s.J_sets.push_back({find(3, 0), find(3, 1), find(3, 2), find(3, 4)});
  } else if (Dt == 1 && AB_sq && is_sq(R[3][2])) {
    s.J_sets.push_back({find(2, 0), find(2, 1), find(2, 3), find(2, 4),
                        find(3, 0), find(3, 1), find(3, 2), find(3, 4)});
  }
  return s;
}

LinkageSpec spec_foursquare32(int64_t a, int64_t b) {
  if (!(0 < a && a < b) || std::gcd(a, b) != 1)
    throw std::invalid_argument("spec_foursquare32: 0 < a < b coprime");
  LinkageSpec s;
  // condition constants c_{ik}: at p | n_i the symbol ((c_{ik} g_k)/p)
  int64_t C[5][5] = {};
  C[1][2] = 2 * a;       C[1][3] = b - a;     C[1][4] = a + b;
  C[2][1] = -2 * a;      C[2][3] = -(a + b);  C[2][4] = b - a;
  C[3][1] = -(b - a);    C[3][2] = a + b;     C[3][4] = 2 * b;
  C[4][1] = -(a + b);    C[4][2] = -(b - a);  C[4][3] = -2 * b;
  std::vector<std::pair<int, int>> idx;  // (i, S) with S as bitmask
  for (int i = 1; i <= 4; ++i) {
    for (int S = 0; S < 16; ++S) {
      if (S & (1 << (i - 1))) continue;
      idx.push_back({i, S});
    }
  }
  size_t n = idx.size();
  for (auto& [i, S] : idx) {
    std::string nm = std::to_string(i) + ":";
    for (int k = 1; k <= 4; ++k)
      if (S & (1 << (k - 1))) nm += std::to_string(k);
    if (S == 0) nm += "0";
    s.names.push_back(nm);
  }
  s.Phi.assign(n, std::vector<uint8_t>(n, 0));
  for (size_t u = 0; u < n; ++u)
    for (size_t v = 0; v < n; ++v) {
      if (u == v) continue;
      int j = idx[v].first, S = idx[u].second;
      if (S & (1 << (j - 1))) s.Phi[u][v] = 1;
    }
  s.alpha.resize(n);
  s.weights.resize(n);
  s.chars.resize(n);
  for (size_t u = 0; u < n; ++u) {
    auto [i, S] = idx[u];
    __int128 top = 1;
    for (int k = 1; k <= 4; ++k)
      if (S & (1 << (k - 1))) top *= C[i][k];
    s.alpha[u].r = Rat(Int::from_i128(top));
    s.weights[u].base = 8;
    s.chars[u].jacobi_top = Int::from_i128(top);
  }
  Int beta = (Int(2) * Int(a) * Int(b) * Int(b * b - a * a)).abs();
  s.betas.assign(n, beta);
  for (int i = 1; i <= 4; ++i) {
    for (int j = i + 1; j <= 4; ++j) {
      std::vector<int> J;
      for (size_t u = 0; u < n; ++u)
        if (idx[u].first == i || idx[u].first == j) J.push_back((int)u);
      s.J_sets.push_back(J);
    }
  }
  return s;
}

LinkageSpec spec_partial4(int64_t A, int64_t B, int64_t delta, int64_t gamma1,
                          int64_t gamma2, int64_t Dt) {
  LinkageSpec s;
  s.names = {"10", "12", "20", "21"};
  size_t n = 4;
  // Phi(kl, ij) = 1 iff k != i and j != 0
  int first[4] = {1, 1, 2, 2};
  int second[4] = {0, 2, 0, 1};
  s.Phi.assign(n, std::vector<uint8_t>(n, 0));
  for (size_t u = 0; u < n; ++u)
    for (size_t v = 0; v < n; ++v)
      if (u != v && first[u] != first[v] && second[v] != 0) s.Phi[u][v] = 1;
  __int128 disc128 = (__int128)A * A - 4 * (__int128)B;
  int64_t disc = (int64_t)disc128;
  int64_t R12 = B * delta * gamma2;
  int64_t R21 = Dt * delta * gamma1;
  Int c2 = (Int(2) * Int(B) * Int(disc)).abs();
  s.alpha.resize(n);
  s.alpha[0].r = Rat(Int(1));
  s.alpha[1].r = Rat(Int(R12));
  s.alpha[2].r = Rat(Int(1));
  s.alpha[2].c = c2;
  // alpha_21 = alpha * R21 = (-A R21)/2 + (R21/2) sqrt(disc)
  s.alpha[3].quadratic = true;
  s.alpha[3].disc = Int(disc);
  s.alpha[3].qu = Rat(Int(-A * R21), Int(2));
  s.alpha[3].qv = Rat(Int(R21), Int(2));
  s.alpha[3].c = c2;
  s.weights.resize(n);
  s.weights[0].base = 2;
  s.weights[1].base = 2;
  s.weights[2].base = 2;
  s.weights[2].omega_top = Int(B);
  s.weights[2].sandwich = {Int(disc)};
  s.weights[3].base = 2;
  s.weights[3].omega_top = Int(B);
  s.weights[3].sandwich = {Int(disc), Int(B)};
  s.chars.resize(n);
  s.chars[1].jacobi_top = Int(R12);
  s.chars[3].jacobi_top = Int(R21);
  s.chars[3].artin = true;
  s.chars[3].artin_A = A;
  s.chars[3].artin_B = B;
  Int beta = (Int(B) * Int(disc) * Int(Dt)).abs();
  if (beta.is_zero()) beta = Int(1);
  s.betas.assign(n, beta);
  if (R12 > 0 && arith::is_square_u64((uint64_t)R12)) s.J_sets.push_back({0, 1});
  return s;
}

std::string serialize_spec(const LinkageSpec& spec) {
  std::ostringstream os;
  os << "linkage-spec v1\n";
  os << "indices";
  for (auto& nm : spec.names) os << " " << nm;
  os << "\n";
  for (size_t i = 0; i < spec.size(); ++i) {
    os << "phi";
    for (size_t j = 0; j < spec.size(); ++j) os << " " << (int)spec.Phi[i][j];
    os << "\n";
  }
  for (auto& J : spec.J_sets) {
    os << "exclude";
    for (int j : J) os << " " << spec.names[j];
    os << "\n";
  }
  return os.str();
}

LinkageSpec parse_spec(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line) || line != "linkage-spec v1")
    throw std::invalid_argument("parse_spec: bad header");
  LinkageSpec s;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string key;
    ls >> key;
    if (key == "indices") {
      std::string nm;
      while (ls >> nm) s.names.push_back(nm);
    } else if (key == "phi") {
      std::vector<uint8_t> row;
      int v;
      while (ls >> v) row.push_back((uint8_t)v);
      s.Phi.push_back(row);
    } else if (key == "exclude") {
      std::vector<int> J;
      std::string nm;
      while (ls >> nm) {
        auto it = std::find(s.names.begin(), s.names.end(), nm);
        if (it == s.names.end())
          throw std::invalid_argument("parse_spec: unknown index " + nm);
        J.push_back((int)(it - s.names.begin()));
      }
      s.J_sets.push_back(J);
    } else {
      throw std::invalid_argument("parse_spec: unknown key " + key);
    }
  }
  s.alpha.resize(s.names.size());
  s.weights.resize(s.names.size());
  s.chars.resize(s.names.size());
  s.betas.assign(s.names.size(), Int(1));
  s.validate();
  return s;
}

}  // namespace twistscan::descent
