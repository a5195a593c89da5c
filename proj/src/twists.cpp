#include "twistscan/twists.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "twistscan/cubicroots.hpp"
#include "twistscan/fixedlog.hpp"

namespace twistscan::twists {

std::string model_name(Model m) {
  switch (m) {
    case Model::Short: return "short";
    case Model::Full: return "full";
    case Model::Partial: return "partial";
  }
  return "?";
}

std::optional<Model> model_from_name(const std::string& s) {
  if (s == "short") return Model::Short;
  if (s == "full") return Model::Full;
  if (s == "partial") return Model::Partial;
  return std::nullopt;
}

void TwistCurve::validate() const {
  if (D == 0) throw std::invalid_argument("twist: D must be non-zero");
  if (!arith::is_squarefree_u64(static_cast<uint64_t>(std::llabs(D))))
    throw std::invalid_argument("twist: D must be square-free");
  if (std::llabs(A) > 1000000 || std::llabs(B) > 1000000 ||
      std::llabs(D) > 10000000)
    throw std::invalid_argument("twist: parameters beyond desk scale");
  switch (model) {
    case Model::Short: {
      __int128 disc = 4 * (__int128)A * A * A + 27 * (__int128)B * B;
      if (disc == 0) throw std::invalid_argument("twist: singular cubic");
      break;
    }
    case Model::Full:
      if (!(0 < A && A < B))
        throw std::invalid_argument("twist: full model needs 0 < A < B");
      if (std::gcd(A, B) != 1)
        throw std::invalid_argument("twist: full model needs gcd(A,B) = 1");
      break;
    case Model::Partial: {
      __int128 d = (__int128)A * A - 4 * (__int128)B;
      if (d >= 0 && arith::is_square_i128(d))
        throw std::invalid_argument("twist: A^2 - 4B must not be a square");
      break;
    }
  }
}

__int128 TwistCurve::rhs(int64_t x) const {
  __int128 X = x, Dd = D;
  switch (model) {
    case Model::Short:
      return X * X * X + (__int128)A * Dd * Dd * X + (__int128)B * Dd * Dd * Dd;
    case Model::Full:
      return X * (X - (__int128)A * Dd) * (X - (__int128)B * Dd);
    case Model::Partial:
      return X * (X * X + (__int128)A * Dd * X + (__int128)B * Dd * Dd);
  }
  return 0;
}

bool TwistCurve::on_curve(int64_t x, int64_t y) const {
  return (__int128)y * y == rhs(x);
}

arith::BinaryCubic TwistCurve::homogenized() const {
  switch (model) {
    case Model::Short: return {1, 0, A, B};
    case Model::Full: return {1, -(A + B), A * B, 0};
    case Model::Partial: return {1, A, B, 0};
  }
  return {};
}

TorsionClass classify_torsion(int64_t A, int64_t B) {
  __int128 disc = 4 * (__int128)A * A * A + 27 * (__int128)B * B;
  if (disc == 0) throw std::invalid_argument("classify_torsion: singular cubic");
  auto eval = [&](int64_t x) {
    return (__int128)x * x * x + (__int128)A * x + B;
  };
  std::optional<int64_t> root;
  if (B == 0) {
    root = 0;
  } else {
    int64_t b = std::llabs(B);
    for (int64_t d = 1; d * d <= b && !root; ++d) {
      if (b % d) continue;
      for (int64_t cand : {d, -d, b / d, -(b / d)}) {
        if (eval(cand) == 0) { root = cand; break; }
      }
    }
  }
  TorsionClass tc;
  if (!root) {
    tc.kind = TorsionClass::Irreducible;
    return tc;
  }
  int64_t r = *root;
  // x^3 + Ax + B = (x - r)(x^2 + r x + (A + r^2))
  int64_t q1 = r, q0 = A + r * r;
  __int128 qdisc = (__int128)q1 * q1 - 4 * (__int128)q0;
  __int128 s;
  if (qdisc > 0 && arith::is_square_i128(qdisc, &s)) {
    int64_t r2 = (-q1 + (int64_t)s) / 2;
    int64_t r3 = (-q1 - (int64_t)s) / 2;
    int64_t v[3] = {r, r2, r3};
    std::sort(v, v + 3);
    tc.kind = TorsionClass::FullTorsion;
    tc.r1 = v[0];
    tc.r2 = v[1];
    tc.r3 = v[2];
    return tc;
  }
  tc.kind = TorsionClass::PartialTorsion;
  tc.r = r;
  tc.q1 = q1;
  tc.q0 = q0;
  return tc;
}

namespace {

// ceil(largest real root of the right-hand cubic): non-torsion points with x
// strictly below it lie on the bounded real component.
int64_t compact_threshold(const TwistCurve& c) {
  switch (c.model) {
    case Model::Full:
      return std::max<int64_t>({0, c.A * c.D, c.B * c.D});
    default: {
      std::vector<Int> coeffs;
      if (c.model == Model::Short)
        coeffs = {Int(c.B) * Int(c.D) * Int(c.D) * Int(c.D),
                  Int(c.A) * Int(c.D) * Int(c.D), Int(0), Int(1)};
      else
        coeffs = {Int(0), Int(c.B) * Int(c.D) * Int(c.D), Int(c.A) * Int(c.D),
                  Int(1)};
      return ceil_of_largest_root(coeffs).to_int64();
    }
  }
}

int64_t scan_floor(const TwistCurve& c) {
  std::vector<Int> coeffs;
  switch (c.model) {
    case Model::Short:
      coeffs = {Int(c.B) * Int(c.D) * Int(c.D) * Int(c.D),
                Int(c.A) * Int(c.D) * Int(c.D), Int(0), Int(1)};
      break;
    case Model::Full:
      return std::min<int64_t>({0, c.A * c.D, c.B * c.D});
    case Model::Partial:
      coeffs = {Int(0), Int(c.B) * Int(c.D) * Int(c.D), Int(c.A) * Int(c.D),
                Int(1)};
      break;
  }
  return ceil_of_least_root(coeffs).to_int64();
}

void push_point(std::vector<PointRecord>& out, int64_t x, int64_t y,
                int64_t compact_below) {
  bool torsion = y == 0;
  bool compact = !torsion && x < compact_below;
  if (torsion) {
    out.push_back({x, 0, true, false});
  } else {
    y = std::llabs(y);
    out.push_back({x, -y, false, compact});
    out.push_back({x, y, false, compact});
  }
}

std::vector<PointRecord> finalize_points(std::vector<PointRecord> pts) {
  std::sort(pts.begin(), pts.end(),
            [](const PointRecord& a, const PointRecord& b) {
              return a.x != b.x ? a.x < b.x : a.y < b.y;
            });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

std::vector<int64_t> squarefree_divisors(int64_t n) {
  std::vector<int64_t> out = {1};
  if (n == 0) return out;
  for (auto& [p, e] :
       arith::factorize_u64(static_cast<uint64_t>(std::llabs(n)))) {
    size_t sz = out.size();
    for (size_t i = 0; i < sz; ++i) out.push_back(out[i] * (int64_t)p);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int64_t> all_divisors(int64_t n) {
  std::vector<int64_t> out = {1};
  for (auto& [p, e] :
       arith::factorize_u64(static_cast<uint64_t>(std::llabs(n)))) {
    size_t sz = out.size();
    int64_t pk = 1;
    for (int i = 1; i <= e; ++i) {
      pk *= (int64_t)p;
      for (size_t j = 0; j < sz; ++j) out.push_back(out[j] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

void check_candidates(const TwistCurve& c, std::vector<int64_t>& cands,
                      std::vector<PointRecord>& out, int64_t compact_below) {
  std::sort(cands.begin(), cands.end());
  cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
  for (int64_t x : cands) {
    __int128 v = c.rhs(x);
    __int128 root;
    if (v > 0 && arith::is_square_i128(v, &root))
      push_point(out, x, (int64_t)root, compact_below);
  }
}

// Full model, D > 0: every non-torsion point has x = g * (d2 d3 m1) * y1^2
// with g | D, m1 | g, d3 | A, d2 | B square-free (the G1 structure of the
// three-square factorization); enumerate the candidates, verify on-curve.
std::vector<PointRecord> scan_full_structured(const TwistCurve& c,
                                              int64_t x_max) {
  assert(c.model == Model::Full && c.D > 0);
  int64_t compact_below = c.B * c.D;
  std::vector<PointRecord> out;
  for (int64_t t : {(int64_t)0, c.A * c.D, c.B * c.D})
    if (t <= x_max) push_point(out, t, 0, compact_below);
  std::vector<int64_t> cands;
  auto sfA = squarefree_divisors(c.A), sfB = squarefree_divisors(c.B);
  for (int64_t g : squarefree_divisors(c.D)) {
    for (int64_t m1 : squarefree_divisors(g)) {
      for (int64_t d3 : sfA) {
        for (int64_t d2 : sfB) {
          int64_t base = g * m1 * d2 * d3;
          if (base > x_max) continue;
          for (int64_t y1 = 1;; ++y1) {
            int64_t x = base * y1 * y1;
            if (x > x_max || x <= 0) break;
            cands.push_back(x);
          }
        }
      }
    }
  }
  check_candidates(c, cands, out, compact_below);
  return finalize_points(std::move(out));
}

// Partial model, D > 0: x = +- g * g1 * delta * y1^2 with g | D, g1 | g,
// delta | B; the negative branch is bounded by the least real root.
std::vector<PointRecord> scan_partial_structured(const TwistCurve& c,
                                                 int64_t x_max) {
  assert(c.model == Model::Partial && c.D > 0);
  __int128 qd = (__int128)c.A * c.A - 4 * (__int128)c.B;
  int64_t compact_below = qd > 0 ? compact_threshold(c) : 0;
  int64_t x_floor = qd > 0 ? scan_floor(c) : 0;
  std::vector<PointRecord> out;
  push_point(out, 0, 0, compact_below);
  std::vector<int64_t> cands;
  for (int64_t g : squarefree_divisors(c.D)) {
    for (int64_t g1 : squarefree_divisors(g)) {
      for (int64_t delta : all_divisors(c.B)) {
        int64_t base = g * g1 * delta;
        for (int64_t y1 = 1;; ++y1) {
          int64_t x = base * y1 * y1;
          if (x > x_max || x <= 0) break;
          cands.push_back(x);
        }
        if (qd > 0) {
          for (int64_t y1 = 1;; ++y1) {
            int64_t x = -base * y1 * y1;
            if (x < x_floor || x >= 0) break;
            cands.push_back(x);
          }
        }
      }
    }
  }
  check_candidates(c, cands, out, compact_below);
  return finalize_points(std::move(out));
}

}  // namespace

std::vector<PointRecord> integral_points_bruteforce(const TwistCurve& curve,
                                                    int64_t x_max) {
  curve.validate();
  if (x_max < 1 || x_max > 2000000000ll)
    throw std::invalid_argument("integral_points: x_max out of range");
  int64_t lo = scan_floor(curve);
  int64_t compact_below = compact_threshold(curve);
  std::vector<PointRecord> out;
  for (int64_t x = lo; x <= x_max; ++x) {
    __int128 v = curve.rhs(x);
    if (v < 0) continue;
    __int128 root;
    if (arith::is_square_i128(v, &root))
      push_point(out, x, (int64_t)root, compact_below);
  }
  return finalize_points(std::move(out));
}

namespace {

// Reflection to a positive-D family: identical point coordinates for the
// short and partial models, an x-shift for the full model.
std::vector<PointRecord> integral_points_impl(const TwistCurve& curve,
                                              int64_t x_max) {
  if (curve.D > 0) {
    switch (curve.model) {
      case Model::Full: return scan_full_structured(curve, x_max);
      case Model::Partial: return scan_partial_structured(curve, x_max);
      case Model::Short: return integral_points_bruteforce(curve, x_max);
    }
  }
  int64_t Dp = -curve.D;
  switch (curve.model) {
    case Model::Short: {
      TwistCurve refl{Model::Short, curve.A, -curve.B, Dp};
      return integral_points_impl(refl, x_max);
    }
    case Model::Partial: {
      TwistCurve refl{Model::Partial, -curve.A, curve.B, Dp};
      return integral_points_impl(refl, x_max);
    }
    case Model::Full: {
      // E_{-D'} points are (X - B D', y) for (X, y) on the (B-A, B) family.
      TwistCurve refl{Model::Full, curve.B - curve.A, curve.B, Dp};
      int64_t shift = curve.B * Dp;
      if (x_max > 2000000000ll - shift)
        throw std::invalid_argument("integral_points: x_max out of range");
      auto pts = integral_points_impl(refl, x_max + shift);
      int64_t compact_below = compact_threshold(curve);
      std::vector<PointRecord> out;
      for (auto& p : pts) {
        int64_t x = p.x - shift;
        if (p.torsion) out.push_back({x, 0, true, false});
        else out.push_back({x, p.y, false, x < compact_below});
      }
      return finalize_points(std::move(out));
    }
  }
  return {};
}

}  // namespace

std::vector<PointRecord> integral_points(const TwistCurve& curve,
                                         int64_t x_max) {
  curve.validate();
  if (x_max < 1) throw std::invalid_argument("integral_points: x_max >= 1");
  return integral_points_impl(curve, x_max);
}

GcdDecomp gcd_decompose(int64_t x, int64_t y, const TwistCurve& curve) {
  curve.validate();
  if (!curve.on_curve(x, y))
    throw std::invalid_argument("gcd_decompose: point not on curve");
  int64_t g = std::gcd(std::llabs(x), std::llabs(curve.D));
  if (g == 0) g = std::llabs(curve.D);
  GcdDecomp d;
  d.g = g;
  d.xt = x / g;
  d.Dt = curve.D / g;
  if (y % (g * g) != 0)
    throw std::logic_error("gcd_decompose: g^2 does not divide y");
  d.yt = y / (g * g);
  arith::BinaryCubic C = curve.homogenized();
  if ((__int128)g * d.yt * d.yt != C.eval(d.xt, d.Dt))
    throw std::logic_error("gcd_decompose: identity failed");
  return d;
}

std::map<int64_t, Witness> construct_points(int64_t A, int64_t B, int64_t N) {
  if (N < 1) throw std::invalid_argument("construct_points: N >= 1");
  __int128 disc = 4 * (__int128)A * A * A + 27 * (__int128)B * B;
  if (disc == 0) throw std::invalid_argument("construct_points: singular cubic");
  // Search window: heights up to 4 N^(1/4) + 4 carry the bulk of the
  // square-free values F(alpha, beta) = beta * C(alpha, beta) with |F| <= N.
  int64_t H = 4 * arith::kth_root_floor(Int(N), 4).to_int64() + 4;
  std::map<int64_t, Witness> out;
  auto C = [&](int64_t a, int64_t b) {
    return (__int128)a * a * a + (__int128)A * a * b * b +
           (__int128)B * b * b * b;
  };
  auto visit = [&](int64_t a, int64_t b) {
    if (b == 0) return;
    __int128 F = (__int128)b * C(a, b);
    if (F == 0 || F > N || F < -N) return;
    int64_t D = (int64_t)F;
    if (!arith::is_squarefree_u64(std::llabs(D))) return;
    if (out.count(D)) return;
    int64_t d = (int64_t)C(a, b);  // = D / b
    Witness w;
    w.alpha = a;
    w.beta = b;
    w.x = a * d;
    w.y = d * d;
    TwistCurve curve{Model::Short, A, B, D};
    if (!curve.on_curve(w.x, w.y))
      throw std::logic_error("construct_points: witness not on curve");
    out.emplace(D, w);
  };
  // height shells, lexicographic within each shell
  for (int64_t h = 1; h <= H; ++h) {
    for (int64_t a = -h; a <= h; ++a) {
      visit(a, -h);
      visit(a, h);
    }
    for (int64_t b = -h + 1; b <= h - 1; ++b) {
      visit(-h, b);
      visit(h, b);
    }
  }
  return out;
}

const std::vector<PointRecord>* Corpus::find(int64_t D) const {
  auto it = std::lower_bound(
      curves.begin(), curves.end(), D,
      [](const CurvePoints& c, int64_t d) { return c.D < d; });
  if (it == curves.end() || it->D != D) return nullptr;
  return &it->pts;
}

int64_t Corpus::nontorsion_count(int64_t D) const {
  const auto* pts = find(D);
  if (!pts) return 0;
  int64_t n = 0;
  for (auto& p : *pts)
    if (!p.torsion) ++n;
  return n;
}

namespace {

std::string flags_str(const PointRecord& p) {
  std::string s;
  if (p.torsion) s += 't';
  if (p.compact) s += 'c';
  return s.empty() ? "-" : s;
}

void write_corpus_stream(std::ostream& os, const Corpus& c, bool complete) {
  os << "# twistscan-corpus v1\n";
  os << "# model " << model_name(c.model) << "\n";
  os << "# A " << c.A << "\n# B " << c.B << "\n# N " << c.N << "\n# xmax "
     << c.x_max << "\n";
  os << "# columns D x y flags\n";
  size_t i = 0;
  for (const auto& cp : c.curves) {
    for (const auto& p : cp.pts)
      os << cp.D << " " << p.x << " " << p.y << " " << flags_str(p) << "\n";
    if (++i % 64 == 0) os << "# progress " << cp.D << "\n";
  }
  if (complete) os << "# complete\n";
}

struct ParsedCorpus {
  Corpus corpus;
  bool complete = false;
  int64_t progress_D = INT64_MIN;  // data valid for D <= progress_D
};

ParsedCorpus parse_corpus_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("load_corpus: cannot open " + path);
  ParsedCorpus pc;
  Corpus& c = pc.corpus;
  std::string line;
  if (!std::getline(is, line) || line != "# twistscan-corpus v1")
    throw std::runtime_error("load_corpus: bad header in " + path);
  std::map<int64_t, std::vector<PointRecord>> by_D;
  bool have_model = false;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::istringstream ss(line.substr(1));
      std::string key;
      ss >> key;
      if (key == "model") {
        std::string name;
        ss >> name;
        auto m = model_from_name(name);
        if (!m) throw std::runtime_error("load_corpus: unknown model " + name);
        c.model = *m;
        have_model = true;
      } else if (key == "A") ss >> c.A;
      else if (key == "B") ss >> c.B;
      else if (key == "N") ss >> c.N;
      else if (key == "xmax") ss >> c.x_max;
      else if (key == "progress") ss >> pc.progress_D;
      else if (key == "complete") pc.complete = true;
      continue;
    }
    std::istringstream ss(line);
    int64_t D, x, y;
    std::string flags;
    if (!(ss >> D >> x >> y >> flags))
      throw std::runtime_error("load_corpus: bad record: " + line);
    PointRecord p;
    p.x = x;
    p.y = y;
    p.torsion = flags.find('t') != std::string::npos;
    p.compact = flags.find('c') != std::string::npos;
    by_D[D].push_back(p);
  }
  if (!have_model) throw std::runtime_error("load_corpus: missing model header");
  for (auto& [D, pts] : by_D) {
    if (!pc.complete && D > pc.progress_D) continue;  // incomplete tail
    TwistCurve curve{c.model, c.A, c.B, D};
    for (auto& p : pts) {
      if (!curve.on_curve(p.x, p.y))
        throw std::runtime_error("load_corpus: point fails curve equation");
      if (p.torsion != (p.y == 0))
        throw std::runtime_error("load_corpus: bad torsion flag");
    }
    c.curves.push_back({D, pts});
  }
  return pc;
}

}  // namespace

void save_corpus(const Corpus& corpus, const std::string& path) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream os(tmp);
    if (!os) throw std::runtime_error("save_corpus: cannot open " + tmp);
    write_corpus_stream(os, corpus, true);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw std::runtime_error("save_corpus: rename failed for " + path);
}

Corpus load_corpus(const std::string& path) {
  ParsedCorpus pc = parse_corpus_file(path);
  if (!pc.complete) throw std::runtime_error("load_corpus: incomplete corpus");
  return pc.corpus;
}

Corpus scan_family(Model model, int64_t A, int64_t B, int64_t N, int64_t x_max,
                   int threads, const std::string& cache_path) {
  if (N < 1) throw std::invalid_argument("scan_family: N >= 1");
  TwistCurve probe{model, A, B, 1};
  probe.validate();

  Corpus corpus;
  corpus.model = model;
  corpus.A = A;
  corpus.B = B;
  corpus.N = N;
  corpus.x_max = x_max;

  std::map<int64_t, std::vector<PointRecord>> cached;
  if (!cache_path.empty()) {
    std::ifstream probe_file(cache_path);
    if (probe_file.good()) {
      ParsedCorpus pc = parse_corpus_file(cache_path);
      const Corpus& cc = pc.corpus;
      if (cc.model == model && cc.A == A && cc.B == B && cc.x_max == x_max) {
        if (pc.complete && cc.N == N) return cc;
        for (auto& cp : cc.curves)
          if (std::llabs(cp.D) <= N) cached.emplace(cp.D, cp.pts);
      }
    }
  }

  std::vector<int64_t> Ds;
  auto sf = arith::squarefree_sieve(N);
  for (auto it = sf.rbegin(); it != sf.rend(); ++it) Ds.push_back(-*it);
  for (int64_t s : sf) Ds.push_back(s);

  std::vector<std::vector<PointRecord>> results(Ds.size());
  std::vector<char> have(Ds.size(), 0);
  for (size_t i = 0; i < Ds.size(); ++i) {
    auto it = cached.find(Ds[i]);
    if (it != cached.end()) {
      results[i] = it->second;
      have[i] = 1;
    }
  }
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    while (true) {
      size_t i = next.fetch_add(1);
      if (i >= Ds.size()) break;
      if (have[i]) continue;
      TwistCurve curve{model, A, B, Ds[i]};
      results[i] = integral_points(curve, x_max);
    }
  };
  int nthreads = std::max(1, threads);
  if (nthreads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (size_t i = 0; i < Ds.size(); ++i)
    corpus.curves.push_back({Ds[i], std::move(results[i])});
  if (!cache_path.empty()) save_corpus(corpus, cache_path);
  return corpus;
}

std::vector<DensityRow> density_table(const Corpus& corpus,
                                      const std::vector<int64_t>& grid,
                                      const Rat& kappa, bool with_construct) {
  std::vector<DensityRow> rows;
  for (int64_t Np : grid) {
    if (Np < 1 || Np > corpus.N)
      throw std::invalid_argument("density_table: grid point outside corpus");
    DensityRow row;
    row.Nprime = Np;
    row.nonempty = 0;
    row.total = 0;
    for (const auto& cp : corpus.curves) {
      if (std::llabs(cp.D) > Np) continue;
      ++row.total;
      for (const auto& p : cp.pts)
        if (!p.torsion) { ++row.nonempty; break; }
    }
    auto [s, exact] = arith::int_sqrt(Int(Np) * Int::pow(Int(10), 8));
    (void)exact;
    row.sqrt_ref = Rat(s, Int::pow(Int(10), 4)).to_decimal(4);
    if (Np >= 2) {
      // N' / (ln N')^(p/q) with an integer q-th root at fixed precision
      int64_t p = kappa.num().to_int64(), q = kappa.den().to_int64();
      Rat lnN = q48_to_rat(ln_q48(static_cast<uint64_t>(Np)));
      Int scale = Int::pow(Int(10), static_cast<uint64_t>(12 * q));
      Int val = (lnN.num() * scale) / lnN.den();
      Int powed = Int::pow(val, static_cast<uint64_t>(p));
      Int root = arith::kth_root_floor(powed, static_cast<int>(q));
      Rat log_pow(root, Int::pow(Int(10), static_cast<uint64_t>(12 * p)));
      Rat ref = Rat(Int(Np)) / log_pow;
      row.log_ref = ref.to_decimal(4);
    } else {
      row.log_ref = "inf";
    }
    if (with_construct)
      row.constructed =
          static_cast<int64_t>(construct_points(corpus.A, corpus.B, Np).size());
    rows.push_back(row);
  }
  return rows;
}

Rat moments(const Corpus& corpus, int k) {
  if (k < 1) throw std::invalid_argument("moments: k >= 1");
  Int total(0);
  for (const auto& cp : corpus.curves) {
    int64_t n = 0;
    for (const auto& p : cp.pts)
      if (!p.torsion) ++n;
    total += Int::pow(Int(n), static_cast<uint64_t>(k));
  }
  return Rat(total, Int(static_cast<long long>(corpus.curves.size())));
}

std::string szpiro_upper(int64_t A, int64_t B, int64_t D) {
  if (std::llabs(D) < 2)
    throw std::invalid_argument("szpiro_upper: |D| >= 2 required");
  __int128 disc = 4 * (__int128)A * A * A + 27 * (__int128)B * B;
  if (disc == 0) throw std::invalid_argument("szpiro_upper: singular cubic");
  uint64_t m = static_cast<uint64_t>(16 * (disc < 0 ? -disc : disc));
  // 6 + 2 log(16|4A^3+27B^2|) / log|D|; the Q16.48 scale cancels in the ratio.
  Rat val =
      Rat(Int(6)) +
      Rat(Int(2)) * Rat(Int(static_cast<unsigned long long>(ln_q48(m))),
                        Int(static_cast<unsigned long long>(ln_q48(
                            static_cast<uint64_t>(std::llabs(D))))));
  return val.to_decimal(10);
}

}  // namespace twistscan::twists
