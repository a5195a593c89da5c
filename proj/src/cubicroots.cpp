#include "twistscan/cubicroots.hpp"

#include <algorithm>
#include <stdexcept>

namespace twistscan {

namespace {

using Poly = std::vector<Rat>;  // dense, ascending degree

Poly to_poly(const std::vector<Int>& c) {
  Poly p;
  for (const Int& v : c) p.push_back(Rat(v));
  while (p.size() > 1 && p.back().is_zero()) p.pop_back();
  return p;
}

int degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

Rat eval(const Poly& p, const Rat& x) {
  Rat acc;
  for (size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

Poly derivative(const Poly& p) {
  Poly d;
  for (size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rat(Int((long long)i)));
  if (d.empty()) d.push_back(Rat());
  return d;
}

Poly neg_rem(const Poly& a, const Poly& b) {
  Poly r = a;
  while (degree(r) >= degree(b) && !(r.size() == 1 && r[0].is_zero())) {
    Rat coef = r.back() / b.back();
    size_t off = r.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) r[off + i] -= coef * b[i];
    r.pop_back();
    while (r.size() > 1 && r.back().is_zero()) r.pop_back();
    if (r.size() == 1 && r[0].is_zero()) break;
  }
  for (Rat& c : r) c = -c;
  return r;
}

struct Sturm {
  std::vector<Poly> chain;

  explicit Sturm(const Poly& p) {
    chain.push_back(p);
    chain.push_back(derivative(p));
    while (degree(chain.back()) > 0) {
      Poly r = neg_rem(chain[chain.size() - 2], chain.back());
      if (r.size() == 1 && r[0].is_zero()) break;
      chain.push_back(r);
    }
  }

  int sign_changes(const Rat& x) const {
    int changes = 0, prev = 0;
    for (const Poly& p : chain) {
      Rat v = eval(p, x);
      int s = v.sign();
      if (s == 0) continue;
      if (prev != 0 && s != prev) ++changes;
      prev = s;
    }
    return changes;
  }

  // Number of distinct real roots in (a, b].
  int count(const Rat& a, const Rat& b) const {
    return sign_changes(a) - sign_changes(b);
  }
};

}  // namespace

int poly_sign_at(const std::vector<Int>& coeffs, const Rat& x) {
  return eval(to_poly(coeffs), x).sign();
}

std::vector<RootInterval> isolate_real_roots(const std::vector<Int>& coeffs,
                                             unsigned prec) {
  Poly p = to_poly(coeffs);
  if (degree(p) < 1) throw std::domain_error("isolate_real_roots: degree 0");
  Sturm sturm(p);
  // Cauchy bound: all roots inside |T| <= 1 + max |a_i| / |a_deg|.
  Rat lead = p.back().abs();
  Rat maxc;
  for (size_t i = 0; i + 1 < p.size(); ++i)
    maxc = std::max(maxc, p[i].abs());
  Rat bound = Rat(Int(1)) + maxc / lead;

  std::vector<std::pair<Rat, Rat>> stack = {{-bound, bound}};
  std::vector<std::pair<Rat, Rat>> isolated;
  while (!stack.empty()) {
    auto [a, b] = stack.back();
    stack.pop_back();
    int n = sturm.count(a, b);
    if (n == 0) continue;
    if (n == 1) { isolated.push_back({a, b}); continue; }
    Rat mid = (a + b) * Rat(Int(1), Int(2));
    // Nudge off a root: Sturm counting uses half-open intervals, so a root
    // exactly at mid stays in the left half.
    stack.push_back({a, mid});
    stack.push_back({mid, b});
  }
  // A root exactly at -bound would be missed by (a, b]; it cannot happen
  // because the Cauchy bound is strict.
  std::sort(isolated.begin(), isolated.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  Rat width_target = Rat(Int(1), Int(1) << prec);
  std::vector<RootInterval> out;
  for (auto& [a0, b0] : isolated) {
    Rat a = a0, b = b0;
    while (b - a > width_target) {
      Rat mid = (a + b) * Rat(Int(1), Int(2));
      if (sturm.count(a, mid) == 1) b = mid;
      else a = mid;
    }
    out.push_back({a, b});
  }
  return out;
}

namespace {

// Smallest integer c with c >= root, given the root's isolating interval.
Int ceil_from_interval(const std::vector<Int>& coeffs, const RootInterval& ri) {
  Int c = Int::fdiv(ri.lo.num(), ri.lo.den());  // floor(lo) <= root
  Sturm sturm(to_poly(coeffs));
  // c >= root iff no root remains in (c, hi].
  while (sturm.count(Rat(c), ri.hi) > 0) c = c + Int(1);
  return c;
}

}  // namespace

Int ceil_of_least_root(const std::vector<Int>& coeffs) {
  auto roots = isolate_real_roots(coeffs, 8);
  if (roots.empty()) throw std::domain_error("ceil_of_least_root: no real root");
  return ceil_from_interval(coeffs, roots.front());
}

Int ceil_of_largest_root(const std::vector<Int>& coeffs) {
  auto roots = isolate_real_roots(coeffs, 8);
  if (roots.empty())
    throw std::domain_error("ceil_of_largest_root: no real root");
  return ceil_from_interval(coeffs, roots.back());
}

}  // namespace twistscan
