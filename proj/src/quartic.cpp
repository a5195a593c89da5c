#include "twistscan/quartic.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "twistscan/arith.hpp"
#include "twistscan/cubicroots.hpp"

namespace twistscan::quartic {

BinaryQuartic BinaryQuartic::from_raw(const std::vector<Int>& r) {
  if (r.size() != 5) throw std::invalid_argument("from_raw: need 5 coefficients");
  if (!(r[1] % Int(4)).is_zero() || !(r[2] % Int(6)).is_zero() ||
      !(r[3] % Int(4)).is_zero())
    throw std::invalid_argument("from_raw: coefficients not binomial-normalized");
  return {r[0], r[1] / Int(4), r[2] / Int(6), r[3] / Int(4), r[4]};
}

Int BinaryQuartic::eval(const Int& x, const Int& y) const {
  Int x2 = x * x, y2 = y * y;
  return a0 * x2 * x2 + Int(4) * a1 * x2 * x * y + Int(6) * a2 * x2 * y2 +
         Int(4) * a3 * x * y2 * y + a4 * y2 * y2;
}

std::string BinaryQuartic::to_string() const {
  return "(" + a0.to_string() + "," + a1.to_string() + "," + a2.to_string() +
         "," + a3.to_string() + "," + a4.to_string() + ")";
}

Unimodular Unimodular::translation(const Int& b) { return {1, b, 0, 1}; }

Unimodular Unimodular::mul(const Unimodular& o) const {
  return {a * o.a + b * o.c, a * o.b + b * o.d,
          c * o.a + d * o.c, c * o.b + d * o.d};
}

Unimodular Unimodular::inverse() const { return {d, -b, -c, a}; }

std::pair<Int, Int> Unimodular::apply(const Int& x, const Int& y) const {
  return {a * x + b * y, c * x + d * y};
}

Invariants invariants(const BinaryQuartic& f) {
  const Int &a0 = f.a0, &a1 = f.a1, &a2 = f.a2, &a3 = f.a3, &a4 = f.a4;
  Int I = a0 * a4 - Int(4) * a1 * a3 + Int(3) * a2 * a2;
  Int J = a0 * a2 * a4 - a0 * a3 * a3 - a1 * a1 * a4 +
          Int(2) * a1 * a2 * a3 - a2 * a2 * a2;
  return {I, J, I * I * I - Int(27) * J * J};
}

Int disc_expanded(const BinaryQuartic& f) {
  const Int &a0 = f.a0, &a1 = f.a1, &a2 = f.a2, &a3 = f.a3, &a4 = f.a4;
  Int t = a0 * a0 * a0 * Int::pow(a4, 3) - Int(64) * Int::pow(a1, 3) * Int::pow(a3, 3) -
          Int(18) * a0 * a0 * a2 * a2 * a4 * a4 -
          Int(12) * a0 * a0 * a1 * a3 * a4 * a4 -
          Int(6) * a0 * a1 * a1 * a3 * a3 * a4 -
          Int(180) * a0 * a1 * a2 * a2 * a3 * a4 +
          Int(81) * a0 * Int::pow(a2, 4) * a4 +
          Int(36) * a1 * a1 * a2 * a2 * a3 * a3 -
          Int(27) * (a0 * a0 * Int::pow(a3, 4) + Int::pow(a1, 4) * a4 * a4) +
          Int(54) * a2 * (-a2 * a2 + Int(2) * a1 * a3 + a0 * a4) *
              (a4 * a1 * a1 + a0 * a3 * a3);
  return t;
}

Seminvariants seminvariants(const BinaryQuartic& f) {
  Int H = f.a1 * f.a1 - f.a0 * f.a2;
  Int R = Int(2) * Int::pow(f.a1, 3) + f.a0 * f.a0 * f.a3 -
          Int(3) * f.a0 * f.a1 * f.a2;
  return {f.a0, H, R};
}

std::vector<Int> covariant_G(const BinaryQuartic& f) {
  const Int &a0 = f.a0, &a1 = f.a1, &a2 = f.a2, &a3 = f.a3, &a4 = f.a4;
  return {a1 * a1 - a0 * a2,
          Int(2) * (a1 * a2 - a0 * a3),
          Int(3) * a2 * a2 - a0 * a4 - Int(2) * a1 * a3,
          Int(2) * (a2 * a3 - a1 * a4),
          a3 * a3 - a2 * a4};
}

BinaryQuartic act(const Unimodular& g, const BinaryQuartic& f) {
  // (X, Y) <- (aX + bY, cX + dY) on raw coefficients, then renormalize.
  std::vector<Int> raw = f.raw();
  // powers of u = aX + bY and v = cX + dY as raw vectors over (X^4..Y^4)
  // computed via convolution of linear forms.
  auto mul_lin = [](const std::vector<Int>& p, const Int& s, const Int& t) {
    std::vector<Int> q(p.size() + 1, Int(0));
    for (size_t i = 0; i < p.size(); ++i) {
      q[i] += p[i] * s;       // multiply by s*X
      q[i + 1] += p[i] * t;   // multiply by t*Y
    }
    return q;
  };
  std::vector<Int> out(5, Int(0));
  for (int k = 0; k <= 4; ++k) {
    // term raw[k] * u^(4-k) * v^k
    std::vector<Int> poly = {Int(1)};
    for (int i = 0; i < 4 - k; ++i) poly = mul_lin(poly, g.a, g.b);
    for (int i = 0; i < k; ++i) poly = mul_lin(poly, g.c, g.d);
    for (int j = 0; j <= 4; ++j) out[j] += raw[k] * poly[j];
  }
  return BinaryQuartic::from_raw(out);
}

PointedForm act_pointed(const Unimodular& g, const PointedForm& pf) {
  Unimodular gi = g.inverse();
  auto [px, py] = gi.apply(pf.px, pf.py);
  return {act(g, pf.form), px, py};
}

BinaryQuartic mordell_form(const Int& x0, const Int& y0, const Int& A,
                           const Int& B, const Int& D) {
  Int rhs = x0 * x0 * x0 + A * D * D * x0 + B * D * D * D;
  if (y0 * y0 != rhs)
    throw std::invalid_argument("mordell_form: point not on the curve");
  return {Int(1), Int(0), -x0, Int(2) * y0,
          Int(-4) * A * D * D - Int(3) * x0 * x0};
}

LoweredForm lower_disc(const Int& x0, const Int& y0, const Int& A, const Int& B,
                       const Int& D, const Int& M) {
  if (M.sign() <= 0) throw std::invalid_argument("lower_disc: M must be positive");
  if (M.is_even()) throw std::invalid_argument("lower_disc: M must be odd");
  if (!(D % M).is_zero()) throw std::invalid_argument("lower_disc: M must divide D");
  if (Int::gcd(M, Int(2) * x0) != Int(1))
    throw std::invalid_argument("lower_disc: gcd(M, 2 x0) != 1");
  BinaryQuartic fp = mordell_form(x0, y0, A, B, D);
  if (M == Int(1)) return {fp, Int(0), M};

  // k = y0 / x0 (mod p) lifted per prime p | M to a root of t^2 = x0 (mod p^3),
  // then CRT-combined; M | D square-free keeps every root simple.
  Int M3 = M * M * M;
  int64_t m64 = M.to_int64();
  Int k(0), mod_acc(1);
  for (auto& [p64, e] : arith::factorize_u64(static_cast<uint64_t>(m64))) {
    assert(e == 1);
    int64_t p = static_cast<int64_t>(p64);
    int64_t x0p = Int::mod_nonneg(x0, Int(p)).to_int64();
    int64_t y0p = Int::mod_nonneg(y0, Int(p)).to_int64();
    int64_t kp = static_cast<int64_t>(arith::mulmod_u64(
        y0p, static_cast<uint64_t>(arith::invmod_i64(x0p, p)), p));
    int64_t p3 = p * p * p;
    int64_t x0p3 = Int::mod_nonneg(x0, Int(p3)).to_int64();
    auto lifted = arith::hensel_lift({-x0p3, 0, 1}, kp, p, 3);
    if (!lifted) throw std::runtime_error("lower_disc: Hensel lift failed");
    Int piece(*lifted), pm(p3);
    if (mod_acc == Int(1)) { k = piece; mod_acc = pm; }
    else {
      // CRT join
      Int t = Int::mod_nonneg(piece - k, pm);
      Int inv(arith::invmod_i64(Int::mod_nonneg(mod_acc, pm).to_int64(),
                                pm.to_int64()));
      k = k + mod_acc * Int::mod_nonneg(t * inv, pm);
      mod_acc = mod_acc * pm;
    }
  }
  k = Int::mod_nonneg(k, M3);
  // x0 = k^2 (mod M^3) by construction; y0 = k^3 + A D^2 / (2k) follows.
  if (!((k * k - x0) % M3).is_zero())
    throw std::runtime_error("lower_disc: k^2 != x0 mod M^3");
  {
    Int twok = Int::mod_nonneg(Int(2) * k, M3);
    Int inv2k(arith::invmod_i64(twok.to_int64(), M3.to_int64()));
    Int expect = Int::mod_nonneg(k * k * k + A * D * D * inv2k, M3);
    if (Int::mod_nonneg(y0, M3) != expect)
      throw std::runtime_error("lower_disc: y0 congruence failed");
  }

  Int num2 = Int(6) * (k * k - x0);
  Int num3 = Int(4) * (k * k * k - Int(3) * x0 * k + Int(2) * y0);
  Int num4 = Int::pow(k, 4) - Int(6) * x0 * k * k + Int(8) * y0 * k -
             Int(4) * A * D * D - Int(3) * x0 * x0;
  Int M2 = M * M;
  if (!(num2 % M).is_zero() || !(num3 % M2).is_zero() || !(num4 % M3).is_zero())
    throw std::runtime_error("lower_disc: integrality failed");
  std::vector<Int> raw = {M, Int(4) * k, num2 / M, num3 / M2, num4 / M3};
  return {BinaryQuartic::from_raw(raw), k, M};
}

PointedForm canonical_pointed(const BinaryQuartic& F, const Int& px,
                              const Int& py) {
  if (px.is_zero() && py.is_zero())
    throw std::invalid_argument("canonical_pointed: zero point");
  Int g = Int::gcd(px, py);
  // gamma with first column (px/g, py/g) satisfies gamma^{-1} pt = (g, 0).
  Int u = px / g, v = py / g;
  // Extended gcd: x0 u + y0 v = 1 (u, v coprime).
  Int x0(1), x1(0), y0(0), y1(1), a = u, b = v;
  while (!b.is_zero()) {
    Int q = Int::fdiv(a, b);
    Int t1 = a - q * b; a = b; b = t1;
    t1 = x0 - q * x1; x0 = x1; x1 = t1;
    t1 = y0 - q * y1; y0 = y1; y1 = t1;
  }
  if (a == Int(-1)) { x0 = -x0; y0 = -y0; }
  Unimodular gamma{u, -y0, v, x0};
  assert(gamma.is_valid());
  PointedForm cur = act_pointed(gamma, {F, px, py});
  if (!(cur.px == g && cur.py.is_zero()))
    throw std::logic_error("canonical_pointed: point normalization failed");
  if (cur.form.a0.is_zero())
    throw std::invalid_argument("canonical_pointed: leading coefficient zero");
  // Unipotent normalization: a1 <- a1 mod |a0| in [0, |a0|).
  Int a0abs = cur.form.a0.abs();
  Int target = Int::mod_nonneg(cur.form.a1, a0abs);
  Int shift = (target - cur.form.a1) / cur.form.a0;
  cur = act_pointed(Unimodular::translation(shift), cur);
  assert(cur.px == g && cur.py.is_zero());
  return cur;
}

namespace {

// Upper bound (as a Rat) for |phi|, the largest-modulus real root of
// X^3 - (I/4) X - (J/4); computed from the integer cubic T^3 - 4I T - 16J
// whose roots are 4X, isolated to width 2^-64.
Rat phi_upper_bound(const Int& I, const Int& J) {
  std::vector<Int> cubic = {Int(-16) * J, Int(-4) * I, Int(0), Int(1)};
  // A multiple real root can only occur when Delta = 0, excluded by callers.
  auto roots = isolate_real_roots(cubic, 64);
  Rat best;
  for (auto& r : roots) {
    Rat m = std::max(r.lo.abs(), r.hi.abs());
    if (m > best) best = m;
  }
  return best * Rat(Int(1), Int(4));
}

}  // namespace

Reduced reduce(const BinaryQuartic& f) {
  Invariants inv = invariants(f);
  if (inv.Delta.is_zero())
    throw std::invalid_argument("reduce: zero discriminant");
  BinaryQuartic cur = f;
  Unimodular gamma = Unimodular::identity();
  auto apply = [&](const Unimodular& g) {
    cur = act(g, cur);
    gamma = gamma.mul(g);  // act(g1, act(g2, f)) = act(g2 g1, f)
  };
  // Ensure a0 != 0.
  if (cur.a0.is_zero()) {
    if (cur.a4.is_zero()) {
      for (long long b = 1;; b = b > 0 ? -b : -b + 1) {
        if (!cur.eval(Int(b), Int(1)).is_zero()) {
          apply(Unimodular::translation(Int(b)));
          break;
        }
      }
    }
    apply(Unimodular::inversion());
  }
  auto norm = [](const BinaryQuartic& q) {
    Seminvariants s = seminvariants(q);
    return s.a * s.a + s.H * s.H;
  };
  auto balance = [&]() {
    Int a0abs = cur.a0.abs();
    Int r = Int::mod_nonneg(cur.a1, a0abs);
    if (Int(2) * r > a0abs) r = r - a0abs;
    Int b = (r - cur.a1) / cur.a0;
    if (!b.is_zero()) apply(Unimodular::translation(b));
  };
  // Greedy descent: translate toward an integer near a real root of f(x, 1)
  // (small leading coefficient after inversion), invert when the combined
  // move lowers N = a^2 + H^2; stop at a local minimum.
  balance();
  while (true) {
    std::vector<Int> shifts = {Int(0), Int(1), Int(-1)};
    {
      std::vector<Int> dehom = {cur.a4, Int(4) * cur.a3, Int(6) * cur.a2,
                                Int(4) * cur.a1, cur.a0};
      for (auto& ri : isolate_real_roots(dehom, 4)) {
        Int fl = Int::fdiv(ri.lo.num(), ri.lo.den());
        for (long long off = -1; off <= 2; ++off) shifts.push_back(fl + Int(off));
      }
    }
    Int cur_norm = norm(cur);
    bool improved = false;
    Int best_b(0), best_norm = cur_norm;
    for (const Int& b : shifts) {
      BinaryQuartic t = act(Unimodular::translation(b), cur);
      if (t.a4.is_zero()) continue;  // inversion would zero the lead
      BinaryQuartic cand = act(Unimodular::inversion(), t);
      Int n = norm(cand);
      if (n < best_norm) { best_norm = n; best_b = b; improved = true; }
    }
    if (!improved) break;
    apply(Unimodular::translation(best_b));
    apply(Unimodular::inversion());
    balance();
  }
  // Check the Lemma-style seminvariant bounds with c1 = c2 = 16; interval
  // endpoints keep the comparison exact.
  Seminvariants s = seminvariants(cur);
  Rat phi_hi = phi_upper_bound(inv.I, inv.J);
  auto [ri, exact] = arith::int_sqrt(inv.I.abs());
  Rat sqrt_hi = Rat(exact ? ri : ri + Int(1));
  bool ok = Rat(s.a.abs()) <= Rat(Int(16)) * (phi_hi + sqrt_hi) &&
            Rat(s.H.abs()) <= Rat(Int(16)) * (phi_hi * phi_hi + Rat(inv.I.abs()));
  return {cur, gamma, ok};
}

SyzygyDescent syzygy_descend(const BinaryQuartic& F_red, const Int& g) {
  if (g.sign() <= 0) throw std::invalid_argument("syzygy_descend: g must be positive");
  Invariants inv = invariants(F_red);
  Int four_g2 = Int(4) * g * g, four_g3 = Int(4) * g * g * g;
  if (!(inv.I % four_g2).is_zero())
    throw std::runtime_error("syzygy_descend: I != -4 A g^2 for integral A");
  if (!(inv.J % four_g3).is_zero())
    throw std::runtime_error("syzygy_descend: J != -4 B g^3 for integral B");
  Int A = -(inv.I / four_g2), B = -(inv.J / four_g3);
  Seminvariants s = seminvariants(F_red);
  if (!(s.H % g).is_zero())
    throw std::runtime_error("syzygy_descend: g does not divide H");
  if (s.R.is_odd())
    throw std::runtime_error("syzygy_descend: R is odd");
  Int half_R = s.R / Int(2);
  if (!(half_R % (g * g)).is_zero())
    throw std::runtime_error("syzygy_descend: g^2 does not divide R/2");
  Int h = s.H / g, a = s.a, r = half_R / (g * g);
  Int lhs = h * h * h + A * a * a * h + B * a * a * a;
  if (lhs != r * r * g)
    throw std::runtime_error("syzygy_descend: surface equation failed");
  return {h, a, r, r.is_zero()};
}

namespace {

Int eval_raw(const std::vector<Int>& raw, const Int& x, const Int& y) {
  // raw[i] multiplies X^(d-i) Y^i
  size_t d = raw.size() - 1;
  Int acc(0);
  Int xp(1);
  std::vector<Int> ypow(d + 1, Int(1));
  for (size_t i = 1; i <= d; ++i) ypow[i] = ypow[i - 1] * y;
  for (size_t i = raw.size(); i-- > 0;) {
    acc += raw[i] * xp * ypow[i];
    xp *= x;
  }
  return acc;
}

bool has_rational_zero_ray(const std::vector<Int>& raw) {
  if (raw.front().is_zero() || raw.back().is_zero()) return true;
  // rational roots p/q of the dehomogenized polynomial: p | raw.back(),
  // q | raw.front()
  auto divisors = [](const Int& n) {
    std::vector<Int> out;
    Int a = n.abs();
    for (Int i(1); i * i <= a; i += Int(1)) {
      if ((a % i).is_zero()) {
        out.push_back(i);
        if (i * i != a) out.push_back(a / i);
      }
    }
    return out;
  };
  for (const Int& p : divisors(raw.back())) {
    for (const Int& q : divisors(raw.front())) {
      if (Int::gcd(p, q) != Int(1)) continue;
      if (eval_raw(raw, p, q).is_zero() || eval_raw(raw, -p, q).is_zero())
        return true;
    }
  }
  return false;
}

}  // namespace

std::vector<std::pair<Int, Int>> thue_enumerate_form(
    const std::vector<Int>& raw, const Int& m) {
  if (raw.size() < 3) throw std::invalid_argument("thue: degree >= 2 required");
  if (m.sign() <= 0) throw std::invalid_argument("thue: m >= 1 required");
  if (has_rational_zero_ray(raw))
    throw std::invalid_argument("thue: form has a rational zero ray");
  size_t deg = raw.size() - 1;
  Int coeff_sum(0);
  for (const Int& c : raw) coeff_sum += c.abs();
  Int ybox = m * (Int(1) + coeff_sum);
  std::vector<std::pair<Int, Int>> out;
  out.push_back({Int(0), Int(0)});
  // y = 0 row: |a0 x^deg| <= m
  for (Int x(1); ; x += Int(1)) {
    if (raw[0].abs() * Int::pow(x, static_cast<uint64_t>(deg)) > m) break;
    out.push_back({x, Int(0)});
    out.push_back({-x, Int(0)});
  }
  // Real roots of F(x, y) in x are theta * y with |theta| Cauchy-bounded by
  // the dehomogenized form, so each row's envelope grows only linearly in y.
  Int maxc(0);
  for (size_t i = 1; i < raw.size(); ++i)
    if (raw[i].abs() > maxc) maxc = raw[i].abs();
  for (Int y(1); y <= ybox; y += Int(1)) {
    for (int sy : {1, -1}) {
      Int yy = sy > 0 ? y : -y;
      // Beyond the envelope, |F| is monotone in |x|; stop a direction once
      // past it with |F| > m.
      Int cauchy = ((raw[0].abs() + maxc) * y) / raw[0].abs() + Int(2);
      // x = 0 included here, so skip it in the symmetric negative pass
      for (int sx : {1, -1}) {
        Int x = sx > 0 ? Int(0) : Int(-1);
        while (true) {
          Int v = eval_raw(raw, x, yy).abs();
          if (v <= m) {
            if (!(x.is_zero() && sx < 0)) out.push_back({x, yy});
          } else if ((sx > 0 ? x : -x) > cauchy) {
            break;
          }
          x += Int(sx);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::pair<Int, Int>> thue_enumerate(const BinaryQuartic& F,
                                                const Int& m) {
  if (invariants(F).Delta.is_zero())
    throw std::invalid_argument("thue: degenerate form");
  return thue_enumerate_form(F.raw(), m);
}

}  // namespace twistscan::quartic
