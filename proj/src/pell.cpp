#include "twistscan/pell.hpp"

#include <algorithm>
#include <stdexcept>

#include "twistscan/arith.hpp"

namespace twistscan::pell {

namespace {

// sign of s + t sqrt(d), d non-square positive
int sign_quad(const Int& s, const Int& t, int64_t d) {
  int ss = s.sign(), ts = t.sign();
  if (ss >= 0 && ts >= 0) return (ss == 0 && ts == 0) ? 0 : 1;
  if (ss <= 0 && ts <= 0) return -1;
  // opposite signs: compare s^2 vs d t^2 (never equal, d non-square)
  Int lhs = s * s, rhs = Int(d) * t * t;
  if (ss > 0) return lhs > rhs ? 1 : -1;
  return lhs < rhs ? 1 : -1;
}

// s + t sqrt(d) < p + q sqrt(d)
bool less_quad(const Int& s, const Int& t, const Int& p, const Int& q,
               int64_t d) {
  return sign_quad(s - p, t - q, d) < 0;
}

struct Unit {
  Int T, U;  // norm-one unit T + U sqrt(d) of Z[sqrt(d)]
};

Unit norm_one_unit(int64_t d) {
  auto fu = arith::fundamental_unit(d);
  if (fu.norm == 1) return {fu.t, fu.u};
  return {fu.t * fu.t + Int(d) * fu.u * fu.u, Int(2) * fu.t * fu.u};
}

QuadValue mul_unit(const QuadValue& v, const Unit& e, int64_t d) {
  return {v.s * e.T + Int(d) * v.t * e.U, v.s * e.U + v.t * e.T};
}

}  // namespace

std::vector<QuadValue> base_solutions(int64_t a, int64_t b, const Int& u) {
  if (a < 1 || b < 1) throw std::invalid_argument("pell: a, b >= 1 required");
  if (u.is_zero()) throw std::invalid_argument("pell: u != 0 required");
  int64_t d = a * b;
  if (arith::is_square_u64((uint64_t)d))
    throw std::invalid_argument("pell: ab is a square (rational branch)");
  Unit eps = norm_one_unit(d);
  Int au = Int(a) * u;
  // s = (alpha + conj)/2 with 1 <= alpha < eps and |conj| <= |a u|.
  Int eps_hi = eps.T + eps.U * Int((int64_t)arith::isqrt_u64((uint64_t)d) + 1);
  Int S = (eps_hi + au.abs()) / Int(2) + Int(1);
  if (!S.fits_int64())
    throw std::invalid_argument("pell: search bound beyond desk scale");
  int64_t Smax = S.to_int64();
  std::vector<QuadValue> out;
  // s = (alpha + conj)/2 can be negative when the conjugate is (u < 0).
  for (int64_t s = -Smax; s <= Smax; s += 1) {
    if (std::llabs(s) % a != 0) continue;
    Int num = Int(s) * Int(s) - au;  // = d t^2
    if (num.sign() < 0) continue;
    if (!(num % Int(d)).is_zero()) continue;
    auto [t, exact] = arith::int_sqrt(num / Int(d));
    if (!exact) continue;
    for (int sign : {1, -1}) {
      if (t.is_zero() && sign < 0) continue;
      Int tt = sign > 0 ? t : -t;
      if (sign_quad(Int(s) - Int(1), tt, d) < 0) continue;    // alpha >= 1
      if (!less_quad(Int(s), tt, eps.T, eps.U, d)) continue;  // alpha < eps
      out.push_back({Int(s), tt});
    }
  }
  std::sort(out.begin(), out.end(), [&](const QuadValue& x, const QuadValue& y) {
    return less_quad(x.s, x.t, y.s, y.t, d);
  });
  return out;
}

std::vector<std::pair<Int, Int>> enumerate_solutions(int64_t a, int64_t b,
                                                     const Int& u,
                                                     const Int& bound) {
  if (a < 1 || b < 1) throw std::invalid_argument("pell: a, b >= 1 required");
  if (u.is_zero()) throw std::invalid_argument("pell: u != 0 required");
  if (bound.sign() <= 0) return {};
  std::vector<std::pair<Int, Int>> out;
  int64_t d = a * b;
  if (arith::is_square_u64((uint64_t)d)) {
    // (a x - w y)(a x + w y) = a u over Q, w = sqrt(ab)
    int64_t w = (int64_t)arith::isqrt_u64((uint64_t)d);
    Int au = Int(a) * u;
    Int abs_au = au.abs();
    for (Int e(1); e * e <= abs_au; e += Int(1)) {
      if (!(abs_au % e).is_zero()) continue;
      for (const Int& dd : {e, abs_au / e}) {
        for (int sgn : {1, -1}) {
          Int d1 = sgn > 0 ? dd : -dd;
          Int e1 = au / d1;
          Int sum = d1 + e1, diff = e1 - d1;
          if (sum.is_odd() || diff.is_odd()) continue;
          Int ax = sum / Int(2), wy = diff / Int(2);
          if (!(ax % Int(a)).is_zero() || !(wy % Int(w)).is_zero()) continue;
          Int x = ax / Int(a), y = wy / Int(w);
          if (x.sign() > 0 && y.sign() > 0 && x <= bound) out.push_back({x, y});
        }
      }
    }
  } else {
    Unit eps = norm_one_unit(d);
    Int Lam = Int(2) * Int(a) * bound + (Int(a) * u).abs();
    for (const QuadValue& base : base_solutions(a, b, u)) {
      QuadValue v = base;
      while (true) {
        if (sign_quad(v.s - Lam, v.t, d) > 0) break;
        if (v.s.sign() > 0 && v.t.sign() > 0 && (v.s % Int(a)).is_zero()) {
          Int x = v.s / Int(a);
          if (x.sign() > 0 && x <= bound) out.push_back({x, v.t});
        }
        v = mul_unit(v, eps, d);
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::array<Int, 3>> simultaneous_solve(int64_t a, int64_t b,
                                                   const Int& u, int64_t c,
                                                   int64_t d, const Int& v,
                                                   const Int& bound) {
  auto first = enumerate_solutions(a, b, u, bound);
  auto second = enumerate_solutions(c, d, v, bound);
  std::vector<std::array<Int, 3>> out;
  for (auto& [x, y] : first) {
    for (auto& [y2, z] : second) {
      if (y2 == y) out.push_back({x, y, z});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<QuadValue> norm_equation_elements(int64_t d, const Int& m,
                                              const Int& height) {
  if (d < 2 || arith::is_square_u64((uint64_t)d))
    throw std::invalid_argument("norm_equation: d >= 2 non-square required");
  if (m.is_zero()) throw std::invalid_argument("norm_equation: m != 0");
  Unit eps = norm_one_unit(d);
  Int eps_hi = eps.T + eps.U * Int((int64_t)arith::isqrt_u64((uint64_t)d) + 1);
  Int S = (eps_hi + m.abs()) / Int(2) + Int(1);
  if (!S.fits_int64())
    throw std::invalid_argument("norm_equation: bound beyond desk scale");
  int64_t Smax = S.to_int64();
  std::vector<QuadValue> bases;
  for (int64_t s = -Smax; s <= Smax; ++s) {
    Int num = Int(s) * Int(s) - m;
    if (num.sign() < 0 || !(num % Int(d)).is_zero()) continue;
    auto [t, exact] = arith::int_sqrt(num / Int(d));
    if (!exact) continue;
    for (int sign : {1, -1}) {
      if (t.is_zero() && sign < 0) continue;
      Int tt = sign > 0 ? t : -t;
      if (sign_quad(Int(s) - Int(1), tt, d) < 0) continue;
      if (!less_quad(Int(s), tt, eps.T, eps.U, d)) continue;
      bases.push_back({Int(s), tt});
    }
  }
  std::vector<QuadValue> out;
  for (const QuadValue& base : bases) {
    QuadValue w = base;
    while (true) {
      if (sign_quad(w.s - height, w.t, d) > 0) break;
      if (sign_quad(w.s - Int(1), w.t, d) > 0) out.push_back(w);  // value > 1
      w = mul_unit(w, eps, d);
    }
  }
  std::sort(out.begin(), out.end(), [&](const QuadValue& x, const QuadValue& y) {
    return less_quad(x.s, x.t, y.s, y.t, d);
  });
  return out;
}

}  // namespace twistscan::pell
