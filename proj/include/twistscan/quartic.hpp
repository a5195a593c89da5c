// Binary quartic forms in binomial normalization:
//   f(X,Y) = a0 X^4 + 4 a1 X^3 Y + 6 a2 X^2 Y^2 + 4 a3 X Y^3 + a4 Y^4.
// Invariants/seminvariants, the SL2(Z) substitution action, the quartic
// attached to an integral twist point, discriminant lowering, reduction with
// seminvariant bounds, the syzygy descent to h^3 + A a^2 h + B a^3 = r^2 g,
// and bounded Thue enumeration.

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "twistscan/bigint.hpp"

namespace twistscan::quartic {

struct BinaryQuartic {
  Int a0, a1, a2, a3, a4;

  bool operator==(const BinaryQuartic& o) const {
    return a0 == o.a0 && a1 == o.a1 && a2 == o.a2 && a3 == o.a3 && a4 == o.a4;
  }
  // Raw coefficients (1, 4, 6, 4, 1-weighted).
  std::vector<Int> raw() const {
    return {a0, a1 * Int(4), a2 * Int(6), a3 * Int(4), a4};
  }
  // From raw coefficients; rejects inputs where 4 | r1, 6 | r2, 4 | r3 fail.
  static BinaryQuartic from_raw(const std::vector<Int>& r);
  Int eval(const Int& x, const Int& y) const;
  std::string to_string() const;
};

struct Unimodular {
  Int a, b, c, d;  // ad - bc = 1

  static Unimodular identity() { return {1, 0, 0, 1}; }
  static Unimodular translation(const Int& b);          // (1 b; 0 1)
  static Unimodular inversion() { return {0, -1, 1, 0}; }  // (X,Y) -> (-Y,X)
  Unimodular mul(const Unimodular& o) const;
  Unimodular inverse() const;
  bool is_valid() const { return a * d - b * c == Int(1); }
  // Matrix-vector action on a column vector.
  std::pair<Int, Int> apply(const Int& x, const Int& y) const;
};

struct PointedForm {
  BinaryQuartic form;
  Int px, py;
  bool operator==(const PointedForm& o) const {
    return form == o.form && px == o.px && py == o.py;
  }
};

struct Invariants {
  Int I, J, Delta;
};
Invariants invariants(const BinaryQuartic& f);
// The fully expanded degree-6 discriminant polynomial; equals I^3 - 27 J^2.
Int disc_expanded(const BinaryQuartic& f);

struct Seminvariants {
  Int a, H, R;
};
Seminvariants seminvariants(const BinaryQuartic& f);

// Quartic covariant G_f coefficients (X^4 .. X^0); leading one equals H(f).
std::vector<Int> covariant_G(const BinaryQuartic& f);

// Right action (act(g, f))(v) = f(g v); so act(g1, act(g2, f)) = act(g2 g1, f).
BinaryQuartic act(const Unimodular& g, const BinaryQuartic& f);

// Pointed action g . (f, pt) = (act(g, f), g^{-1} pt); preserves f(pt).
PointedForm act_pointed(const Unimodular& g, const PointedForm& pf);

// Quartic attached to an integral point (x0, y0) on y^2 = x^3 + A D^2 x + B D^3:
//   X^4 - 6 x0 X^2 Y^2 + 8 y0 X Y^3 + (-4 A D^2 - 3 x0^2) Y^4.
// I = -4 A D^2, J = -4 B D^3, Delta = -16 (4A^3 + 27B^2) D^6.
BinaryQuartic mordell_form(const Int& x0, const Int& y0, const Int& A,
                           const Int& B, const Int& D);

struct LoweredForm {
  BinaryQuartic F;  // F(1,0) = M
  Int k;            // in [0, M^3)
  Int M;
};
// F(X,Y) = M^-3 f_P(M X + k Y, Y) for M | D, M odd positive, gcd(M, 2 x0) = 1.
LoweredForm lower_disc(const Int& x0, const Int& y0, const Int& A, const Int& B,
                       const Int& D, const Int& M);

// Canonical representative of the SL2(Z)-class of (F, pt). For pt on the
// orbit of (g, 0) the residual stabilizer is unipotent; normalize a1 into
// [0, |a0|). Requires pt != (0,0) and the rotated leading coefficient != 0.
PointedForm canonical_pointed(const BinaryQuartic& F, const Int& px,
                              const Int& py);

struct Reduced {
  BinaryQuartic f;
  Unimodular gamma;      // f = act(gamma, input)
  bool bounds_ok;        // seminvariant bounds |a| <= 16(|phi| + sqrt|I|),
                         // |H| <= 16(phi^2 + |I|) verified via exact intervals
};
Reduced reduce(const BinaryQuartic& f);

struct SyzygyDescent {
  Int h, a, r;
  bool torsion;  // r = 0 branch
};
// Requires I(F) = -4 A g^2 and J(F) = -4 B g^3 for integers A, B; throws
// std::runtime_error naming the failed divisibility claim otherwise.
SyzygyDescent syzygy_descend(const BinaryQuartic& F_red, const Int& g);

// All (x, y) with |F(x, y)| <= m. Rejects forms with a rational zero ray
// (infinite solution set) and zero discriminant.
std::vector<std::pair<Int, Int>> thue_enumerate(const BinaryQuartic& F,
                                                const Int& m);
// Same for a general integral form given by raw coefficients (degree >= 2).
std::vector<std::pair<Int, Int>> thue_enumerate_form(
    const std::vector<Int>& raw, const Int& m);

}  // namespace twistscan::quartic
