// Python bindings for the main operations. Big integers cross the boundary
// as Python ints (via decimal strings), exact rationals as (num, den) pairs.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "twistscan/arith.hpp"
#include "twistscan/charsum.hpp"
#include "twistscan/descent.hpp"
#include "twistscan/pell.hpp"
#include "twistscan/quartic.hpp"
#include "twistscan/surface.hpp"
#include "twistscan/twists.hpp"

namespace py = pybind11;
using namespace twistscan;

namespace {

Int to_int(const py::int_& v) {
  return Int(py::cast<std::string>(py::repr(v)));
}
py::int_ from_int(const Int& v) {
  PyObject* o = PyLong_FromString(v.to_string().c_str(), nullptr, 10);
  if (!o) throw py::error_already_set();
  return py::reinterpret_steal<py::int_>(o);
}
py::tuple from_rat(const Rat& r) {
  return py::make_tuple(from_int(r.num()), from_int(r.den()));
}
quartic::BinaryQuartic to_quartic(const std::vector<py::int_>& a) {
  if (a.size() != 5) throw py::value_error("quartic needs 5 coefficients");
  return {to_int(a[0]), to_int(a[1]), to_int(a[2]), to_int(a[3]), to_int(a[4])};
}
py::list from_quartic(const quartic::BinaryQuartic& f) {
  py::list out;
  for (const Int* c : {&f.a0, &f.a1, &f.a2, &f.a3, &f.a4})
    out.append(from_int(*c));
  return out;
}
arith::BinaryCubic to_cubic(const std::vector<int64_t>& c) {
  if (c.size() != 4) throw py::value_error("cubic needs 4 coefficients");
  return {c[0], c[1], c[2], c[3]};
}
twists::TwistCurve to_curve(const std::string& model, int64_t A, int64_t B,
                            int64_t D) {
  auto m = twists::model_from_name(model);
  if (!m) throw py::value_error("model must be short | full | partial");
  twists::TwistCurve c{*m, A, B, D};
  c.validate();
  return c;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "integral points on quadratic twist families: exact kernels";

  // arith
  m.def("int_sqrt", [](const py::int_& n) {
    auto [r, exact] = arith::int_sqrt(to_int(n));
    return py::make_tuple(from_int(r), exact);
  });
  m.def("jacobi", [](const py::int_& a, const py::int_& n) {
    return arith::jacobi(to_int(a), to_int(n));
  });
  m.def("squarefree_sieve", &arith::squarefree_sieve);
  m.def("squarefree_part", [](const py::int_& n) {
    auto d = arith::squarefree_part(to_int(n));
    return py::make_tuple(from_int(d.s), from_int(d.f));
  });
  m.def("factorize", [](const py::int_& n) {
    py::list out;
    for (auto& [p, e] : arith::factorize(to_int(n)).factors)
      out.append(py::make_tuple(from_int(p), e));
    return out;
  });
  m.def("rho", [](const std::vector<int64_t>& cubic, int64_t n, bool second) {
    return arith::roots_count_mod(
        to_cubic(cubic), n, second ? arith::Dehom::SecondVar : arith::Dehom::FirstVar);
  }, py::arg("cubic"), py::arg("n"), py::arg("second") = false);
  m.def("mult_f", [](const std::vector<int64_t>& cubic, int64_t n) {
    return arith::mult_f(to_cubic(cubic), n);
  });
  m.def("hensel_lift", [](const std::vector<int64_t>& coeffs, int64_t r,
                          int64_t p, int v) -> py::object {
    auto out = arith::hensel_lift(coeffs, r, p, v);
    if (!out) return py::none();
    return py::int_(*out);
  });
  m.def("fundamental_unit", [](int64_t d) {
    auto u = arith::fundamental_unit(d);
    return py::make_tuple(from_int(u.t), from_int(u.u), u.norm);
  });

  // quartic
  m.def("invariants", [](const std::vector<py::int_>& f) {
    auto inv = quartic::invariants(to_quartic(f));
    return py::make_tuple(from_int(inv.I), from_int(inv.J), from_int(inv.Delta));
  });
  m.def("seminvariants", [](const std::vector<py::int_>& f) {
    auto s = quartic::seminvariants(to_quartic(f));
    return py::make_tuple(from_int(s.a), from_int(s.H), from_int(s.R));
  });
  m.def("covariant_g", [](const std::vector<py::int_>& f) {
    py::list out;
    for (auto& c : quartic::covariant_G(to_quartic(f))) out.append(from_int(c));
    return out;
  });
  m.def("mordell_form", [](const py::int_& x0, const py::int_& y0,
                           const py::int_& A, const py::int_& B,
                           const py::int_& D) {
    return from_quartic(quartic::mordell_form(to_int(x0), to_int(y0), to_int(A),
                                              to_int(B), to_int(D)));
  });
  m.def("lower_disc", [](const py::int_& x0, const py::int_& y0,
                         const py::int_& A, const py::int_& B,
                         const py::int_& D, const py::int_& M) {
    auto lf = quartic::lower_disc(to_int(x0), to_int(y0), to_int(A), to_int(B),
                                  to_int(D), to_int(M));
    return py::make_tuple(from_quartic(lf.F), from_int(lf.k));
  });
  m.def("reduce_quartic", [](const std::vector<py::int_>& f) {
    auto r = quartic::reduce(to_quartic(f));
    return py::make_tuple(from_quartic(r.f), r.bounds_ok);
  });
  m.def("syzygy_descend", [](const std::vector<py::int_>& f, const py::int_& g) {
    auto d = quartic::syzygy_descend(to_quartic(f), to_int(g));
    return py::make_tuple(from_int(d.h), from_int(d.a), from_int(d.r),
                          d.torsion);
  });
  m.def("thue_enumerate", [](const std::vector<py::int_>& f, const py::int_& m) {
    py::list out;
    for (auto& [x, y] : quartic::thue_enumerate(to_quartic(f), to_int(m)))
      out.append(py::make_tuple(from_int(x), from_int(y)));
    return out;
  });

  // twists
  m.def("integral_points", [](const std::string& model, int64_t A, int64_t B,
                              int64_t D, int64_t x_max) {
    py::list out;
    for (auto& p : twists::integral_points(to_curve(model, A, B, D), x_max))
      out.append(py::make_tuple(p.x, p.y, p.torsion, p.compact));
    return out;
  });
  m.def("construct_points", [](int64_t A, int64_t B, int64_t N) {
    py::dict out;
    for (auto& [D, w] : twists::construct_points(A, B, N))
      out[py::int_(D)] = py::make_tuple(w.x, w.y);
    return out;
  });
  m.def("classify_torsion", [](int64_t A, int64_t B) {
    auto t = twists::classify_torsion(A, B);
    switch (t.kind) {
      case twists::TorsionClass::Irreducible:
        return py::make_tuple("irreducible");
      case twists::TorsionClass::PartialTorsion:
        return py::make_tuple("partial", t.r, t.q1, t.q0);
      default:
        return py::make_tuple("full", t.r1, t.r2, t.r3);
    }
  });
  m.def("szpiro_upper", &twists::szpiro_upper);

  // surface
  m.def("brute_count", [](const std::vector<int64_t>& cubic, int64_t B) {
    return surface::brute_count(to_cubic(cubic), B).count;
  });
  m.def("count_via_lattices", [](const std::vector<int64_t>& cubic, int64_t B) {
    return surface::count_via_lattices(to_cubic(cubic), B);
  });
  m.def("cubic_lambda", [](const std::vector<int64_t>& cubic) {
    return to_cubic(cubic).lambda();
  });

  // descent
  m.def("full2_decompose", [](int64_t x, int64_t y, int64_t A, int64_t B,
                              int64_t D) {
    auto d = descent::full2_decompose(x, y, to_curve("full", A, B, D));
    return py::make_tuple(d.g, d.xt, d.Dt,
                          py::make_tuple(d.G[0], d.G[1], d.G[2]),
                          py::make_tuple(d.y[0], d.y[1], d.y[2]), d.compact);
  });
  m.def("partial_decompose", [](int64_t x, int64_t y, int64_t A, int64_t B,
                                int64_t D) {
    auto d = descent::partial_decompose(x, y, to_curve("partial", A, B, D));
    return py::make_tuple(d.g, d.xt, d.Dt, d.delta, d.g1, d.y1, d.g2, d.y2,
                          d.compact);
  });
  m.def("four_square_decompose", [](int64_t u, int64_t a, int64_t b)
            -> py::object {
    auto d = descent::four_square_decompose(u, a, b);
    if (!d) return py::none();
    return py::make_tuple(
        py::make_tuple(d->g[0], d->g[1], d->g[2], d->g[3]),
        py::make_tuple(d->y[0], d->y[1], d->y[2], d->y[3]), d->D, d->v);
  });
  m.def("unlinked_max_size", [](int64_t A, int64_t B) {
    return descent::unlinked_max_sets(descent::spec_full12(A, B, 1, 1, 1, 1)).M;
  });
  m.def("truncated_s", [](int64_t N) {
    auto ts = descent::truncated_S(descent::spec_pair_demo(), N);
    return from_rat(ts.S);
  });

  // pell
  m.def("pell_enumerate", [](int64_t a, int64_t b, const py::int_& u,
                             const py::int_& bound) {
    py::list out;
    for (auto& [x, y] : pell::enumerate_solutions(a, b, to_int(u), to_int(bound)))
      out.append(py::make_tuple(from_int(x), from_int(y)));
    return out;
  });
  m.def("pell_simultaneous", [](int64_t a, int64_t b, const py::int_& u,
                                int64_t c, int64_t d, const py::int_& v,
                                const py::int_& bound) {
    py::list out;
    for (auto& s :
         pell::simultaneous_solve(a, b, to_int(u), c, d, to_int(v), to_int(bound)))
      out.append(py::make_tuple(from_int(s[0]), from_int(s[1]), from_int(s[2])));
    return out;
  });
}
