#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "abel3/fm_rank1.hpp"
#include "abel3/lattice_ring.hpp"
#include "abel3/qseries.hpp"
#include "abel3/spin.hpp"
#include "abel3/verify.hpp"
#include "abel3/wall_geometry.hpp"

namespace py = pybind11;
using namespace abel3;

namespace {

Int to_int(py::handle h) { return Int(py::str(h).cast<std::string>()); }

py::int_ from_int(const Int& x) {
    return py::reinterpret_steal<py::int_>(
        PyLong_FromString(x.get_str().c_str(), nullptr, 10));
}

py::object from_rat(const Rat& x) {
    static py::object fraction =
        py::module_::import("fractions").attr("Fraction");
    return fraction(to_string(x));
}

Rat rat_from(py::handle h) {
    py::object o = py::reinterpret_borrow<py::object>(h);
    if (py::hasattr(o, "numerator") && py::hasattr(o, "denominator"))
        return make_rat(to_int(o.attr("numerator")),
                        to_int(o.attr("denominator")));
    return make_rat(to_int(o), 1);
}

GammaVector to_gamma(py::sequence s) {
    if (py::len(s) != 4) throw py::value_error("expected a 4-vector");
    return {to_int(s[0]), to_int(s[1]), to_int(s[2]), to_int(s[3])};
}

py::tuple from_gamma(const GammaVector& v) {
    return py::make_tuple(from_int(v.v0), from_int(v.v1), from_int(v.v2),
                          from_int(v.v3));
}

py::tuple from_class(const SemihomClass& c) {
    return py::make_tuple(from_int(c.p), from_int(c.q), from_int(c.r));
}

}  // namespace

PYBIND11_MODULE(_abel3, m) {
    m.doc() = "exact computations for Chern classes on a principally "
              "polarized abelian threefold";

    m.def("euler_pairing", [](py::sequence v, py::sequence w) {
        return from_int(euler_pairing(to_gamma(v), to_gamma(w)));
    });
    m.def("discriminant", [](py::sequence v) {
        return from_int(discriminant(to_gamma(v)));
    });
    m.def("sl2_act", [](py::sequence g, py::sequence v) {
        if (py::len(g) != 4) throw py::value_error("expected (a,b,c,d)");
        SL2Matrix mat{to_int(g[0]), to_int(g[1]), to_int(g[2]), to_int(g[3])};
        return from_gamma(sl2_act(mat, to_gamma(v)));
    });
    m.def("in_c", [](py::sequence v) -> py::object {
        auto c = in_C(to_gamma(v));
        if (!c) return py::none();
        return from_class(*c);
    });
    m.def("decompose", [](py::sequence v) -> py::object {
        auto d = decompose(to_gamma(v));
        if (!d) return py::none();
        return py::make_tuple(from_class(d->gamma1), from_class(d->gamma2));
    });
    m.def("wall_crossing_term", [](py::sequence v) {
        auto d = decompose(to_gamma(v));
        if (!d) throw py::value_error("class is not decomposable");
        return from_rat(wall_crossing_term(*d));
    });
    m.def("conj_dt", [](py::object beta, py::object n) {
        return from_rat(conj_dt(to_int(beta), to_int(n)));
    });
    m.def("a_coefficients", [](long max_n) {
        auto a = a_coefficients(4 * (max_n + 2));
        py::dict out;
        for (long k = -1; k <= max_n; ++k) out[py::int_(k)] = from_rat(a.at(k));
        return out;
    });
    m.def("n_beta_k", [](py::object beta, py::object k) {
        return from_int(n_beta_k(to_int(beta), to_int(k)));
    });
    m.def("cubic_unit_solutions",
          [](py::object beta, py::object n, py::object bound) {
              py::list out;
              for (const auto& s : cubic_unit_solutions(
                       {to_int(beta), to_int(n)}, to_int(bound)))
                  out.append(py::make_tuple(from_int(s.c), from_int(s.d)));
              return out;
          });
    m.def("fm_image",
          [](py::object beta, py::object n, py::object c, py::object d) {
              CurveClass im = fm_image({to_int(beta), to_int(n)},
                                       {to_int(c), to_int(d)});
              return py::make_tuple(from_int(im.beta), from_int(im.n));
          });
    m.def("reconstruct_g",
          [](py::object beta, py::object n, py::object c, py::object d) {
              SL2Matrix g = reconstruct_g({to_int(beta), to_int(n)},
                                          {to_int(c), to_int(d)});
              return py::make_tuple(from_int(g.a), from_int(g.b),
                                    from_int(g.c), from_int(g.d));
          });
    m.def("delta_ppav", [](py::sequence v) {
        return from_rat(spin::delta_spin(spin::embed_ppav(to_gamma(v))));
    });
    m.def("delta_e3", [](py::args args) {
        if (py::len(args) != 8)
            throw py::value_error("expected (r, b1, b2, b3, d1, d2, d3, n)");
        Rat a[8];
        for (int i = 0; i < 8; ++i) a[i] = rat_from(args[i]);
        return from_rat(spin::delta_spin(spin::embed_e3(
            a[0], a[1], a[2], a[3], a[4], a[5], a[6], a[7])));
    });
    m.def("eps_product", [](int ambient, py::sequence c1, py::sequence c2) {
        auto to_lat = [&](py::sequence cols) {
            IntMatrix mtx(ambient, std::vector<Int>(py::len(cols)));
            for (size_t j = 0; j < py::len(cols); ++j) {
                py::sequence col = cols[j].cast<py::sequence>();
                if (py::len(col) != size_t(ambient))
                    throw py::value_error("column length mismatch");
                for (int i = 0; i < ambient; ++i) mtx[i][j] = to_int(col[i]);
            }
            return SaturatedLattice(ambient, mtx);
        };
        RingElement p = eps_product(to_lat(c1), to_lat(c2));
        py::list out;
        for (const auto& [lat, coeff] : p.terms) {
            py::list basis;
            for (int j = 0; j < lat.rank(); ++j) {
                py::list col;
                for (int i = 0; i < ambient; ++i)
                    col.append(from_int(lat.basis()[i][j]));
                basis.append(col);
            }
            out.append(py::make_tuple(from_rat(coeff), basis));
        }
        return out;
    });
    m.def("walls_json",
          [](py::sequence v) { return walls_json(to_gamma(v)); });
    m.def("walls_svg", [](py::sequence v, double beta_min, double beta_max,
                          double alpha_max) {
        return walls_svg(to_gamma(v), {beta_min, beta_max, alpha_max});
    });
    m.def("on_wall", [](double beta, double alpha, py::sequence v,
                        double tol) { return on_wall(beta, alpha, to_gamma(v), tol); },
          py::arg("beta"), py::arg("alpha"), py::arg("v"),
          py::arg("tol") = 1e-9);
    m.def("verify", [] {
        py::list out;
        for (const auto& c : run_verification().checks)
            out.append(py::make_tuple(c.name, c.pass, c.detail, c.seconds));
        return out;
    });
}
