#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "bkk/binomial.hpp"
#include "bkk/error.hpp"
#include "bkk/exact_linear.hpp"
#include "bkk/geometry.hpp"
#include "bkk/io.hpp"
#include "bkk/mixed_volume.hpp"
#include "bkk/root_bounds.hpp"
#include "bkk/subdivision.hpp"

namespace py = pybind11;
using namespace bkk;

namespace {

py::int_ to_py(const BigInt& v) {
    return py::reinterpret_steal<py::int_>(PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

BigInt from_py(const py::handle& h) { return BigInt(py::str(h).cast<std::string>(), 10); }

py::list to_py(const BigVector& v) {
    py::list out;
    for (const auto& x : v) out.append(to_py(x));
    return out;
}

py::list to_py(const IntegerMatrix& m) {
    py::list out;
    for (std::size_t i = 0; i < m.rows(); ++i) out.append(to_py(m.row(i)));
    return out;
}

IntegerMatrix matrix_from_py(const std::vector<std::vector<py::object>>& rows) {
    if (rows.empty()) throw DimensionError("matrix has no rows");
    std::vector<BigVector> out;
    for (const auto& r : rows) {
        BigVector v;
        for (const auto& x : r) v.push_back(from_py(x));
        out.push_back(std::move(v));
    }
    return IntegerMatrix::from_rows(out, out.front().size());
}

PointConfiguration config(const std::vector<Point>& pts) {
    if (pts.empty()) throw PreconditionError("empty configuration");
    return PointConfiguration(pts.front().size(), pts);
}

std::vector<PointConfiguration> configs(const std::vector<std::vector<Point>>& tuple) {
    std::vector<PointConfiguration> out;
    for (const auto& pts : tuple) out.push_back(config(pts));
    return out;
}

py::object fraction(const Rational& q) {
    static py::object cls = py::module_::import("fractions").attr("Fraction");
    return cls(to_py(q.get_num()), to_py(q.get_den()));
}

Rational rational_from_py(const py::handle& h) {
    if (py::isinstance<py::float_>(h)) throw PreconditionError("floats are not exact; pass int, str or Fraction");
    return io::parse_rational(py::str(h).cast<std::string>());
}

GaussianRational coefficient_from_py(const py::handle& h) {
    if (py::isinstance<py::tuple>(h) || py::isinstance<py::list>(h)) {
        auto seq = py::reinterpret_borrow<py::sequence>(h);
        if (seq.size() != 2) throw PreconditionError("a complex coefficient is (re, im)");
        return {rational_from_py(seq[0]), rational_from_py(seq[1])};
    }
    return {rational_from_py(h), Rational(0)};
}

/// Each polynomial is a dict {exponent tuple: coefficient}.
PolynomialSystem system_from_py(std::size_t num_vars, const py::list& polys) {
    std::vector<Polynomial> out;
    for (const auto& p : polys) {
        Polynomial f(num_vars);
        for (const auto& [e, c] : p.cast<py::dict>()) f.add_term(e.cast<Exponent>(), coefficient_from_py(c));
        out.push_back(std::move(f));
    }
    return PolynomialSystem(num_vars, std::move(out));
}

MixedVolumeStrategy strategy(const std::string& name) {
    if (name == "auto") return MixedVolumeStrategy::automatic;
    if (name == "cells") return MixedVolumeStrategy::cells;
    if (name == "ie") return MixedVolumeStrategy::inclusion_exclusion;
    if (name == "planar") return MixedVolumeStrategy::planar;
    throw PreconditionError("unknown method \"" + name + "\"");
}

}  // namespace

PYBIND11_MODULE(_bkk, m) {
    m.doc() = "Exact root counting for sparse polynomial systems";

    static py::exception<Error> base(m, "BkkError", PyExc_ValueError);
    static py::exception<DimensionError> dimension(m, "DimensionError", base.ptr());
    static py::exception<PreconditionError> precondition(m, "PreconditionError", base.ptr());
    static py::exception<RangeError> range(m, "RangeError", base.ptr());
    static py::exception<GenericityError> genericity(m, "GenericityError", base.ptr());
    static py::exception<ParseError> parse(m, "ParseError", base.ptr());
    static py::exception<InternalError> internal(m, "InternalError", base.ptr());
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const DimensionError& e) {
            dimension(e.what());
        } catch (const PreconditionError& e) {
            precondition(e.what());
        } catch (const RangeError& e) {
            range(e.what());
        } catch (const GenericityError& e) {
            genericity(e.what());
        } catch (const ParseError& e) {
            parse(e.what());
        } catch (const InternalError& e) {
            internal(e.what());
        } catch (const Error& e) {
            base(e.what());
        }
    });

    m.def("determinant", [](const std::vector<std::vector<py::object>>& a) { return to_py(determinant(matrix_from_py(a))); });

    m.def(
        "hermite_factorization",
        [](const std::vector<std::vector<py::object>>& a) {
            const auto f = hermite_factorization(matrix_from_py(a));
            py::dict out;
            out["U"] = to_py(f.U);
            out["H"] = to_py(f.H);
            out["rank"] = f.rank;
            out["pivot_product"] = to_py(f.pivot_product);
            out["pivot_columns"] = f.pivot_columns;
            return out;
        },
        "U * M = H with U unimodular and H in Hermite normal form.");

    m.def(
        "count_torus_roots",
        [](const std::vector<std::vector<py::object>>& e) -> py::object {
            const auto c = count_torus_roots(matrix_from_py(e));
            if (!c.finite) return py::none();
            return to_py(c.count);
        },
        "|det E|, or None when E is singular.");

    m.def(
        "solve_binomial",
        [](const std::vector<std::vector<py::object>>& e, const std::vector<Complex>& c) {
            return enumerate_roots(BinomialSystem(matrix_from_py(e), c), RootMode::numeric).roots;
        },
        py::arg("exponents"), py::arg("constants"), "Every torus root of x^{a_i} = c_i.");

    m.def(
        "toric_ideal",
        [](const std::vector<Point>& pts) {
            const auto t = toric_ideal_binomials(config(pts));
            py::list rel;
            for (const auto& r : t.relations) rel.append(py::make_tuple(to_py(r.plus), to_py(r.minus)));
            py::dict out;
            out["relations"] = rel;
            out["degree"] = to_py(t.degree);
            out["rank"] = t.rank;
            return out;
        },
        "Binomial relations (plus, minus) meaning p^plus = p^minus.");

    m.def("normalized_volume", [](const std::vector<Point>& pts) { return to_py(normalized_volume(config(pts))); });
    m.def("euclidean_volume", [](const std::vector<Point>& pts) { return fraction(euclidean_volume(config(pts))); });
    m.def("convex_hull", [](const std::vector<Point>& pts) { return convex_hull(config(pts)).vertices; });

    m.def(
        "mixed_volume",
        [](const std::vector<std::vector<Point>>& tuple, const std::string& method, std::uint64_t seed) {
            const auto r = mixed_volume(configs(tuple), strategy(method), seed);
            py::dict out;
            out["value"] = to_py(r.value);
            out["method"] = method_name(r.method);
            if (!r.closed_form.empty()) out["closed_form"] = r.closed_form;
            return out;
        },
        py::arg("configurations"), py::arg("method") = "auto", py::arg("seed") = 0);

    m.def(
        "subdivide",
        [](const std::vector<std::vector<Point>>& tuple, const std::optional<std::vector<std::vector<Coord>>>& lifts,
           std::uint64_t seed) {
            const auto inputs = configs(tuple);
            MixedSubdivision s;
            if (lifts) {
                std::vector<LiftingFunction> w;
                for (const auto& v : *lifts) w.push_back({v});
                s = induced_mixed_subdivision(inputs, w);
            } else {
                s = certified_generic_subdivision(inputs, seed);
            }
            py::list cells;
            for (const auto& c : s.cells) {
                py::dict cell;
                cell["witness"] = to_py(c.witness);
                cell["type"] = c.type;
                cell["parts"] = c.parts;
                cells.append(cell);
            }
            py::list used;
            for (const auto& w : s.lifts) used.append(py::cast(w.values));
            py::dict out;
            out["cells"] = cells;
            out["lifts"] = used;
            return out;
        },
        py::arg("configurations"), py::arg("lifts") = py::none(), py::arg("seed") = 0,
        "Cells of the subdivision induced by explicit lifts, or by certified generic random lifts.");

    m.def(
        "bounds",
        [](std::size_t num_vars, const py::list& polys, std::uint64_t seed) {
            const auto r = bound_report(system_from_py(num_vars, polys), seed);
            auto opt = [](const std::optional<BigInt>& v) -> py::object { return v ? py::object(to_py(*v)) : py::none(); };
            py::dict out;
            out["bezout"] = opt(r.bezout);
            out["multigraded"] = opt(r.multigraded);
            out["kushnirenko"] = to_py(r.kushnirenko_union);
            out["bkk"] = opt(r.bkk);
            out["components"] = to_py(r.component_bound);
            out["component_branch"] = branch_name(r.branch);
            return out;
        },
        py::arg("num_vars"), py::arg("polynomials"), py::arg("seed") = 0,
        "Root count bounds; each polynomial is a dict {exponent tuple: coefficient}.");

    m.def("permanent", [](const std::vector<std::vector<py::object>>& d) { return to_py(permanent(matrix_from_py(d))); });
}
