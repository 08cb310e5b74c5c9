// Python bindings. Rationals cross the boundary as fractions.Fraction; inputs
// may be int, str ("p/q") or Fraction.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nodal/cone.hpp"
#include "nodal/embedding.hpp"
#include "nodal/report.hpp"

namespace py = pybind11;
using namespace nodal;

namespace {

using CurvePtr = std::shared_ptr<const NodalCurve>;

struct Curve {
    CurvePtr ptr;
};

py::object fraction(const Rational& q) {
    static py::object cls = py::module_::import("fractions").attr("Fraction");
    return cls(to_string(q));
}

Rational rational(const py::handle& obj) { return parse_rational(py::str(obj).cast<std::string>()); }

py::list fractions(const Vector& v) {
    py::list out;
    for (const auto& q : v) out.append(fraction(q));
    return out;
}

py::dict verdict(const AmpleVerdict& v, const NodalCurve& curve) {
    py::list witness;
    for (const auto& p : v.witness) witness.append(p.describe(curve));
    py::dict d;
    d["status"] = to_string(v.status);
    d["criterion"] = v.criterion;
    d["samples_checked"] = v.samples_checked;
    d["witness"] = witness;
    d["reason"] = v.reason;
    return d;
}

LineBundle make_bundle(const Curve& c, std::vector<long> md, const std::optional<py::sequence>& gluings) {
    if (!gluings) return LineBundle(c.ptr, std::move(md));
    std::vector<Rational> g;
    for (const auto& x : *gluings) g.push_back(rational(x));
    return LineBundle(c.ptr, std::move(md), std::move(g));
}

}  // namespace

PYBIND11_MODULE(nodalcone, m) {
    m.doc() = "Exact computations on nodal curves, line bundles and graded cone deformations";
    m.attr("__version__") = tool_version();

    py::register_exception<SpecError>(m, "SpecError", PyExc_ValueError);

    py::class_<Curve>(m, "Curve")
        .def_static("paper_example", [] { return Curve{std::make_shared<const NodalCurve>(paper_example_curve())}; })
        .def_property_readonly("components",
                               [](const Curve& c) {
                                   py::list out;
                                   for (const auto& comp : c.ptr->components) {
                                       py::list pts;
                                       for (const auto& p : comp.marked_points) pts.append(p.str());
                                       out.append(py::make_tuple(comp.name, pts));
                                   }
                                   return out;
                               })
        .def_property_readonly("nodes",
                               [](const Curve& c) {
                                   py::list out;
                                   for (const auto& n : c.ptr->nodes)
                                       out.append(py::make_tuple(py::make_tuple(n.a.component, n.a.point),
                                                                 py::make_tuple(n.b.component, n.b.point)));
                                   return out;
                               })
        .def_property_readonly("arithmetic_genus", [](const Curve& c) { return arithmetic_genus(*c.ptr); })
        .def_property_readonly("betti_1", [](const Curve& c) { return betti_1(dual_graph(*c.ptr)); })
        .def_property_readonly("jacobian_dimension", [](const Curve& c) { return jacobian_dimension(*c.ptr); })
        .def(
            "normalize",
            [](const Curve& c, const std::string& style) {
                if (style != "paper" && style != "affine_safe")
                    throw py::value_error("style must be 'paper' or 'affine_safe'");
                const auto s = style == "paper" ? NormalizationStyle::paper : NormalizationStyle::affine_safe;
                return Curve{std::make_shared<const NodalCurve>(normalize(*c.ptr, s))};
            },
            py::arg("style") = "affine_safe")
        .def("__eq__", [](const Curve& a, const Curve& b) { return *a.ptr == *b.ptr; });

    py::class_<LineBundle>(m, "Bundle")
        .def(py::init(&make_bundle), py::arg("curve"), py::arg("multidegree"), py::arg("gluings") = py::none())
        .def_property_readonly("curve", [](const LineBundle& b) { return Curve{b.curve_ptr()}; })
        .def_property_readonly("multidegree", &LineBundle::multidegree)
        .def_property_readonly("gluings", [](const LineBundle& b) { return fractions(b.gluings()); })
        .def_property_readonly("degree", &LineBundle::degree)
        .def("h0", [](const LineBundle& b) { return h0(b); })
        .def("h1", [](const LineBundle& b) { return h1_direct(b); })
        .def("section_basis",
             [](const LineBundle& b) {
                 py::list out;
                 for (const auto& s : section_basis(b).basis) {
                     py::list blocks;
                     for (const auto& block : s.blocks) blocks.append(fractions(block));
                     out.append(blocks);
                 }
                 return out;
             })
        .def("tensor", [](const LineBundle& a, const LineBundle& b) { return tensor(a, b); })
        .def("dual", [](const LineBundle& b) { return dual(b); })
        .def("power", [](const LineBundle& b, long k) { return power(b, k); })
        .def("__eq__", [](const LineBundle& a, const LineBundle& b) { return a == b; });

    m.def("load_spec", [](const std::string& text) { return parse_spec(text).bundle(); }, py::arg("text"),
          "Parse a JSON curve specification and return its bundle.");
    m.def("dualizing_bundle", [](const Curve& c) { return dualizing_bundle(c.ptr); });
    m.def("tangent_bundle", [](const Curve& c) { return tangent_bundle(c.ptr); });

    m.def("riemann_roch", [](const LineBundle& b) {
        const auto r = riemann_roch_report(b);
        py::dict d;
        d["h0"] = r.h0;
        d["h1"] = r.h1;
        d["degree"] = r.degree;
        d["genus"] = r.genus;
        d["balanced"] = r.balanced;
        return d;
    });
    m.def("serre_duality", [](const LineBundle& b) {
        const auto s = serre_duality_check(b);
        py::dict d;
        d["h1"] = s.h1;
        d["h0_dual"] = s.h0_dual;
        d["holds"] = s.holds();
        return d;
    });
    m.def(
        "globally_generated",
        [](const LineBundle& b, std::size_t samples, std::uint64_t seed) {
            return verdict(globally_generated(b, samples, seed), b.curve());
        },
        py::arg("bundle"), py::arg("samples") = 4, py::arg("seed") = default_sample_seed);
    m.def(
        "very_ample",
        [](const LineBundle& b, std::size_t samples, std::uint64_t seed) {
            return verdict(very_ample(b, samples, seed), b.curve());
        },
        py::arg("bundle"), py::arg("samples") = 4, py::arg("seed") = default_sample_seed);
    m.def("multiplication_map", [](const LineBundle& b, std::size_t k) {
        const auto mm = multiplication_map(b, k);
        py::dict d;
        d["source"] = mm.monomials.size();
        d["target"] = mm.target.dimension();
        d["rank"] = mm.rank;
        d["surjective"] = mm.surjective();
        return d;
    });
    m.def("quadric_count", [](const LineBundle& b) { return quadric_ideal(b).quadrics.size(); });
    m.def(
        "graded_report",
        [](const LineBundle& b, long m_min, long m_max) {
            py::list out;
            for (const auto& e : graded_report(b, m_min, m_max).entries) {
                py::dict d;
                d["m"] = e.m;
                d["classification"] = to_string(e.classification);
                d["t0_formula"] = e.t0_formula;
                d["t0_direct"] = e.t0_direct;
                d["t1_formula"] = e.t1_formula;
                d["t1_direct"] = e.t1_direct;
                d["hilbert"] = e.hilbert;
                d["f_degree"] = e.f_degree;
                d["discrepancy"] = e.discrepancy;
                out.append(d);
            }
            return out;
        },
        py::arg("bundle"), py::arg("m_min") = default_weight_min, py::arg("m_max") = default_weight_max);
    m.def(
        "run",
        [](const std::string& subcommand, const std::string& spec_text, long m_min, long m_max, std::size_t samples,
           std::uint64_t seed, bool basis) {
            const auto sub = parse_subcommand(subcommand);
            if (!sub) throw py::value_error("unknown subcommand '" + subcommand + "'");
            RunOptions opts{m_min, m_max, samples, seed, basis};
            const auto result = run(*sub, parse_spec(spec_text), spec_text, opts);
            return py::module_::import("json").attr("loads")(result.document.dump());
        },
        py::arg("subcommand"), py::arg("spec_text"), py::arg("m_min") = default_weight_min,
        py::arg("m_max") = default_weight_max, py::arg("samples") = 4, py::arg("seed") = default_sample_seed,
        py::arg("basis") = false, "Run a tool subcommand and return its JSON document as a dict.");
}
