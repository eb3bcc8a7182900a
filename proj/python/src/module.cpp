#include <string>
#include <vector>

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "plc/coarse.hpp"
#include "plc/error.hpp"
#include "plc/finite_group.hpp"
#include "plc/groups.hpp"
#include "plc/io.hpp"
#include "plc/metrics.hpp"
#include "plc/pl_map.hpp"
#include "plc/properties.hpp"
#include "plc/random.hpp"
#include "plc/zappa_szep.hpp"

namespace py = pybind11;

// Rationals cross the boundary as fractions.Fraction. Ints, Fractions and
// "p/q" strings are accepted; floats are refused so nothing inexact slips in.
namespace pybind11::detail {
template <>
struct type_caster<plc::Rat> {
    PYBIND11_TYPE_CASTER(plc::Rat, const_name("fractions.Fraction"));

    bool load(handle src, bool) {
        if (!src || PyFloat_Check(src.ptr())) return false;
        const auto fraction = module_::import("fractions").attr("Fraction");
        const bool ok = PyLong_Check(src.ptr()) || PyUnicode_Check(src.ptr()) || isinstance(src, fraction);
        if (!ok || PyBool_Check(src.ptr())) return false;
        try {
            value = plc::Rat::parse(str(src).cast<std::string>());
        } catch (const plc::Error&) {
            return false;
        }
        return true;
    }

    static handle cast(const plc::Rat& r, return_value_policy, handle) {
        return module_::import("fractions").attr("Fraction")(r.str()).release();
    }
};
} // namespace pybind11::detail

namespace {

using plc::Carrier;
using plc::Node;
using plc::PLMap;
using plc::Rat;

std::vector<Node> to_nodes(const std::vector<std::pair<Rat, Rat>>& pts) {
    std::vector<Node> nodes;
    nodes.reserve(pts.size());
    for (const auto& [x, y] : pts) nodes.push_back({x, y});
    return nodes;
}

std::vector<std::pair<Rat, Rat>> to_pairs(const PLMap& f) {
    std::vector<std::pair<Rat, Rat>> out;
    for (const auto& n : f.nodes()) out.emplace_back(n.x, n.y);
    return out;
}

std::string dump(const plc::io::json& j) { return j.dump(); }

plc::ElemSet resolve(const plc::FiniteGroup& g, const std::vector<std::string>& labels) {
    plc::ElemSet out;
    for (const auto& l : labels) out.push_back(g.find(l));
    return out;
}

std::string_view status_name(plc::MaxFormulaStatus s) {
    switch (s) {
    case plc::MaxFormulaStatus::Holds: return "holds";
    case plc::MaxFormulaStatus::Violated: return "violated";
    case plc::MaxFormulaStatus::HypothesisFails: return "hypothesis-fails";
    }
    return "unknown";
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact piecewise-linear homeomorphism groups and their coarse geometry.";

    static py::exception<plc::Error> error_type(m, "PlcError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const plc::Error& e) {
            py::object exc = py::reinterpret_borrow<py::object>(error_type)(e.what());
            exc.attr("kind") = std::string(plc::to_string(e.kind()));
            PyErr_SetObject(error_type.ptr(), exc.ptr());
        }
    });

    py::class_<PLMap>(m, "PLMap")
        .def(py::init([](const std::vector<std::pair<Rat, Rat>>& nodes, const std::string& carrier) {
                 return PLMap::make(to_nodes(nodes), plc::carrier_from_string(carrier));
             }),
             py::arg("nodes"), py::arg("carrier") = "interval")
        .def_static(
            "identity", [](const std::string& carrier) { return PLMap::identity(plc::carrier_from_string(carrier)); },
            py::arg("carrier") = "interval")
        .def_static("from_json", [](const std::string& text) { return plc::io::plmap_from_json(plc::io::parse(text)); })
        .def("to_json", [](const PLMap& f) { return dump(plc::io::to_json(f)); })
        .def_property_readonly("nodes", &to_pairs)
        .def_property_readonly("carrier", [](const PLMap& f) { return std::string(plc::to_string(f.carrier())); })
        .def("is_identity", &PLMap::is_identity)
        .def("__call__", [](const PLMap& f, const Rat& x) { return f(x); })
        .def("preimage", &PLMap::preimage)
        .def("__matmul__", [](const PLMap& f, const PLMap& g) { return plc::compose(f, g); })
        .def("inverse", [](const PLMap& f) { return plc::invert(f); })
        .def(py::self == py::self)
        .def("__len__", &PLMap::size)
        .def("__repr__", [](const PLMap& f) { return "PLMap(" + dump(plc::io::to_json(f)) + ")"; });

    m.def("compose", &plc::compose, py::arg("f"), py::arg("g"));
    m.def("invert", &plc::invert, py::arg("f"));
    m.def("derivative", [](const PLMap& f) {
        const auto d = plc::derivative(f);
        return py::make_tuple(d.breakpoints, d.values);
    });

    m.def("d_inf", [](const PLMap& f, const PLMap& g) { return plc::d_inf(f, g); });
    m.def("d_star", [](const PLMap& f, const PLMap& g) { return plc::d_star(f, g); });
    m.def("d_product", [](const PLMap& f, const PLMap& g) { return plc::d_product(f, g); });
    m.def("d_sum", [](const PLMap& f, const PLMap& g) { return plc::d_sum(f, g); });

    m.def("hat", [](const PLMap& f) { return plc::hat(plc::IntervalHomeo(f)).map(); });
    m.def("restrict", [](const PLMap& k) { return plc::restrict_to_interval(plc::LineHomeoZ(k)).map(); });
    m.def("translation", [](const Rat& r) { return plc::make_translation(r).map(); });
    m.def("rotation", [](const Rat& p) { return plc::make_rotation(plc::CirclePoint(p)).map(); });

    m.def("decompose", [](const PLMap& f) {
        if (f.carrier() == Carrier::CircleLift) {
            const auto d = plc::omega_circle_inv(plc::CircleHomeo(f));
            return py::make_tuple(d.p.value(), d.k.map());
        }
        const auto d = plc::omega_line_inv(plc::LineHomeoZ(f));
        return py::make_tuple(d.r, d.k.map());
    });
    m.def("psi", [](const PLMap& k, const Rat& r) {
        if (k.carrier() == Carrier::CircleLift) return plc::psi_circle(plc::CircleHomeo(k), plc::CirclePoint(r)).map();
        return plc::psi_line(plc::LineHomeoZ(k), r).map();
    });

    m.def("homotopy", [](const PLMap& f, const Rat& r) { return plc::homotopy_F(plc::IntervalHomeo(f), r).map(); });
    m.def("factorize_json", [](const PLMap& f, const Rat& delta) {
        if (f.carrier() == Carrier::LineZ) return dump(plc::io::to_json(plc::cb_factorize_isotropy(plc::LineHomeoZ(f), delta)));
        return dump(plc::io::to_json(plc::cb_factorize(plc::IntervalHomeo(f), delta)));
    });
    m.def("qi_witness_json", [](const PLMap& g) { return dump(plc::io::to_json(plc::qi_witness(plc::LineHomeoZ(g)))); });
    m.def("qi_check_json", [](const PLMap& f, const PLMap& g) {
        return dump(plc::io::to_json(plc::qi_inequality_check(plc::LineHomeoZ(f), plc::LineHomeoZ(g))));
    });

    m.def(
        "gen_random",
        [](std::uint64_t seed, std::size_t nodes, std::uint64_t denom, const std::string& carrier) {
            return plc::gen_random({seed, nodes, denom, plc::carrier_from_string(carrier)});
        },
        py::arg("seed"), py::arg("nodes") = 5, py::arg("denom") = 16, py::arg("carrier") = "interval");

    py::class_<plc::FiniteGroup>(m, "FiniteGroup")
        .def(py::init<std::vector<std::vector<plc::Elem>>, std::vector<std::string>>(), py::arg("table"),
             py::arg("names") = std::vector<std::string>{})
        .def_static("from_json", [](const std::string& text) { return plc::io::group_from_json(plc::io::parse(text)); })
        .def("to_json", [](const plc::FiniteGroup& g) { return dump(plc::io::to_json(g)); })
        .def_property_readonly("order", &plc::FiniteGroup::order)
        .def_property_readonly("identity", &plc::FiniteGroup::identity)
        .def_property_readonly("names", &plc::FiniteGroup::names)
        .def("mul", &plc::FiniteGroup::mul)
        .def("inv", &plc::FiniteGroup::inv)
        .def("find", &plc::FiniteGroup::find)
        .def("table", &plc::FiniteGroup::table);

    m.def("cyclic_group", &plc::cyclic_group);
    m.def("symmetric_group", &plc::symmetric_group);
    m.def("direct_product", &plc::direct_product);
    m.def("trivial_group", &plc::trivial_group);
    m.def("generated_subgroup", [](const plc::FiniteGroup& g, const std::vector<std::string>& gens) {
        return plc::generated_subgroup(g, resolve(g, gens));
    });

    m.def("zs_decompose_json", [](const plc::FiniteGroup& g, const std::vector<std::string>& h,
                                  const std::vector<std::string>& k) {
        return dump(plc::io::to_json(plc::zs_internal_decompose(g, plc::make_set(resolve(g, h)), plc::make_set(resolve(g, k)))));
    });
    m.def("zs_build", [](const std::string& zsdata) {
        const auto zs = plc::io::zsdata_from_json(plc::io::parse(zsdata));
        return plc::zs_external_build(plc::external_input(zs)).group;
    });
    m.def("word_metric", [](const plc::FiniteGroup& g, const std::vector<std::string>& gens) {
        return plc::word_metric_bfs(g, resolve(g, gens)).dist;
    });
    m.def("max_formula", [](const std::string& zsdata, const std::vector<std::string>& s,
                            const std::vector<std::string>& t) {
        const auto zs = plc::io::zsdata_from_json(plc::io::parse(zsdata));
        const auto rep = plc::zs_max_formula_check(zs, resolve(zs.group, s), resolve(zs.group, t));
        return py::make_tuple(std::string(status_name(rep.status)), rep.reason);
    });

    m.def("suites", [] {
        std::vector<std::pair<std::string, std::string>> out;
        for (const auto& s : plc::suites()) out.emplace_back(s.name, s.description);
        return out;
    });
    m.def(
        "run_suite",
        [](const std::string& name, std::size_t count, std::uint64_t seed, unsigned threads) {
            plc::RunOptions opts;
            opts.count = count;
            opts.seed = seed;
            opts.threads = threads;
            py::gil_scoped_release release;
            const auto r = plc::run_suite(name, opts);
            return std::make_pair(r.passed, r.failed);
        },
        py::arg("name"), py::arg("count") = 100, py::arg("seed") = 1, py::arg("threads") = 1);
}
