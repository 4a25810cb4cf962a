#include "hqg/errors.hpp"
#include "hqg/hopf.hpp"
#include "hqg/json_io.hpp"
#include "hqg/loop.hpp"
#include "hqg/ydq.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

namespace py = pybind11;
using namespace hqg;

namespace {

py::object json_to_py(const nlohmann::ordered_json& j) {
    switch (j.type()) {
        case nlohmann::ordered_json::value_t::null: return py::none();
        case nlohmann::ordered_json::value_t::boolean: return py::bool_(j.get<bool>());
        case nlohmann::ordered_json::value_t::number_integer: return py::int_(j.get<long long>());
        case nlohmann::ordered_json::value_t::number_unsigned:
            return py::int_(j.get<unsigned long long>());
        case nlohmann::ordered_json::value_t::number_float: return py::float_(j.get<double>());
        case nlohmann::ordered_json::value_t::string: return py::str(j.get<std::string>());
        case nlohmann::ordered_json::value_t::array: {
            py::list out;
            for (const auto& e : j) out.append(json_to_py(e));
            return out;
        }
        default: {
            py::dict out;
            for (const auto& [k, v] : j.items()) out[py::str(k)] = json_to_py(v);
            return out;
        }
    }
}

py::object report_to_py(const Report& r) { return json_to_py(r.to_json()); }

LinearMap matrix_from_py(const py::object& rows) {
    const auto j = nlohmann::json::parse(py::str(py::module_::import("json").attr("dumps")(rows))
                                             .cast<std::string>());
    return matrix_from_json(j);
}

py::list matrix_to_py(const LinearMap& m) {
    py::list rows;
    for (Index r = 0; r < m.cod_dim(); ++r) {
        py::list row;
        for (Index c = 0; c < m.dom_dim(); ++c) row.append(py::str(m.at(r, c).str()));
        rows.append(std::move(row));
    }
    return rows;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact-arithmetic kernel for Hopf quasigroups, Yetter-Drinfeld quasimodules and "
              "their braided category structure";

    py::register_exception<ParseError>(m, "ParseError");
    py::register_exception<ValidationError>(m, "ValidationError");
    py::register_exception<PreconditionError>(m, "PreconditionError");
    py::register_exception<DimensionError>(m, "DimensionError");
    py::register_exception<SingularMatrixError>(m, "SingularMatrixError");

    py::class_<LinearMap>(m, "LinearMap")
        .def(py::init([](const py::object& rows) { return matrix_from_py(rows); }), py::arg("rows"),
             "dense matrix from nested lists of ints or 'p/q' strings")
        .def_static("identity", &LinearMap::identity)
        .def_property_readonly("dom_dim", &LinearMap::dom_dim)
        .def_property_readonly("cod_dim", &LinearMap::cod_dim)
        .def("rows", &matrix_to_py, "entries as nested lists of rational strings")
        .def("entry", [](const LinearMap& f, Index r, Index c) { return f.at(r, c).str(); })
        .def("transpose", &LinearMap::transpose)
        .def("__eq__", [](const LinearMap& a, const LinearMap& b) { return a == b; })
        .def("__repr__", [](const LinearMap& f) { return "<LinearMap " + f.shape_str() + ">"; });

    m.def("compose", [](const LinearMap& f, const LinearMap& g) { return compose(f, g); });
    m.def("tensor_map", [](const LinearMap& f, const LinearMap& g) { return tensor_map(f, g); });
    m.def("swap", [](Index a, Index b) { return swap(a, b); });
    m.def("invert", [](const LinearMap& f) { return invert(f); });
    m.def("apply", [](const LinearMap& f, const std::vector<std::string>& v) {
        std::vector<Rational> vec;
        vec.reserve(v.size());
        for (const auto& s : v) vec.push_back(Rational::parse(s));
        std::vector<std::string> out;
        for (const auto& r : hqg::apply(f, vec)) out.push_back(r.str());
        return out;
    });

    py::class_<Loop>(m, "Loop")
        .def_readonly("size", &Loop::size)
        .def_readonly("identity", &Loop::identity)
        .def_readonly("table", &Loop::table)
        .def("mul", &Loop::mul);
    m.def("validate_loop", &validate_loop, py::arg("table"), py::arg("identity"));
    m.def("builtin_loop", &builtin_loop);
    m.def("classify", [](const Loop& l) {
        const auto f = classify(l);
        py::dict d;
        d["inverse_property"] = f.has_inverse_property;
        d["moufang"] = f.is_moufang;
        d["flexible"] = f.is_flexible;
        d["associative"] = f.is_associative;
        return d;
    });
    m.def("inverse_map", &inverse_map);

    py::class_<HopfQuasigroup>(m, "HopfQuasigroup")
        .def_property_readonly("dim", &HopfQuasigroup::dim)
        .def("mult", &HopfQuasigroup::mult)
        .def("comult", &HopfQuasigroup::comult)
        .def("unit", &HopfQuasigroup::unit)
        .def("counit", &HopfQuasigroup::counit)
        .def("antipode", &HopfQuasigroup::antipode)
        .def("to_json", [](const HopfQuasigroup& h) { return hopf_to_json(h).dump(2); })
        .def("__eq__", [](const HopfQuasigroup& a, const HopfQuasigroup& b) { return a == b; });
    m.def("loop_algebra", &loop_algebra);
    m.def("hopf_from_json", [](const std::string& text, bool validate) {
        return hopf_from_json(nlohmann::json::parse(text), validate);
    }, py::arg("text"), py::arg("validate") = true);
    m.def("check_hopf_quasigroup", [](const HopfQuasigroup& h) { return report_to_py(check_hopf_quasigroup(h)); });
    m.def("antipode_properties", [](const HopfQuasigroup& h) { return report_to_py(antipode_properties(h)); });
    m.def("hopf_predicates", [](const HopfQuasigroup& h) {
        const auto f = hopf_predicates(h);
        py::dict d;
        d["moufang"] = f.moufang;
        d["flexible"] = f.flexible;
        return d;
    });

    py::class_<HopfCoquasigroup>(m, "HopfCoquasigroup").def_property_readonly("dim", &HopfCoquasigroup::dim);
    m.def("dualize", [](const HopfQuasigroup& h) { return dualize(h); });
    m.def("dualize", [](const HopfCoquasigroup& h) { return dualize(h); });
    m.def("check_coquasigroup", [](const HopfCoquasigroup& h) {
        const auto rep = check_coquasigroup(h);
        py::dict d;
        d["axioms"] = report_to_py(rep.axioms);
        d["co_flexible"] = rep.co_flexible;
        d["co_moufang"] = rep.co_moufang;
        return d;
    });

    py::class_<HopfAutomorphism>(m, "HopfAutomorphism")
        .def(py::init([](const py::object& rows) { return HopfAutomorphism(matrix_from_py(rows)); }))
        .def_static("identity", &HopfAutomorphism::identity)
        .def("matrix", &HopfAutomorphism::matrix)
        .def("inverse", &HopfAutomorphism::inverse)
        .def("__eq__", [](const HopfAutomorphism& a, const HopfAutomorphism& b) { return a == b; });
    m.def("automorphism_from_loop_perm", &automorphism_from_loop_perm);
    m.def("check_automorphism",
          [](const HopfQuasigroup& h, const LinearMap& a) { return report_to_py(check_automorphism(h, a)); });
    m.def("ab_flexible", &ab_flexible);

    py::class_<AutPair>(m, "AutPair")
        .def(py::init<HopfAutomorphism, HopfAutomorphism>(), py::arg("alpha"), py::arg("beta"))
        .def_static("identity", &AutPair::identity)
        .def_readonly("alpha", &AutPair::alpha)
        .def_readonly("beta", &AutPair::beta)
        .def("__eq__", [](const AutPair& a, const AutPair& b) { return a == b; });
    m.def("g_mul", &g_mul);
    m.def("g_inv", &g_inv);

    py::class_<YdqModule>(m, "YdqModule")
        .def_property_readonly("mdim", &YdqModule::mdim)
        .def_property_readonly("component", &YdqModule::component)
        .def("action_matrix", &YdqModule::action_matrix, py::return_value_policy::copy)
        .def("coaction_matrix", &YdqModule::coaction_matrix, py::return_value_policy::copy);
    m.def("make_canonical", &make_canonical);
    m.def("unit_module", &unit_module);
    m.def("tensor_ydq", &tensor_ydq);
    m.def("conjugate", &conjugate);
    m.def("ydq_equal", &ydq_equal);
    m.def("braiding", [](const YdqModule& a, const YdqModule& b) { return braiding(a, b); });
    m.def("braiding_inverse",
          [](const YdqModule& a, const YdqModule& b) { return braiding_inverse(a, b); });
    m.def("check_module", [](const YdqModule& mod) { return report_to_py(check_module(mod)); });
    m.def("check_compat", [](const YdqModule& mod) { return report_to_py(check_compat(mod).to_report()); });
    m.def("check_quasi_comodule",
          [](const YdqModule& mod) { return report_to_py(check_quasi_comodule(mod)); });
    m.def("check_plain_ydq", [](const YdqModule& mod) { return report_to_py(check_plain_ydq(mod)); });
    m.def("verify_braiding_morphism",
          [](const YdqModule& a, const YdqModule& b) { return report_to_py(verify_braiding_morphism(a, b)); });
    m.def("verify_hexagons", [](const YdqModule& a, const YdqModule& b, const YdqModule& c) {
        return report_to_py(verify_hexagons(a, b, c));
    });
    m.def("verify_phi_braiding", &verify_phi_braiding);
    m.def("solve_morphism_space", &solve_morphism_space);
    m.def("verify_naturality",
          [](const YdqModule& src_f, const YdqModule& dst_f, const LinearMap& f, const YdqModule& src_g,
             const YdqModule& dst_g, const LinearMap& g) {
              YdqMorphism fm{&src_f, &dst_f, f};
              YdqMorphism gm{&src_g, &dst_g, g};
              return verify_naturality(fm, gm);
          });
    m.def("is_ydq_morphism", [](const YdqModule& src, const YdqModule& dst, const LinearMap& f) {
        YdqMorphism fm{&src, &dst, f};
        return is_ydq_morphism(fm);
    });
    m.def(
        "verify_t_category",
        [](const HopfQuasigroup& h, const std::vector<YdqModule>& modules,
           const std::vector<AutPair>& gens, Index max_dim, std::uint64_t seed, bool include_unit,
           bool strict_hexagons) {
            TCategoryOptions opts;
            opts.max_dim = max_dim;
            opts.seed = seed;
            opts.include_unit = include_unit;
            opts.strict_hexagons = strict_hexagons;
            return report_to_py(verify_t_category(h, modules, gens, opts));
        },
        py::arg("hopf"), py::arg("modules"), py::arg("gens"), py::arg("max_dim") = 16,
        py::arg("seed") = 1, py::arg("include_unit") = true, py::arg("strict_hexagons") = false);
}
