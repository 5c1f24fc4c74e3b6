#include "hosoya/canonical.hpp"
#include "hosoya/edgelist.hpp"
#include "hosoya/enumerate.hpp"
#include "hosoya/error.hpp"
#include "hosoya/families.hpp"
#include "hosoya/fibonacci.hpp"
#include "hosoya/matching.hpp"
#include "hosoya/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace hosoya;

namespace {

// Exact values cross the boundary as Python ints via their decimal form.
py::int_ to_py_int(const BigNat& v) {
    return py::reinterpret_steal<py::int_>(PyLong_FromString(v.to_decimal().c_str(), nullptr, 10));
}

py::int_ to_py_int(const BigInt& v) {
    return py::reinterpret_steal<py::int_>(PyLong_FromString(v.to_decimal().c_str(), nullptr, 10));
}

std::map<std::string, int> params_of(const py::kwargs& kwargs) {
    std::map<std::string, int> params;
    for (auto item : kwargs) {
        std::string key = py::cast<std::string>(item.first);
        if (key == "base") continue;
        params[key] = py::cast<int>(item.second);
    }
    return params;
}

FamilySpec spec_of(const std::string& name, const py::kwargs& kwargs) {
    std::optional<Graph> base;
    if (kwargs.contains("base")) base = py::cast<Graph>(kwargs["base"]);
    return make_spec(name, params_of(kwargs), base);
}

py::dict check_to_dict(const CheckResult& result) {
    py::module_ json = py::module_::import("json");
    return py::cast<py::dict>(json.attr("loads")(to_json(result).dump()));
}

} // namespace

PYBIND11_MODULE(_hosoya, m) {
    m.doc() = "Exact Hosoya index computations, unicyclic enumeration, and ordering verification";

    py::register_exception<Error>(m, "HosoyaError");

    py::class_<Graph>(m, "Graph")
        .def(py::init([](int n, const std::vector<std::pair<int, int>>& edges) {
                 return Graph::from_edge_list(n, edges);
             }),
             py::arg("n"), py::arg("edges"))
        .def_property_readonly("n", &Graph::vertex_count)
        .def_property_readonly("m", &Graph::edge_count)
        .def("edges", [](const Graph& g) { return g.edges(); })
        .def("degree", &Graph::degree)
        .def("has_edge", &Graph::has_edge)
        .def("delete_edge", &Graph::delete_edge)
        .def("delete_vertices",
             [](const Graph& g, const std::vector<int>& s) { return g.delete_vertices(s); })
        .def("connected_components", &Graph::connected_components)
        .def("is_connected", &Graph::is_connected)
        .def("is_forest", &Graph::is_forest)
        .def("is_unicyclic", &Graph::is_unicyclic)
        .def("girth",
             [](const Graph& g) -> py::object {
                 auto v = g.girth();
                 return v ? py::cast(*v) : py::none();
             })
        .def("relabeled", &Graph::relabeled)
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            return "Graph(n=" + std::to_string(g.vertex_count()) + ", m=" +
                   std::to_string(g.edge_count()) + ")";
        });

    m.def("parse_edge_list", [](const std::string& text) { return parse_edge_list(text); });
    m.def("format_edge_list", &format_edge_list);

    m.def("hosoya", [](const Graph& g) { return to_py_int(hosoya_index(g)); },
          "Total matching count (exact)");
    m.def("hosoya_bruteforce", [](const Graph& g) { return to_py_int(hosoya_bruteforce(g)); });
    m.def("hosoya_recursive", [](const Graph& g) { return to_py_int(hosoya_recursive(g)); });
    m.def("hosoya_forest", [](const Graph& g) { return to_py_int(hosoya_forest(g)); });
    m.def("hosoya_unicyclic", [](const Graph& g) { return to_py_int(hosoya_unicyclic(g)); });
    m.def("matching_polynomial", [](const Graph& g) {
        py::list coeffs;
        for (const auto& c : matching_polynomial(g).coeffs) coeffs.append(to_py_int(c));
        return coeffs;
    });

    m.def("fib", [](long long n) { return to_py_int(fib(n)); }, "Fibonacci, signed index");
    m.def("check_splitting_identity", &check_splitting_identity);
    m.def("check_cassini_like", &check_cassini_like);
    m.def("fib_product_chain", [](int n) {
        py::list out;
        for (const auto& p : fib_product_chain(n))
            out.append(py::make_tuple(p.lo, p.hi, to_py_int(p.value)));
        return out;
    });

    m.def("build_family",
          [](const std::string& name, const py::kwargs& kwargs) { return build(spec_of(name, kwargs)); },
          py::arg("name"));
    m.def("closed_form_z",
          [](const std::string& name, const py::kwargs& kwargs) {
              return to_py_int(closed_form_z(spec_of(name, kwargs)));
          },
          py::arg("name"));
    m.def("family_catalog", [](int n) {
        py::list out;
        for (const auto& spec : family_catalog(n)) out.append(family_name(spec));
        return out;
    });
    m.def("attach_path", &attach_path, py::arg("g"), py::arg("v"), py::arg("n"), py::arg("k"));

    m.def("ahu_encode", &ahu_encode, py::arg("tree"), py::arg("root"));
    m.def("canonical_code", &canonical_code);
    m.def("enumerate_unicyclic",
          [](int n, std::optional<int> girth) { return enumerate_unicyclic(n, girth); },
          py::arg("n"), py::arg("girth") = py::none());
    m.def("count_unicyclic", [](int n) { return count_unicyclic(n); });
    m.def("enumerate_trees", &enumerate_trees);

    m.def("verify_small_ordering",
          [](int n) { return check_to_dict(verify_small_ordering(n)); });
    m.def("verify_largest_ordering",
          [](int n, bool formula_only) {
              return check_to_dict(verify_largest_ordering(n, formula_only));
          },
          py::arg("n"), py::arg("formula_only") = false);
    m.def("verify_noncycle_bound", [](int n) { return check_to_dict(verify_noncycle_bound(n)); });
    m.def("verify_girth_max",
          [](int n, int k) { return check_to_dict(verify_girth_max(n, k)); });
    m.def("verify_girth_second_max",
          [](int n, int k) { return check_to_dict(verify_girth_second_max(n, k)); });
    m.def("verify_family_chains", [](int n) { return check_to_dict(verify_family_chains(n)); });
    m.def("verify_fib_identities", []() { return check_to_dict(verify_fib_identities()); });
    m.def("verify_path_position_chain",
          [](const Graph& g, int v, int n) {
              return check_to_dict(verify_path_position_chain(g, v, n));
          },
          py::arg("g"), py::arg("v"), py::arg("n"));
}
