#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include "kms/enumerator.hpp"
#include "kms/error.hpp"
#include "kms/harness.hpp"

namespace py = pybind11;
using namespace kms;

namespace {

std::vector<int> as_list(VertexSet s) { return s.vertices(); }

FamilySpec family(const std::string& name, int n, int s, const std::vector<int>& parts, int isolated) {
    if (name == "pendant-pair") return FamilySpec::pendant_pair(n);
    if (name == "pendant-clique") return FamilySpec::pendant_clique(n);
    if (name == "clique-odd") return FamilySpec::clique_odd(n, s);
    if (name == "clique-even") return FamilySpec::clique_even(n, s);
    if (name == "split-star") return FamilySpec::split_star(n, s);
    if (name == "general") return FamilySpec::general(s, parts, isolated);
    throw Error(ErrorCode::invalid_spec, "unknown family '" + name + "'");
}

RunOptions options(int workers, double tol, double eps) {
    RunOptions o;
    o.workers = workers;
    o.eps = eps;
    o.eigen.tol = tol;
    return o;
}

GraphSource source_for(int n, const std::string& path) {
    if (!path.empty()) return file_source(path, n);
    if (n <= kBuiltinEnumerationCap) return enumerated_source(n);
    return sampled_source(n);
}

}  // namespace

PYBIND11_MODULE(_kms, m) {
    m.doc() = "Distance spectral radius and perfect k-matching toolkit";

    static py::exception<Error> kms_error(m, "KmsError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::object err = kms_error;
            py::object exc = err(e.what());
            exc.attr("code") = std::string(to_string(e.code()));
            PyErr_SetObject(kms_error.ptr(), exc.ptr());
        }
    });

    py::class_<Graph>(m, "Graph")
        .def(py::init<int>(), py::arg("n"))
        .def_static(
            "from_edges",
            [](int n, const std::vector<std::pair<int, int>>& edges) {
                std::vector<Edge> es;
                for (auto [u, v] : edges) es.push_back({u, v});
                return Graph::from_edges(n, es);
            },
            py::arg("n"), py::arg("edges"))
        .def_static("from_graph6", [](const std::string& s) { return parse_graph6(s); })
        .def("to_graph6", [](const Graph& g) { return write_graph6(g); })
        .def("order", &Graph::order)
        .def("size", &Graph::size)
        .def("adjacent", &Graph::adjacent)
        .def("degree", &Graph::degree)
        .def("edges",
             [](const Graph& g) {
                 std::vector<std::pair<int, int>> out;
                 for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
                 return out;
             })
        .def("relabeled", &Graph::relabeled)
        .def("is_connected", [](const Graph& g) { return is_connected(g); })
        .def(py::self == py::self)
        .def("__repr__", [](const Graph& g) { return "<Graph " + write_graph6(g) + ">"; });

    m.def("parse_graph6", [](const std::string& s) { return parse_graph6(s); });
    m.def("write_graph6", &write_graph6);
    m.def("path_graph", &path_graph);
    m.def("cycle_graph", &cycle_graph);
    m.def("complete_graph", &complete_graph);
    m.def("complete_bipartite", &complete_bipartite);
    m.def("empty_graph", &empty_graph);
    m.def("split_star", &split_star, py::arg("n"), py::arg("k"));
    m.def("join", &join);
    m.def("disjoint_union", &disjoint_union);
    m.def("build_family", [](const std::string& name, int n, int s, const std::vector<int>& parts, int isolated) {
        return build_family(family(name, n, s, parts, isolated));
    }, py::arg("name"), py::arg("n") = 0, py::arg("s") = 0, py::arg("parts") = std::vector<int>{}, py::arg("isolated") = 0);

    m.def("distance_matrix", [](const Graph& g) {
        const DistanceMatrix d = distance_matrix(g);
        std::vector<std::vector<int>> rows(g.order(), std::vector<int>(g.order()));
        for (int i = 0; i < g.order(); ++i)
            for (int j = 0; j < g.order(); ++j) rows[i][j] = d(i, j);
        return rows;
    });
    m.def("wiener", &wiener);
    m.def("distance_spectral_radius", [](const Graph& g, double tol) {
        EigenOptions o;
        o.tol = tol;
        return distance_spectral_radius(g, o).lambda1;
    }, py::arg("g"), py::arg("tol") = 1e-10);
    m.def("theta", &theta, "Largest root of x^3 + (3-n)x^2 + (9-5n)x - 3n + 5");
    m.def("pendant_clique_cubic", &pendant_clique_cubic);
    m.def("closed_form_lambda1", [](const std::string& name, int n, int s, const std::vector<int>& parts, int isolated) {
        return closed_form_lambda1(family(name, n, s, parts, isolated)).value;
    }, py::arg("name"), py::arg("n") = 0, py::arg("s") = 0, py::arg("parts") = std::vector<int>{}, py::arg("isolated") = 0);

    m.def("deficiency", [](const Graph& g, int k) {
        const auto r = deficiency(g, k);
        std::vector<std::vector<int>> barriers;
        for (VertexSet s : r.barriers) barriers.push_back(as_list(s));
        return py::make_tuple(r.value, barriers);
    }, py::arg("g"), py::arg("k"));
    m.def("decide_property", [](const Graph& g, const std::string& property, int k, int d) {
        const auto v = decide_property(g, PropertyQuery{property_from_string(property), k, d});
        py::object witness = py::none();
        if (v.witness) witness = py::cast(as_list(*v.witness));
        return py::make_tuple(v.holds, witness);
    }, py::arg("g"), py::arg("property"), py::arg("k"), py::arg("d") = 0);
    m.def("direct_property_oracle", [](const Graph& g, const std::string& property, int k, int d) {
        return direct_property_oracle(g, PropertyQuery{property_from_string(property), k, d});
    }, py::arg("g"), py::arg("property"), py::arg("k"), py::arg("d") = 0);

    m.def("canonical_code", [](const Graph& g) { return canonical_form(g).code; });
    m.def("are_isomorphic", &are_isomorphic);
    m.def("connected_graphs", &connected_graphs);

    m.def("verify_theorem", [](const std::string& theorem, int n, int k, int d, const std::string& file, int workers,
                               double tol, double eps, const std::string& format) {
        const TheoremSpec spec{theorem_from_string(theorem), n, k, d};
        validate(spec);
        const auto r = verify_theorem(spec, source_for(n, file), options(workers, tol, eps));
        py::dict out;
        out["branch"] = r.branch;
        out["rows"] = r.rows.size();
        out["violations"] = r.violations;
        out["exceptions"] = r.exceptions;
        out["exhaustive"] = r.exhaustive;
        out["passed"] = r.passed();
        out["note"] = r.note;
        if (format == "csv") out["report"] = to_csv(r);
        if (format == "json") out["report"] = to_json(r);
        return out;
    }, py::arg("theorem"), py::arg("n"), py::arg("k"), py::arg("d") = 0, py::arg("file") = "", py::arg("workers") = 1,
       py::arg("tol") = 1e-10, py::arg("eps") = kCompareEps, py::arg("format") = "");
    m.def("sharpness_check", [](const std::string& theorem, int n, int k, int d) {
        return sharpness_check({theorem_from_string(theorem), n, k, d}).ok();
    }, py::arg("theorem"), py::arg("n"), py::arg("k"), py::arg("d") = 0);
    m.def("minimizer_search", [](const std::string& property, int k, int d, int n, int workers) {
        const auto r = minimizer_search({property_from_string(property), k, d}, source_for(n, ""), options(workers, 1e-10, kCompareEps));
        return py::make_tuple(r.graph, r.lambda1);
    }, py::arg("property"), py::arg("k"), py::arg("d"), py::arg("n"), py::arg("workers") = 1);
    m.def("lemma_numeric_check", [](const std::string& lemma, int max_n) {
        LemmaRanges ranges;
        ranges.max_n = max_n;
        const auto r = lemma_numeric_check(lemma_from_string(lemma), ranges);
        return py::make_tuple(static_cast<int>(r.instances.size()), r.failures);
    }, py::arg("lemma"), py::arg("max_n") = 30);
}
