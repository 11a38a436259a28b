// Python bindings for the core operations: graph construction, family
// generators, partition-function evaluation (floating and exact), class
// recognizers, region predicates, the certifier, and the zero-construction
// searches.
#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <complex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hcz/certifier.hpp"
#include "hcz/families.hpp"
#include "hcz/graph.hpp"
#include "hcz/graph_io.hpp"
#include "hcz/indpoly.hpp"
#include "hcz/numbers.hpp"
#include "hcz/recognizers.hpp"
#include "hcz/regions.hpp"
#include "hcz/roots.hpp"

namespace py = pybind11;
using namespace hcz;

namespace {

py::object big_to_pyint(const BigInt& v) {
    return py::module_::import("builtins").attr("int")(v.str());
}

WeightAssignment weights_from_any(const Graph& g, const py::object& w) {
    int n = g.vertex_count();
    if (py::isinstance<py::list>(w) || py::isinstance<py::tuple>(w)) {
        auto vec = w.cast<std::vector<std::complex<double>>>();
        if (static_cast<int>(vec.size()) != n)
            throw std::invalid_argument("weight list length must equal vertex count");
        WeightAssignment out;
        out.repr = WeightAssignment::Repr::Floating;
        out.floating = std::move(vec);
        return out;
    }
    return WeightAssignment::constant(n, w.cast<std::complex<double>>());
}

WeightAssignment weights_from_rationals(const Graph& g, const py::object& w) {
    int n = g.vertex_count();
    std::vector<GaussianRational> vec;
    if (py::isinstance<py::list>(w)) {
        for (const auto& item : w.cast<py::list>()) {
            auto pr = item.cast<std::pair<std::string, std::string>>();
            vec.push_back({parse_rational(pr.first), parse_rational(pr.second)});
        }
        if (static_cast<int>(vec.size()) != n)
            throw std::invalid_argument("weight list length must equal vertex count");
    } else {
        auto pr = w.cast<std::pair<std::string, std::string>>();
        vec.assign(static_cast<std::size_t>(n),
                   {parse_rational(pr.first), parse_rational(pr.second)});
    }
    WeightAssignment out;
    out.repr = WeightAssignment::Repr::Exact;
    out.exact = std::move(vec);
    return out;
}

std::complex<double> complex_of(const BigComplex& z) {
    return {static_cast<double>(z.re), static_cast<double>(z.im)};
}

std::string outcome_name(CertOutcome o) {
    switch (o) {
        case CertOutcome::Certified: return "certified";
        case CertOutcome::PreconditionFailed: return "precondition-failed";
        case CertOutcome::RatioEscaped: return "ratio-escaped";
    }
    return "unknown";
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Independence-polynomial zero-free-region toolkit";

    py::class_<Graph>(m, "Graph")
        .def(py::init<int>(), py::arg("n"))
        .def_static(
            "from_edges",
            [](int n, const std::vector<std::pair<int, int>>& edges) {
                return Graph::from_edges(n, edges);
            },
            py::arg("n"), py::arg("edges"))
        .def("vertex_count", &Graph::vertex_count)
        .def("edge_count", &Graph::edge_count)
        .def("neighbors", &Graph::neighbors, py::arg("v"))
        .def("degree", &Graph::degree, py::arg("v"))
        .def("max_degree", &Graph::max_degree)
        .def("adjacent", &Graph::adjacent, py::arg("u"), py::arg("v"))
        .def("edges", &Graph::edges)
        .def("add_edge", &Graph::add_edge, py::arg("u"), py::arg("v"))
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            return "Graph(n=" + std::to_string(g.vertex_count()) +
                   ", m=" + std::to_string(g.edge_count()) + ")";
        });

    // Graph I/O via the edge-list text format.
    m.def("graph_from_text", [](const std::string& text) {
        std::stringstream ss(text);
        return parse_graph(ss);
    });
    m.def("graph_to_text", [](const Graph& g) {
        std::stringstream ss;
        write_graph(ss, g);
        return ss.str();
    });

    // Graph core helpers.
    m.def("boundary", &boundary, py::arg("g"), py::arg("u"));
    m.def(
        "induced_subgraph",
        [](const Graph& g, const VertexSet& u) {
            auto sub = induced_subgraph(g, u);
            return std::make_pair(sub.graph, sub.mapping);
        },
        py::arg("g"), py::arg("u"));
    m.def("connected_components", &connected_components, py::arg("g"));
    m.def(
        "blowup",
        [](const Graph& g, int s, const std::string& mode) {
            if (mode == "clique") return blowup(g, s, BlowupMode::Clique);
            if (mode == "independent") return blowup(g, s, BlowupMode::Independent);
            throw std::invalid_argument("mode must be 'clique' or 'independent'");
        },
        py::arg("g"), py::arg("s"), py::arg("mode"));

    // Family constructors.
    m.def("cycle", &make_cycle, py::arg("len"));
    m.def("path_power", &make_path_power, py::arg("n"), py::arg("d"));
    m.def(
        "multipartite",
        [](int a, int b, int n, int mm) { return make_multipartite({a, b, n, mm}); },
        py::arg("a"), py::arg("b"), py::arg("n"), py::arg("m"));
    m.def("subdivided_claw", &make_subdivided_claw, py::arg("i"), py::arg("j"), py::arg("k"));
    m.def("tree_T", &make_tree_T, py::arg("d"), py::arg("k"));

    // Partition-function evaluation.
    m.def(
        "z_eval",
        [](const Graph& g, const py::object& w) { return z_eval(g, weights_from_any(g, w)); },
        py::arg("g"), py::arg("weights"),
        "Z_G at a constant complex weight or a per-vertex list of complex weights");
    m.def(
        "z_eval_exact",
        [](const Graph& g, const py::object& w) {
            auto wa = weights_from_rationals(g, w);
            GaussianRational z = z_eval_exact(g, wa.exact);
            return std::make_pair(z.re.str(), z.im.str());
        },
        py::arg("g"), py::arg("weights"),
        "exact Z_G; weights as ('p/q', 'p/q') or a list of such pairs; returns (re, im)");
    m.def("coeffs", [](const Graph& g) {
        py::list out;
        for (const auto& c : univariate_coeffs(g).coeffs) out.append(big_to_pyint(c));
        return out;
    });
    m.def("roots", [](const Graph& g) {
        auto poly = univariate_coeffs(g);
        if (poly.degree() < 1)
            return std::make_pair(std::vector<std::complex<double>>{}, 0.0);
        auto res = poly_roots(poly);
        return std::make_pair(res.roots, res.max_residual);
    });

    // Recognizers.
    m.def("is_claw_free", &is_claw_free, py::arg("g"));
    m.def("is_sttt_free", &is_sttt_free, py::arg("g"), py::arg("t"));
    m.def("is_subdivided_claw_free", &is_subdivided_claw_free, py::arg("g"), py::arg("i"),
          py::arg("j"), py::arg("k"));
    m.def("contains_induced", &contains_induced, py::arg("host"), py::arg("pattern"));
    m.def("in_class_cls", &in_class_cls, py::arg("g"), py::arg("k"));
    m.def("find_simplicial_cliques", &find_simplicial_cliques, py::arg("g"),
          py::arg("size_cap") = 0);
    m.def("is_simplicial_clique", &is_simplicial_clique, py::arg("g"), py::arg("k"));
    m.def("max_clique_size", &max_clique_size, py::arg("g"));
    m.def("line_cover", [](const Graph& g) -> py::object {
        auto cover = multigraph_line_cover(g);
        if (!cover) return py::none();
        return py::make_tuple(cover->k0, cover->cliques);
    });

    // Region predicates and bounds.
    m.def("vol_bound", &vol_bound, py::arg("delta"), py::arg("t"));
    m.def("r_bound", &r_bound, py::arg("delta"), py::arg("t"));
    m.def("in_parabola", &in_parabola, py::arg("z"), py::arg("k"));
    m.def("in_halfplane", &in_halfplane, py::arg("z"), py::arg("t"));
    m.def("in_region_F", &in_region_F, py::arg("lambda_"), py::arg("delta"), py::arg("t"));
    m.def("in_region_Fstar", &in_region_Fstar, py::arg("lambda_"), py::arg("delta"),
          py::arg("t"));

    // Certifier.
    py::class_<Certificate>(m, "Certificate")
        .def_property_readonly("certified", &Certificate::certified)
        .def_property_readonly("outcome",
                               [](const Certificate& c) { return outcome_name(c.outcome); })
        .def_property_readonly("mode",
                               [](const Certificate& c) {
                                   return c.mode == Certificate::Mode::Sttt ? "sttt"
                                                                            : "clawfree";
                               })
        .def_property_readonly("final",
                               [](const Certificate& c) { return complex_of(c.final_z); })
        .def_property_readonly("steps",
                               [](const Certificate& c) { return c.steps.size(); })
        .def_readonly("delta_eff", &Certificate::delta_eff)
        .def_readonly("t", &Certificate::t)
        .def_readonly("r", &Certificate::r)
        .def_readonly("k", &Certificate::k)
        .def_readonly("max_terms", &Certificate::max_terms)
        .def_readonly("diagnostic", &Certificate::diagnostic)
        .def("text", [](const Certificate& c) { return serialize_certificate(c); })
        .def("__repr__", [](const Certificate& c) {
            return "Certificate(" + outcome_name(c.outcome) + ")";
        });

    m.def(
        "certify_sttt",
        [](const Graph& g, const py::object& w, int t, bool exact) {
            return exact ? certify_sttt(g, weights_from_rationals(g, w), t)
                         : certify_sttt(g, weights_from_any(g, w), t);
        },
        py::arg("g"), py::arg("weights"), py::arg("t"), py::arg("exact") = false);
    m.def(
        "certify_clawfree",
        [](const Graph& g, const VertexSet& K, const py::object& w, int k, bool exact) {
            return exact ? certify_clawfree(g, K, weights_from_rationals(g, w), k)
                         : certify_clawfree(g, K, weights_from_any(g, w), k);
        },
        py::arg("g"), py::arg("clique"), py::arg("weights"), py::arg("k"),
        py::arg("exact") = false);
    m.def(
        "check_L_bound",
        [](const Graph& g, int u, int t) {
            auto rep = check_L_bound(g, u, t);
            return py::make_tuple(rep.max_L, rep.bound, rep.ok, rep.truncated);
        },
        py::arg("g"), py::arg("u"), py::arg("t"),
        "returns (max_L, bound, ok, truncated)");

    // Zero constructions.
    m.def(
        "cycle_zero_weights",
        [](double a, int n) {
            auto res = cycle_zero_weights(a, n);
            return py::make_tuple(res.lambda, res.mu, res.valid);
        },
        py::arg("a"), py::arg("n"), "returns (lambda, mu, valid) with Z_{C_{2n}} = 0");
    m.def(
        "find_sparse_counterexample",
        [](double eps) {
            auto ce = find_sparse_counterexample(eps);
            py::dict d;
            d["eps"] = ce.eps;
            d["W"] = ce.W;
            d["a"] = ce.a;
            d["n"] = ce.n;
            d["b"] = ce.b;
            d["delta"] = ce.delta;
            d["z_delta"] = ce.z_delta;
            d["blowup_weights"] = ce.blowup_weights;
            d["grouped_weights"] = ce.grouped_weights;
            return d;
        },
        py::arg("eps"));
    m.def(
        "multipartite_root_near",
        [](std::complex<double> z, double eps) {
            auto res = multipartite_root_near(z, eps);
            py::dict d;
            d["N"] = res.N;
            d["A"] = big_to_pyint(res.A);
            d["B"] = big_to_pyint(res.B);
            d["t"] = big_to_pyint(res.t);
            d["root"] = res.root;
            d["distance"] = res.distance;
            d["residual"] = res.residual;
            return d;
        },
        py::arg("z"), py::arg("eps"));
    m.def("tree_g_iter", &tree_g_iter, py::arg("lambda_"), py::arg("k"), py::arg("d"));
    m.def("find_indifferent_lambda", &find_indifferent_lambda, py::arg("k"));
    m.def(
        "tree_zero_search",
        [](int k, int d, std::complex<double> seed) {
            auto res = tree_zero_search(k, d, seed);
            py::dict out;
            out["lambda"] = res.lambda;
            out["residual"] = res.residual;
            out["pole_clearance"] = res.pole_clearance;
            out["iterations"] = res.iterations;
            out["converged"] = res.converged;
            out["trajectory"] = res.trajectory;
            return out;
        },
        py::arg("k"), py::arg("d"), py::arg("seed"));
}
