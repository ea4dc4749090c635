#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sprecon/bench.hpp"
#include "sprecon/edge_list.hpp"
#include "sprecon/errors.hpp"
#include "sprecon/generators.hpp"
#include "sprecon/layering.hpp"
#include "sprecon/oracle.hpp"
#include "sprecon/reconstructor.hpp"

namespace py = pybind11;
using namespace sprecon;

namespace {

Graph graph_from_edges(std::size_t n, const std::vector<Edge>& edges) {
  return make_graph(n, edges);
}

py::dict ledger_dict(const QueryLedger& l) {
  py::dict d;
  d["distinct_queries"] = l.distinct_queries;
  d["raw_calls"] = l.raw_calls;
  py::dict phases;
  for (std::size_t p = 0; p < kNumPhases; ++p) {
    phases[py::str(std::string(phase_name(static_cast<QueryPhase>(p))))] = l.per_phase[p];
  }
  d["per_phase"] = phases;
  return d;
}

py::dict record_dict(const ExperimentRecord& r) {
  py::dict d;
  d["family"] = r.family;
  d["n"] = r.n;
  d["delta"] = r.delta;
  d["tau"] = r.tau ? py::object(py::int_(*r.tau)) : py::none();
  d["ell"] = r.ell;
  d["seed"] = r.seed;
  d["q_total"] = r.q_total;
  d["q_rootbfs"] = r.q_rootbfs;
  d["q_bootstrap"] = r.q_bootstrap;
  d["q_anc"] = r.q_anc;
  d["q_neighbor"] = r.q_neighbor;
  d["raw_calls"] = r.raw_calls;
  d["correct"] = r.correct;
  d["budget_violations"] = r.budget_violations;
  d["wall_time_ms"] = r.wall_time_ms;
  return d;
}

RunOptions options(std::optional<int> tau, std::optional<int> ell, bool ell_from_truth,
                   bool strict_budget) {
  RunOptions o;
  o.tau = tau;
  o.ell = ell;
  o.ell_from_truth = ell_from_truth;
  o.strict_budget = strict_budget;
  return o;
}

py::dict outcome_dict(const RunOutcome& run) {
  py::dict d = record_dict(run.record);
  d["graph"] = run.result.graph;
  d["ledger"] = ledger_dict(run.result.ledger);
  d["loop_vertices"] = run.result.loop_vertices;
  py::list viol;
  for (const auto& v : run.result.violations) {
    viol.append(py::make_tuple(v.check, v.layer, v.observed, v.limit));
  }
  d["violations"] = viol;
  return d;
}

FamilySpec make_spec(const std::string& family, std::size_t n, std::size_t max_degree,
                     std::size_t k, std::size_t clique_size, std::uint64_t seed) {
  FamilySpec s;
  s.family = parse_family(family);
  s.n = n;
  s.max_degree = max_degree;
  s.k = k;
  s.clique_size = clique_size;
  s.seed = seed;
  return s;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Graph reconstruction from shortest-path distance queries";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<InvariantViolation>(m, "InvariantViolation", PyExc_RuntimeError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);

  py::class_<Graph>(m, "Graph")
      .def(py::init(&graph_from_edges), py::arg("n"), py::arg("edges"))
      .def_property_readonly("num_vertices", &Graph::num_vertices)
      .def_property_readonly("num_edges", &Graph::num_edges)
      .def("edges", &Graph::edges)
      .def("neighbors",
           [](const Graph& g, VertexId v) {
             auto nb = g.neighbors(v);
             return std::vector<VertexId>(nb.begin(), nb.end());
           })
      .def("degree", &Graph::degree)
      .def("has_edge", &Graph::has_edge)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.num_vertices()) + ", m=" +
               std::to_string(g.num_edges()) + ")";
      });

  m.def("read_edge_list", [](const std::string& text) { return read_edge_list(text); });
  m.def("write_edge_list", &write_edge_list);
  m.def("bfs_distances", &bfs_distances, py::arg("g"), py::arg("source"));
  m.def("max_degree", &max_degree);
  m.def("is_connected", &is_connected);
  m.def("is_chordal", &is_chordal);

  m.def("generate",
        [](const std::string& family, std::size_t n, std::size_t max_degree, std::size_t k,
           std::size_t clique_size, std::uint64_t seed) {
          return generate(make_spec(family, n, max_degree, k, clique_size, seed)).graph;
        },
        py::arg("family"), py::arg("n"), py::arg("max_degree") = 3, py::arg("k") = 2,
        py::arg("clique_size") = 3, py::arg("seed") = 0);

  m.def("layers",
        [](const Graph& g, VertexId root) { return build_layering(g, root).layers; },
        py::arg("g"), py::arg("root") = 0);
  m.def("parts",
        [](const Graph& g, VertexId root) {
          LayeringTree t = build_layering_tree(g, build_layering(g, root));
          py::list out;
          for (const Part& p : t.parts()) {
            out.append(py::make_tuple(p.layer, p.vertices, t.parent(p.id)));
          }
          return out;
        },
        py::arg("g"), py::arg("root") = 0,
        "List of (layer, vertices, parent part id) in part-id order.");
  m.def("layering_tree_dump",
        [](const Graph& g, VertexId root) {
          return build_layering_tree(g, build_layering(g, root)).dump();
        },
        py::arg("g"), py::arg("root") = 0);
  m.def("tree_length", &measured_length, py::arg("g"), py::arg("root") = 0);

  m.def("reconstruct",
        [](const Graph& hidden, std::optional<int> tau, std::optional<int> ell,
           bool ell_from_truth, bool strict_budget) {
          RunOptions o = options(tau, ell, ell_from_truth, strict_budget);
          if (!o.tau && !o.ell && !o.ell_from_truth) o.tau = 1;
          return outcome_dict(run_on_graph(hidden, "graph", 0, o));
        },
        py::arg("hidden"), py::arg("tau") = py::none(), py::arg("ell") = py::none(),
        py::arg("ell_from_truth") = false, py::arg("strict_budget") = false,
        "Reconstruct `hidden` through a fresh distance oracle. Returns the record "
        "fields plus 'graph', 'ledger' and 'violations'.");
  m.def("reconstruct_naive",
        [](const Graph& hidden) {
          DistanceOracle o(hidden);
          Graph g = reconstruct_naive(o);
          return py::make_tuple(g, o.ledger().distinct_queries);
        },
        py::arg("hidden"), "Returns (graph, distinct query count).");
  m.def("run_experiment",
        [](const std::string& family, std::size_t n, std::size_t max_degree, std::uint64_t seed,
           std::size_t k, std::size_t clique_size, std::optional<int> tau,
           std::optional<int> ell, bool ell_from_truth, bool strict_budget) {
          auto spec = make_spec(family, n, max_degree, k, clique_size, seed);
          return record_dict(
              run_experiment(spec, options(tau, ell, ell_from_truth, strict_budget)).record);
        },
        py::arg("family"), py::arg("n"), py::arg("max_degree") = 3, py::arg("seed") = 0,
        py::arg("k") = 2, py::arg("clique_size") = 3, py::arg("tau") = py::none(),
        py::arg("ell") = py::none(), py::arg("ell_from_truth") = false,
        py::arg("strict_budget") = false);
}
