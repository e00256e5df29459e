#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "mesc/coloring.hpp"
#include "mesc/core.hpp"
#include "mesc/generators.hpp"
#include "mesc/solvers.hpp"

namespace py = pybind11;
using namespace mesc;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Minimum entropy set cover: covering heuristics, exact oracle, "
            "bound certificates, coloring applications, generators.";
  m.attr("__version__") = "0.1.0";

  py::register_exception<ParseError>(m, "ParseError");
  py::register_exception<CapExceededError>(m, "CapExceededError");

  py::class_<SetSystem>(m, "SetSystem")
      .def(py::init([](int n, std::vector<std::vector<int>> sets) {
             for (auto& s : sets) {
               std::sort(s.begin(), s.end());
               s.erase(std::unique(s.begin(), s.end()), s.end());
             }
             SetSystem system{n, std::move(sets)};
             require_valid(system);
             return system;
           }),
           py::arg("n"), py::arg("sets"))
      .def_readonly("n", &SetSystem::n)
      .def_readonly("sets", &SetSystem::sets)
      .def("set_count", &SetSystem::set_count)
      .def("contains", &SetSystem::contains, py::arg("set_id"), py::arg("element"))
      .def("__repr__", [](const SetSystem& s) {
        return "SetSystem(n=" + std::to_string(s.n) + ", m=" + std::to_string(s.set_count()) + ")";
      });

  py::class_<ValidationReport>(m, "ValidationReport")
      .def_readonly("ok", &ValidationReport::ok)
      .def_readonly("violations", &ValidationReport::violations);

  py::class_<CoverAssignment>(m, "CoverAssignment")
      .def_static("from_assignment", &CoverAssignment::from_assignment, py::arg("system"),
                  py::arg("assignment"))
      .def_readonly("assignment", &CoverAssignment::assignment)
      .def_readonly("class_sizes", &CoverAssignment::class_sizes);

  py::class_<Distribution>(m, "Distribution")
      .def_static("from_weights", &Distribution::from_weights, py::arg("weights"))
      .def_static("from_counts",
                  [](const std::vector<int>& counts) { return Distribution::from_counts(counts); },
                  py::arg("counts"))
      .def_readonly("weights", &Distribution::weights);

  py::class_<EntropyDecomposition>(m, "EntropyDecomposition")
      .def_readonly("size_term", &EntropyDecomposition::size_term)
      .def_readonly("divergence_term", &EntropyDecomposition::divergence_term)
      .def_readonly("mass_term", &EntropyDecomposition::mass_term)
      .def_readonly("total", &EntropyDecomposition::total);

  m.def("validate", &validate, py::arg("system"));
  m.def("element_frequency", &element_frequency, py::arg("system"), py::arg("element"));
  m.def("avg_frequency", &avg_frequency, py::arg("system"));
  m.def("entropy_of_sizes",
        [](const std::vector<int>& sizes, int n) { return entropy_of_sizes(sizes, n); },
        py::arg("class_sizes"), py::arg("n"));
  m.def("entropy_of_cover", &entropy_of_cover, py::arg("cover"), py::arg("n"));
  m.def("kl_divergence", &kl_divergence, py::arg("p"), py::arg("q"));
  m.def("entropy_decomposition", &entropy_decomposition, py::arg("system"), py::arg("cover"));
  m.def("read_set_system", &read_set_system_file, py::arg("path"));
  m.def("write_set_system", &write_set_system_file, py::arg("path"), py::arg("system"));

  py::enum_<Phase>(m, "Phase")
      .value("BIASED", Phase::kBiased)
      .value("GREEDY", Phase::kGreedy);

  py::class_<TraceRecord>(m, "TraceRecord")
      .def_readonly("element", &TraceRecord::element)
      .def_readonly("phase", &TraceRecord::phase)
      .def_readonly("chosen_set", &TraceRecord::chosen_set)
      .def_readonly("original_size", &TraceRecord::original_size)
      .def_readonly("residual_size", &TraceRecord::residual_size);

  py::class_<AlgorithmTrace>(m, "AlgorithmTrace")
      .def_readonly("records", &AlgorithmTrace::records);

  py::class_<SplitReport>(m, "SplitReport")
      .def_readonly("delta", &SplitReport::delta)
      .def_readonly("light", &SplitReport::light)
      .def_readonly("heavy", &SplitReport::heavy)
      .def_readonly("frequency_order", &SplitReport::frequency_order);

  m.def("light_count", &light_count, py::arg("n"), py::arg("delta"));
  m.def("split_light_heavy", &split_light_heavy, py::arg("system"), py::arg("delta"));
  m.def("biased_greedy", &biased_greedy, py::arg("system"), py::arg("delta"));
  m.def("greedy", &greedy, py::arg("system"));
  m.def("biased", &biased, py::arg("system"));

  py::class_<ExactResult>(m, "ExactResult")
      .def_readonly("cover", &ExactResult::cover)
      .def_readonly("entropy", &ExactResult::entropy)
      .def_readonly("certified", &ExactResult::certified)
      .def_readonly("nodes", &ExactResult::nodes);

  m.def("exact_min_entropy_cover",
        [](const SetSystem& system, std::int64_t node_budget) {
          return exact_min_entropy_cover(system, ExactOptions{node_budget});
        },
        py::arg("system"), py::arg("node_budget") = ExactOptions{}.node_budget);

  py::class_<TheoremBound>(m, "TheoremBound")
      .def_readonly("rhs", &TheoremBound::rhs)
      .def_readonly("beta", &TheoremBound::beta);

  m.def("theorem_bound", &theorem_bound, py::arg("ent_opt"), py::arg("f"), py::arg("delta"),
        py::arg("n"));

  py::class_<BoundCertificate>(m, "BoundCertificate")
      .def_readonly("ent_alg", &BoundCertificate::ent_alg)
      .def_readonly("ent_opt", &BoundCertificate::ent_opt)
      .def_readonly("f", &BoundCertificate::f)
      .def_readonly("delta", &BoundCertificate::delta)
      .def_readonly("beta", &BoundCertificate::beta)
      .def_readonly("rhs", &BoundCertificate::rhs)
      .def_readonly("slack", &BoundCertificate::slack)
      .def_readonly("holds", &BoundCertificate::holds)
      .def_readonly("opt_certified", &BoundCertificate::opt_certified)
      .def_readonly("div_alg_sizes", &BoundCertificate::div_alg_sizes)
      .def_readonly("div_heavy_scaled", &BoundCertificate::div_heavy_scaled);

  m.def("certify",
        [](const SetSystem& system, double delta, std::int64_t node_budget) {
          return certify(system, delta, ExactOptions{node_budget});
        },
        py::arg("system"), py::arg("delta"), py::arg("node_budget") = ExactOptions{}.node_budget);
  m.def("certify",
        [](const SetSystem& system, double delta, const ExactResult& opt) {
          return certify(system, delta, opt);
        },
        py::arg("system"), py::arg("delta"), py::arg("opt"));

  py::class_<BestDelta>(m, "BestDelta")
      .def_readonly("delta", &BestDelta::delta)
      .def_readonly("tie", &BestDelta::tie);

  m.def("best_delta", &best_delta, py::arg("f"));

  py::class_<Graph>(m, "Graph")
      .def(py::init(&Graph::create), py::arg("n"), py::arg("edges"))
      .def_readonly("n", &Graph::n)
      .def_readonly("edges", &Graph::edges)
      .def("edge_count", &Graph::edge_count)
      .def("degrees", &Graph::degrees)
      .def("max_degree", &Graph::max_degree)
      .def("adjacency", &Graph::adjacency)
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.n) + ", edges=" + std::to_string(g.edge_count()) +
               ")";
      });

  py::class_<Coloring>(m, "Coloring")
      .def(py::init([](std::vector<int> color) { return Coloring{std::move(color)}; }),
           py::arg("color"))
      .def_readonly("color", &Coloring::color)
      .def("color_count", &Coloring::color_count)
      .def("classes", &Coloring::classes)
      .def("class_sizes", &Coloring::class_sizes);

  py::class_<Alpha3Stats>(m, "Alpha3Stats")
      .def_readonly("isolated", &Alpha3Stats::isolated)
      .def_readonly("plain_edges", &Alpha3Stats::plain_edges)
      .def_readonly("triangles", &Alpha3Stats::triangles)
      .def_readonly("f", &Alpha3Stats::f);

  m.def("is_proper", &is_proper, py::arg("graph"), py::arg("coloring"));
  m.def("coloring_entropy", &coloring_entropy, py::arg("coloring"));
  m.def("complement", &complement, py::arg("graph"));
  m.def("maximal_independent_sets", &maximal_independent_sets, py::arg("graph"),
        py::arg("cap") = kDefaultMisCap);
  m.def("has_independent_set", &has_independent_set, py::arg("graph"), py::arg("k"));
  m.def("to_set_cover", &to_set_cover, py::arg("graph"), py::arg("cap") = kDefaultMisCap);
  m.def("f_alpha3", &f_alpha3, py::arg("graph"));
  m.def("biased_coloring", &biased_coloring, py::arg("graph"), py::arg("delta"),
        py::arg("cap") = kDefaultMisCap);
  m.def("heuristic_merge_colors", &heuristic_merge_colors, py::arg("graph"), py::arg("coloring"));
  m.def("heuristic_largest_is_first", &heuristic_largest_is_first, py::arg("graph"),
        py::arg("coloring"), py::arg("cap") = kDefaultMisCap);
  m.def("degree_corollary_bound", &degree_corollary_bound, py::arg("graph"), py::arg("ent_opt"),
        py::arg("cap") = kDefaultMisCap);
  m.def("approx_oracle_bound", &approx_oracle_bound, py::arg("eta"), py::arg("base_rhs"));
  m.def("read_graph", &read_graph_file, py::arg("path"));
  m.def("write_graph", &write_graph_file, py::arg("path"), py::arg("graph"));

  py::class_<GenSpec>(m, "GenSpec")
      .def(py::init([](int n, int m, double target_f, std::uint64_t seed) {
             return GenSpec{n, m, target_f, seed};
           }),
           py::arg("n"), py::arg("m"), py::arg("target_f") = 1.0, py::arg("seed") = 0)
      .def_readonly("n", &GenSpec::n)
      .def_readonly("m", &GenSpec::m)
      .def_readonly("target_f", &GenSpec::target_f)
      .def_readonly("seed", &GenSpec::seed);

  m.def("random_set_system", &random_set_system, py::arg("spec"));
  m.def("random_graph", &random_graph, py::arg("n"), py::arg("p"), py::arg("seed"));
  m.def("paper_example_graph", &paper_example_graph);
  m.def("is_fixture_id", &is_fixture_id, py::arg("id"));
  m.def("load_fixture", &load_fixture, py::arg("id"));
}
