// Python bindings. Records and reports cross the boundary as JSON text and
// are decoded on the Python side.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "achlioptas/algorithms.hpp"
#include "achlioptas/harness.hpp"
#include "achlioptas/posa.hpp"
#include "achlioptas/serialize.hpp"
#include "achlioptas/strategies.hpp"
#include "achlioptas/verify.hpp"

namespace py = pybind11;
using namespace achlioptas;

namespace {

VertexSet as_set(std::size_t n, const std::optional<std::vector<Vertex>>& members) {
  return members ? VertexSet(n, *members) : VertexSet::full(n);
}

ExpansionOptions expansion_options(const std::string& mode, std::uint64_t samples,
                                   std::uint64_t seed) {
  ExpansionOptions o;
  o.mode = mode == "sampled" ? CheckMode::Sampled : CheckMode::Exhaustive;
  if (mode != "sampled" && mode != "exhaustive")
    throw std::invalid_argument("mode must be exhaustive or sampled");
  o.samples = samples;
  o.seed = seed;
  return o;
}

std::string run_json(const std::string& config_json, std::size_t k, std::uint64_t seed,
                     bool with_ledger) {
  ExperimentConfig c;
  apply_config_json(c, nlohmann::json::parse(config_json));
  c.ledger = c.ledger || with_ledger;
  if (c.k_list.empty()) c.k_list = {k};
  c.seeds = {seed};
  c.validate();
  RunRecord r;
  {
    py::gil_scoped_release release;
    r = run_single(c, k, seed);
  }
  return to_json(r, with_ledger).dump();
}

py::tuple sweep_json(const std::string& config_json) {
  ExperimentConfig c;
  apply_config_json(c, nlohmann::json::parse(config_json));
  c.validate();
  SweepResult r;
  {
    py::gil_scoped_release release;
    r = sweep(c);
  }
  std::ostringstream csv;
  write_sweep_csv(csv, r);
  nlohmann::json runs = nlohmann::json::array();
  for (std::size_t i = 0; i < r.runs.size(); ++i) {
    runs.push_back(r.errors[i] ? nlohmann::json{{"error", *r.errors[i]}} : to_json(r.runs[i]));
  }
  return py::make_tuple(csv.str(), runs.dump());
}

std::string collect_all_json(std::size_t n, const std::string& ledger_jsonl,
                             std::uint64_t check_every, std::size_t restarts, std::uint64_t seed) {
  std::istringstream in(ledger_jsonl);
  const auto ledger = read_ledger_jsonl(in);
  CollectAllOptions o;
  o.check_every = check_every;
  o.restarts = restarts;
  o.seed = seed;
  py::gil_scoped_release release;
  return to_json(collect_all_analyze(n, ledger, o)).dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Achlioptas process Hamiltonicity strategies";

  py::class_<Graph>(m, "Graph")
      .def(py::init<std::size_t>(), py::arg("n"))
      .def("add_edge", py::overload_cast<Vertex, Vertex>(&Graph::add_edge), py::arg("u"), py::arg("v"))
      .def("has_edge", py::overload_cast<Vertex, Vertex>(&Graph::has_edge, py::const_))
      .def("degree", &Graph::degree)
      .def("neighbors",
           [](const Graph& g, Vertex v) {
             const auto s = g.neighbors(v);
             return std::vector<Vertex>(s.begin(), s.end());
           })
      .def_property_readonly("vertex_count", &Graph::vertex_count)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def("edges",
           [](const Graph& g) {
             std::vector<std::pair<Vertex, Vertex>> out;
             for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
             return out;
           })
      .def("fingerprint", &Graph::fingerprint)
      .def("to_edge_list",
           [](const Graph& g) {
             std::ostringstream s;
             write_edge_list(s, g);
             return s.str();
           })
      .def_static("from_edge_list", [](const std::string& text) {
        std::istringstream s(text);
        return read_edge_list(s);
      });

  m.def("peel_core", [](const Graph& g, std::size_t d) { return peel_core(g, d).members(); },
        py::arg("graph"), py::arg("d"));
  m.def("hamiltonicity_search", &hamiltonicity_search, py::arg("graph"), py::arg("restarts") = 10,
        py::arg("seed") = 0);
  m.def("brute_force_hamiltonian", &brute_force_hamiltonian, py::arg("graph"), py::arg("cap") = 14);
  m.def("verify_certificate", &verify_certificate, py::arg("graph"), py::arg("cycle"));

  m.def("strategy_ids", &strategy_ids);
  m.def("_run", &run_json, py::arg("config_json"), py::arg("k"), py::arg("seed"),
        py::arg("with_ledger") = false);
  m.def("_sweep", &sweep_json, py::arg("config_json"));
  m.def("_collect_all", &collect_all_json, py::arg("n"), py::arg("ledger_jsonl"),
        py::arg("check_every") = 0, py::arg("restarts") = 10, py::arg("seed") = 0);

  m.def("_verify_core_size",
        [](const Graph& g, std::size_t d) { return to_json(verify_core_size(g, d)).dump(); });
  m.def("_verify_vertex_expansion",
        [](const Graph& g, std::size_t s_max, std::size_t num, std::size_t den,
           const std::optional<std::vector<Vertex>>& within, const std::string& mode,
           std::uint64_t samples, std::uint64_t seed) {
          return to_json(verify_vertex_expansion(g, as_set(g.vertex_count(), within), s_max,
                                                 Ratio{num, den},
                                                 expansion_options(mode, samples, seed)))
              .dump();
        });
  m.def("_verify_avg_degree", [](const Graph& g, std::size_t k, std::size_t s_max,
                                 const std::string& mode, std::uint64_t samples, std::uint64_t seed) {
    return to_json(verify_avg_degree(g, k, s_max, expansion_options(mode, samples, seed))).dump();
  });
  m.def("_verify_connectivity",
        [](const Graph& g, const std::optional<std::vector<Vertex>>& within) {
          return to_json(verify_connectivity(g, as_set(g.vertex_count(), within))).dump();
        });
  m.def("_certificate_report", [](const Graph& g, const Cycle& c) {
    return to_json(certificate_report(g, c)).dump();
  });
}
