#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "fourcycle/harness.hpp"

namespace py = pybind11;
using namespace fourcycle;

namespace {

using EdgeList = std::vector<std::pair<NodeId, NodeId>>;

std::vector<Edge> to_edges(const EdgeList& in) {
  std::vector<Edge> out;
  out.reserve(in.size());
  for (auto [u, v] : in) out.push_back(Edge::make(u, v));
  return out;
}

EdgeList from_edges(const std::vector<Edge>& in) {
  EdgeList out;
  out.reserve(in.size());
  for (const Edge& e : in) out.emplace_back(e.u, e.v);
  return out;
}

double T_or_exact(const std::vector<Edge>& edges, std::optional<double> T) {
  return T ? *T : static_cast<double>(exact_four_cycle_count(Graph(edges)));
}

ExperimentConfig config(Mode mode, double T, const std::string& profile, double epsilon, std::optional<double> delta,
                        std::optional<double> c) {
  ExperimentConfig cfg;
  cfg.mode = mode;
  cfg.T = T;
  cfg.profile = parse_profile(profile);
  cfg.epsilon = epsilon;
  cfg.delta = delta;
  cfg.c = c;
  return cfg;
}

std::string detect(const EdgeList& in, std::optional<double> T, std::uint64_t seed, int runs, const std::string& profile,
                   double epsilon, std::optional<double> delta, std::optional<double> c) {
  const auto edges = to_edges(in);
  const EdgeStream stream(edges);
  DetectParams p;
  p.sampling = resolve_params(config(Mode::detect, T_or_exact(edges, T), profile, epsilon, delta, c));
  p.seed = seed;
  p.amplification = runs > 0 ? runs : default_amplification(stream.node_bound());
  json j = {{"params", params_json(p.sampling, parse_profile(profile))}};
  py::gil_scoped_release release;
  j["result"] = p.amplification == 1 ? detect_json(run_detection(stream, p)) : amplified_json(amplified_detection(stream, p));
  return j.dump();
}

std::string count(const EdgeList& in, std::optional<double> T, std::uint64_t seed, const std::string& oracle,
                  int median_runs, const std::string& profile, double epsilon, std::optional<double> delta,
                  std::optional<double> c) {
  const auto edges = to_edges(in);
  const EdgeStream stream(edges);
  CountParams p;
  p.sampling = resolve_params(config(Mode::count, T_or_exact(edges, T), profile, epsilon, delta, c));
  p.epsilon = epsilon;
  p.seed = seed;
  if (oracle == "reference") p.oracle = OracleMode::reference;
  else if (oracle == "streaming") p.oracle = OracleMode::streaming;
  else throw InputError("unknown oracle '" + oracle + "'");
  p.median_runs = median_runs;
  json j = {{"params", params_json(p.sampling, parse_profile(profile))}};
  py::gil_scoped_release release;
  j["result"] = median_runs > 1 ? median_json(median_estimate(stream, p)) : count_json(run_counting(stream, p));
  return j.dump();
}

std::string baseline(const EdgeList& in, std::optional<double> T, std::uint64_t seed, double c) {
  const auto edges = to_edges(in);
  const double t = std::max(1.0, T_or_exact(edges, T));
  py::gil_scoped_release release;
  return baseline_json(edge_sampling_estimate(EdgeStream(edges), t, seed, c)).dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);

  m.attr("SCHEMA_VERSION") = kSchemaVersion;

  m.def("exact_count", [](const EdgeList& e) { return exact_four_cycle_count(Graph(to_edges(e))); }, py::arg("edges"));
  m.def(
      "four_cycles",
      [](const EdgeList& e) {
        std::vector<std::tuple<NodeId, NodeId, NodeId, NodeId>> out;
        for (const FourCycle& c : enumerate_four_cycles(Graph(to_edges(e))))
          out.emplace_back(c.at(0), c.at(1), c.at(2), c.at(3));
        return out;
      },
      py::arg("edges"));
  m.def(
      "generate",
      [](const std::string& spec) {
        const Generated g = generate(spec);
        return py::make_tuple(g.name, from_edges(g.edges), g.declared_T);
      },
      py::arg("spec"));
  m.def("detect_json", &detect, py::arg("edges"), py::arg("T") = py::none(), py::arg("seed") = 1, py::arg("runs") = 1,
        py::arg("profile") = "desk", py::arg("epsilon") = 0.5, py::arg("delta") = py::none(), py::arg("c") = py::none());
  m.def("count_json", &count, py::arg("edges"), py::arg("T") = py::none(), py::arg("seed") = 1,
        py::arg("oracle") = "reference", py::arg("median_runs") = 1, py::arg("profile") = "desk",
        py::arg("epsilon") = 0.5, py::arg("delta") = py::none(), py::arg("c") = py::none());
  m.def("baseline_json", &baseline, py::arg("edges"), py::arg("T") = py::none(), py::arg("seed") = 1,
        py::arg("c") = 1.0);
}
