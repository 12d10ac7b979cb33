#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fourcycle/baseline.hpp"
#include "fourcycle/config_model.hpp"
#include "fourcycle/count.hpp"
#include "fourcycle/detect.hpp"
#include "fourcycle/generators.hpp"
#include "fourcycle/harness.hpp"
#include "fourcycle/oracles.hpp"
#include "fourcycle/random.hpp"

using namespace fourcycle;

namespace {

struct Common {
  std::string input;
  std::optional<double> t_lower;
  double epsilon = 0.5;
  std::optional<double> delta;
  std::optional<double> c1;
  std::uint64_t seed = 1;
  std::string profile = "desk";
  bool json_out = false;
  bool deterministic = false;
  std::uint64_t order_seed = 0;
  bool reshuffle = false;
};

std::uint64_t env_seed() {
  const char* s = std::getenv("FOURCYCLE_SEED");
  if (!s || !*s) return 1;
  try {
    return std::stoull(s);
  } catch (const std::exception&) {
    throw InputError(std::string("FOURCYCLE_SEED is not an integer: ") + s);
  }
}

void add_common(CLI::App* app, Common& c, bool with_input = true) {
  if (with_input) app->add_option("--input,-i", c.input, "edge-list file or generator spec")->required();
  app->add_option("--t-lower", c.t_lower, "lower bound on T (default: exact count of the input)");
  app->add_option("--epsilon", c.epsilon, "accuracy parameter");
  app->add_option("--delta-override", c.delta, "fixed delta");
  app->add_option("--c1", c.c1, "sampling constant");
  app->add_option("--seed", c.seed, "master seed (default: $FOURCYCLE_SEED or 1)");
  app->add_option("--profile", c.profile, "paper or desk")->check(CLI::IsMember({"paper", "desk"}));
  app->add_flag("--json", c.json_out, "emit JSON");
  app->add_flag("--deterministic", c.deterministic, "omit timing fields");
  app->add_option("--order-seed", c.order_seed, "stream order seed");
  app->add_flag("--reshuffle", c.reshuffle, "reorder the stream on every pass");
}

Generated load(const std::string& in) {
  if (in.find(':') == std::string::npos && std::filesystem::exists(in)) return generate("file:" + in);
  return generate(in);
}

double resolve_T(const Common& c, const Generated& g) {
  if (c.t_lower) return *c.t_lower;
  return static_cast<double>(g.declared_T ? *g.declared_T : exact_four_cycle_count(g.graph()));
}

ExperimentConfig config(const Common& c, Mode mode, double T) {
  ExperimentConfig cfg;
  cfg.mode = mode;
  cfg.profile = parse_profile(c.profile);
  cfg.T = T;
  cfg.epsilon = c.epsilon;
  cfg.delta = c.delta;
  cfg.c = c.c1;
  return cfg;
}

using Clock = std::chrono::steady_clock;

void emit(const Common& c, json& j, Clock::time_point start) {
  if (!c.deterministic) j["seconds"] = std::chrono::duration<double>(Clock::now() - start).count();
  std::cout << j.dump(2) << "\n";
}

std::string cycle_str(const std::optional<FourCycle>& w) {
  if (!w) return "-";
  std::ostringstream os;
  os << *w;
  return os.str();
}

int cmd_detect(const Common& c, int runs, double cap_mult) {
  const auto start = Clock::now();
  const Generated g = load(c.input);
  const EdgeStream stream(g.edges, c.order_seed, c.reshuffle);
  DetectParams p;
  p.sampling = resolve_params(config(c, Mode::detect, resolve_T(c, g)));
  p.seed = c.seed;
  p.amplification = runs > 0 ? runs : default_amplification(stream.node_bound());
  p.space_cap_multiplier = cap_mult;
  json j = envelope("detect", g, c.seed);
  j["params"] = params_json(p.sampling, parse_profile(c.profile));
  bool found = false;
  std::optional<FourCycle> witness;
  if (p.amplification == 1) {
    const DetectResult r = run_detection(stream, p);
    j["result"] = detect_json(r);
    found = r.found;
    witness = r.witness;
  } else {
    const AmplifiedResult r = amplified_detection(stream, p);
    j["result"] = amplified_json(r);
    found = r.found;
    witness = r.witness;
  }
  if (c.json_out) {
    emit(c, j, start);
  } else {
    std::cout << "found " << (found ? "yes" : "no") << "\nwitness " << cycle_str(witness) << "\n";
  }
  return 0;
}

int cmd_count(const Common& c, const std::string& algo, const std::string& oracle, int median_runs) {
  const auto start = Clock::now();
  const Generated g = load(c.input);
  const EdgeStream stream(g.edges, c.order_seed, c.reshuffle);
  const double T = resolve_T(c, g);
  json j = envelope("count", g, c.seed);
  j["algo"] = algo;
  double estimate = 0;
  if (algo == "baseline") {
    const BaselineResult r = edge_sampling_estimate(stream, std::max(1.0, T), c.seed, c.c1.value_or(1.0));
    j["result"] = baseline_json(r);
    estimate = r.estimate;
  } else {
    CountParams p;
    p.sampling = resolve_params(config(c, Mode::count, T));
    p.epsilon = c.epsilon;
    p.seed = c.seed;
    p.oracle = oracle == "streaming" ? OracleMode::streaming : OracleMode::reference;
    p.median_runs = median_runs;
    if (parse_profile(c.profile) == Profile::paper) p.tuning = paper_tuning(p.sampling, stream.node_bound());
    j["params"] = params_json(p.sampling, parse_profile(c.profile));
    j["oracle"] = oracle;
    if (median_runs > 1) {
      const MedianResult r = median_estimate(stream, p);
      j["result"] = median_json(r);
      estimate = r.estimate;
    } else {
      const CountResult r = run_counting(stream, p);
      j["result"] = count_json(r);
      estimate = r.estimate;
    }
  }
  if (c.json_out) {
    emit(c, j, start);
  } else {
    std::cout << "estimate " << estimate << "\n";
  }
  return 0;
}

int cmd_exact(const Common& c) {
  const auto start = Clock::now();
  const Generated g = load(c.input);
  const Graph graph = g.graph();
  const Count T = exact_four_cycle_count(graph);
  json j = envelope("exact", g, c.seed);
  j["T"] = T;
  j["duplicates"] = g.meta.count("duplicates") ? g.meta.at("duplicates") : 0.0;
  if (c.json_out) {
    emit(c, j, start);
  } else {
    std::cout << "n " << graph.num_nodes() << "\nm " << graph.num_edges() << "\nT " << T << "\n";
  }
  return 0;
}

int cmd_audit(const Common& c, bool unit_shifts) {
  const auto start = Clock::now();
  const Generated g = load(c.input);
  const Graph graph = g.graph();
  const SamplingParams sp = resolve_params(config(c, Mode::count, resolve_T(c, g)));
  const OracleBudget budget = oracle_budget(sp, OracleTuning{}.node_mult);
  Shifts shifts = Shifts::unit();
  if (!unit_shifts) {
    std::mt19937_64 rng(derive_seed(c.seed, 0x5317));
    shifts = draw_oracle_shifts(rng, budget);
  }
  ExactModel model(graph, sp, shifts);
  const LemmaReport lr = lemma_counters(graph, sp);
  const MultiplicityReport mr = llm_multiplicity(model);
  const MarginAudit ma = shift_margin_audit(model, MarginWidths::from(budget));

  json j = envelope("audit", g, c.seed);
  j["params"] = params_json(sp, parse_profile(c.profile));
  j["shifts"] = shifts_json(shifts);
  j["T"] = model.cycles().size();
  j["lemmas"] = {{"two_heavy_edges", lr.two_heavy_edges},
                 {"bound_two_heavy", lr.bound_two_heavy},
                 {"heavy_edge_and_wedge", lr.heavy_edge_and_wedge},
                 {"bound_heavy_edge_wedge", lr.bound_heavy_edge_wedge},
                 {"combination_union", lr.combination_union},
                 {"bound_combination", lr.bound_combination},
                 {"within_bounds", lr.within_bounds()}};
  j["multiplicity"] = {{"cycles_with_llm", mr.cycles_with_llm},
                       {"cycles_with_multiple", mr.cycles_with_multiple},
                       {"cycles_with_light", mr.cycles_with_light},
                       {"light_without_llm", mr.light_without_llm},
                       {"bound", mr.bound}};
  j["margins"] = {{"audited", ma.entries.size()},
                  {"bad_now", ma.bad_now},
                  {"max_bad_points", ma.max_bad_points},
                  {"disjoint", ma.disjoint()},
                  {"distinct_bad_points", {ma.distinct_bad_points[0], ma.distinct_bad_points[1], ma.distinct_bad_points[2]}},
                  {"grid_size", {ma.grid_size[0], ma.grid_size[1], ma.grid_size[2]}}};
  if (c.json_out) {
    emit(c, j, start);
  } else {
    std::cout << "T " << model.cycles().size() << "\nlemmas_within_bounds " << lr.within_bounds()
              << "\nllm_cycles " << mr.cycles_with_llm << "\nlight_without_llm " << mr.light_without_llm
              << "\nbad_margin_queries " << ma.bad_now << "\nshift_grid_disjoint " << ma.disjoint() << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multi-pass streaming four-cycle detection and counting"};
  app.require_subcommand(1);

  Common common;
  try {
    common.seed = env_seed();
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  auto* detect = app.add_subcommand("detect", "detect a four-cycle");
  add_common(detect, common);
  int runs = 0;
  double cap_mult = 10;
  detect->add_option("--runs", runs, "independent runs (default ceil(3 log2 n))");
  detect->add_option("--space-cap", cap_mult, "abort runs above this multiple of the calibrated space");

  auto* count = app.add_subcommand("count", "estimate the number of four-cycles");
  add_common(count, common);
  std::string algo = "main", oracle = "reference";
  int median_runs = 1;
  count->add_option("--algo", algo, "main estimator or edge-sampling baseline")->check(CLI::IsMember({"main", "baseline"}));
  count->add_option("--oracle", oracle, "heaviness oracles: streaming or exact reference")->check(CLI::IsMember({"streaming", "reference"}));
  count->add_option("--median-runs", median_runs, "independent runs combined by the median")->check(CLI::PositiveNumber);

  auto* exact = app.add_subcommand("exact", "exact four-cycle count");
  add_common(exact, common);

  auto* audit = app.add_subcommand("audit", "shift-margin audit and lemma counters");
  add_common(audit, common);
  bool unit_shifts = false;
  audit->add_flag("--unit-shifts", unit_shifts, "audit at unit shifts");

  auto* sweep = app.add_subcommand("sweep", "space/accuracy sweep over inputs");
  add_common(sweep, common, false);
  std::vector<std::string> inputs;
  std::string sweep_algo = "detect";
  int trials = 10, jobs = 1;
  std::string csv_path;
  sweep->add_option("--input,-i", inputs, "generator specs or files, one cell each")->required();
  sweep->add_option("--algo", sweep_algo, "algorithm run in every cell")->check(CLI::IsMember({"detect", "count", "baseline"}));
  sweep->add_option("--trials", trials, "trials per input")->check(CLI::NonNegativeNumber);
  sweep->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  sweep->add_option("--oracle", oracle, "heaviness oracles for count cells")->check(CLI::IsMember({"streaming", "reference"}));
  sweep->add_option("--median-runs", median_runs, "median runs per count trial")->check(CLI::PositiveNumber);
  sweep->add_option("--csv", csv_path, "also write CSV here");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*detect) return cmd_detect(common, runs, cap_mult);
    if (*count) return cmd_count(common, algo, oracle, median_runs);
    if (*exact) return cmd_exact(common);
    if (*audit) return cmd_audit(common, unit_shifts);
    if (*sweep) {
      const auto start = Clock::now();
      SweepSpec s;
      for (const std::string& in : inputs)
        s.inputs.push_back(in.find(':') == std::string::npos && std::filesystem::exists(in) ? "file:" + in : in);
      s.algo = parse_algo(sweep_algo);
      s.trials = trials;
      s.seed = common.seed;
      s.profile = parse_profile(common.profile);
      s.epsilon = common.epsilon;
      s.delta = common.delta;
      s.c = common.c1;
      s.t_lower = common.t_lower;
      s.median_runs = median_runs;
      s.oracle = oracle == "streaming" ? OracleMode::streaming : OracleMode::reference;
      s.jobs = jobs;
      s.deterministic = common.deterministic;
      const std::vector<SweepCell> cells = run_sweep_cells(s);
      if (!csv_path.empty()) {
        std::ofstream out(csv_path);
        if (!out) throw InputError("cannot write " + csv_path);
        out << sweep_csv(cells, s.algo);
      }
      json j = sweep_json(s, cells);
      if (common.json_out) {
        emit(common, j, start);
      } else {
        std::cout << sweep_csv(cells, s.algo);
      }
      return 0;
    }
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const StreamError& e) {
    std::cerr << "stream error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
