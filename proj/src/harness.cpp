#include "fourcycle/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

#include <boost/math/distributions/students_t.hpp>

#include "fourcycle/random.hpp"

namespace fourcycle {

SamplingParams resolve_params(const ExperimentConfig& cfg) {
  if (!(cfg.epsilon > 0 && cfg.epsilon <= 1)) throw InputError("epsilon must lie in (0, 1]");
  SamplingParams p;
  p.mode = cfg.mode;
  p.T = std::max(1.0, cfg.T);
  if (cfg.profile == Profile::paper) {
    p.delta = cfg.delta.value_or(default_delta(cfg.mode, p.T, cfg.epsilon));
    p.c = cfg.c.value_or(1.0);
  } else {
    p.delta = cfg.delta.value_or(0.5);
    if (cfg.c) {
      p.c = *cfg.c;
    } else {
      DeskTuning t;
      t.delta = p.delta;
      t.anchor = cfg.mode == Mode::detect ? DeskAnchor::max_probability : DeskAnchor::floor_probability;
      p.c = desk_constant(p.T, cfg.mode, t);
    }
  }
  p.validate();
  return p;
}

Profile parse_profile(const std::string& s) {
  if (s == "paper") return Profile::paper;
  if (s == "desk") return Profile::desk;
  throw InputError("unknown profile '" + s + "'");
}

const char* profile_name(Profile p) { return p == Profile::paper ? "paper" : "desk"; }

void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& f) {
  const std::size_t workers = std::min<std::size_t>(n, static_cast<std::size_t>(std::max(1, jobs)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex mu;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) {
        try {
          f(i);
        } catch (...) {
          std::lock_guard lock(mu);
          if (!error) error = std::current_exception();
          next = n;
        }
      }
    });
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

MeanStd mean_std(const std::vector<double>& v) {
  MeanStd r;
  if (v.empty()) return r;
  r.mean = std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
  if (v.size() > 1) {
    double ss = 0;
    for (double x : v) ss += (x - r.mean) * (x - r.mean);
    r.stddev = std::sqrt(ss / static_cast<double>(v.size() - 1));
  }
  return r;
}

double quantile(std::vector<double> v, double q) {
  if (v.empty()) throw std::invalid_argument("quantile of an empty set");
  std::sort(v.begin(), v.end());
  const double pos = std::clamp(q, 0.0, 1.0) * static_cast<double>(v.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = std::min(lo + 1, v.size() - 1);
  return v[lo] + (pos - static_cast<double>(lo)) * (v[hi] - v[lo]);
}

Regression loglog_regression(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size()) throw std::invalid_argument("regression inputs differ in length");
  std::vector<double> lx, ly;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] > 0 && y[i] > 0) {
      lx.push_back(std::log(x[i]));
      ly.push_back(std::log(y[i]));
    }
  Regression r;
  r.points = lx.size();
  if (r.points < 2) return r;
  const double n = static_cast<double>(r.points);
  const double mx = std::accumulate(lx.begin(), lx.end(), 0.0) / n;
  const double my = std::accumulate(ly.begin(), ly.end(), 0.0) / n;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < r.points; ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
  }
  if (sxx == 0) return r;
  r.slope = sxy / sxx;
  r.intercept = my - r.slope * mx;
  if (r.points > 2) {
    double rss = 0;
    for (std::size_t i = 0; i < r.points; ++i) {
      const double e = ly[i] - r.intercept - r.slope * lx[i];
      rss += e * e;
    }
    r.slope_se = std::sqrt(rss / (n - 2) / sxx);
    const double t = boost::math::quantile(boost::math::students_t(n - 2), 0.975);
    r.ci_low = r.slope - t * r.slope_se;
    r.ci_high = r.slope + t * r.slope_se;
  } else {
    r.ci_low = r.ci_high = r.slope;
  }
  return r;
}

json params_json(const SamplingParams& p, Profile profile) {
  return {{"T", p.T},
          {"delta", p.delta},
          {"c", p.c},
          {"mode", p.mode == Mode::detect ? "detect" : "count"},
          {"profile", profile_name(profile)},
          {"kappas", IndexSet::build(p.T).values()}};
}

json shifts_json(const Shifts& s) {
  return {{"s1", s.s1}, {"s2", s.s2}, {"s3", s.s3}, {"i1", s.i1}, {"i2", s.i2},
          {"i3", s.i3}, {"grid1", s.grid1}, {"grid2", s.grid2}, {"grid3", s.grid3}};
}

json cycle_json(const FourCycle& c) { return json::array({c.nodes[0], c.nodes[1], c.nodes[2], c.nodes[3]}); }

json oracle_stats_json(const OracleStats& s) {
  return {{"node", {{"queries", s.node_queries}, {"heavy", s.node_heavy}, {"stored", s.stored_node},
                    {"configurations", s.node_configurations}}},
          {"edge", {{"queries", s.edge_queries}, {"heavy", s.edge_heavy}, {"stored", s.stored_edge},
                    {"stored_sample", s.stored_sample}}},
          {"wedge", {{"queries", s.wedge_queries}, {"heavy", s.wedge_heavy}, {"stored", s.stored_wedge}}},
          {"validity", {{"queries", s.validity_queries}, {"invalid", s.invalid}}},
          {"stored_pass3", s.stored_pass3},
          {"degraded", s.degraded}};
}

json detect_json(const DetectResult& r) {
  json j = {{"found", r.found},
            {"aborted", r.aborted},
            {"saturated", r.saturated},
            {"peak_space", r.meter.peak()},
            {"per_kappa_pass1", r.per_kappa_pass1},
            {"per_kappa_pass2", r.per_kappa_pass2}};
  j["witness"] = r.witness ? cycle_json(*r.witness) : json(nullptr);
  return j;
}

json amplified_json(const AmplifiedResult& r) {
  json j = {{"found", r.found},          {"runs", r.runs}, {"aborted", r.aborted},
            {"reference_space", r.reference_space}, {"cap", r.cap},   {"peaks", r.peaks}};
  j["witness"] = r.witness ? cycle_json(*r.witness) : json(nullptr);
  return j;
}

json count_json(const CountResult& r) {
  return {{"estimate", r.estimate},
          {"X", r.X},
          {"p", r.p},
          {"saturated", r.saturated},
          {"degraded", r.degraded},
          {"realized", r.realized.size()},
          {"accepted", r.accepted.size()},
          {"peak_space", r.meter.peak()},
          {"shifts", shifts_json(r.shifts)},
          {"oracle_stats", oracle_stats_json(r.oracle_stats)}};
}

json median_json(const MedianResult& r) {
  json sat = json::array();
  for (bool b : r.saturated) sat.push_back(b);
  return {{"ok", r.ok},       {"estimate", r.estimate}, {"reference_space", r.reference_space},
          {"cap", r.cap},     {"aborted", r.aborted},   {"estimates", r.estimates},
          {"X", r.X},         {"saturated", sat},       {"peaks", r.peaks}};
}

json baseline_json(const BaselineResult& r) {
  return {{"estimate", r.estimate},       {"p", r.p},
          {"saturated", r.saturated},     {"completions", r.completions},
          {"sample_size", r.sample_size}, {"peak_space", r.meter.peak()}};
}

json regression_json(const Regression& r) {
  return {{"points", r.points}, {"slope", r.slope},     {"intercept", r.intercept},
          {"slope_se", r.slope_se}, {"ci95", {r.ci_low, r.ci_high}}};
}

json envelope(const std::string& command, const Generated& input, std::uint64_t seed) {
  json j = {{"schema", kSchemaVersion}, {"command", command}, {"seed", seed}};
  const Graph g = input.graph();
  j["input"] = {{"name", input.name}, {"n", g.num_nodes()}, {"m", g.num_edges()}};
  if (input.declared_T) j["input"]["declared_T"] = *input.declared_T;
  return j;
}

SweepAlgo parse_algo(const std::string& s) {
  if (s == "detect") return SweepAlgo::detect;
  if (s == "count") return SweepAlgo::count;
  if (s == "baseline") return SweepAlgo::baseline;
  throw InputError("unknown algorithm '" + s + "'");
}

namespace {

const char* algo_name(SweepAlgo a) {
  switch (a) {
    case SweepAlgo::detect: return "detect";
    case SweepAlgo::count: return "count";
    case SweepAlgo::baseline: return "baseline";
  }
  return "?";
}

struct Trial {
  double peak = 0;
  double estimate = 0;
  bool found = false;
  double seconds = 0;
};

Trial run_trial(const SweepSpec& spec, const EdgeStream& stream, double T, std::uint64_t seed) {
  const auto start = std::chrono::steady_clock::now();
  Trial t;
  ExperimentConfig cfg;
  cfg.profile = spec.profile;
  cfg.T = T;
  cfg.epsilon = spec.epsilon;
  cfg.delta = spec.delta;
  cfg.c = spec.c;
  switch (spec.algo) {
    case SweepAlgo::detect: {
      cfg.mode = Mode::detect;
      DetectParams p;
      p.sampling = resolve_params(cfg);
      p.seed = seed;
      const DetectResult r = run_detection(stream, p);
      t.peak = static_cast<double>(r.meter.peak());
      t.found = r.found;
      break;
    }
    case SweepAlgo::count: {
      cfg.mode = Mode::count;
      CountParams p;
      p.sampling = resolve_params(cfg);
      p.epsilon = spec.epsilon;
      p.seed = seed;
      p.oracle = spec.oracle;
      p.median_runs = spec.median_runs;
      if (spec.median_runs > 1) {
        const MedianResult r = median_estimate(stream, p);
        t.peak = r.peaks.empty() ? 0 : *std::max_element(r.peaks.begin(), r.peaks.end());
        t.estimate = r.estimate;
      } else {
        const CountResult r = run_counting(stream, p);
        t.peak = static_cast<double>(r.meter.peak());
        t.estimate = r.estimate;
      }
      break;
    }
    case SweepAlgo::baseline: {
      const BaselineResult r = edge_sampling_estimate(stream, std::max(1.0, T), seed, spec.c.value_or(1.0));
      t.peak = static_cast<double>(r.meter.peak());
      t.estimate = r.estimate;
      break;
    }
  }
  t.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return t;
}

}  // namespace

std::vector<SweepCell> run_sweep_cells(const SweepSpec& spec) {
  if (spec.trials < 0) throw InputError("trials must be >= 0");
  std::vector<SweepCell> cells;
  std::vector<EdgeStream> streams;
  for (const std::string& in : spec.inputs) {
    const Generated g = generate(in);
    SweepCell c;
    c.input = in;
    const Graph graph = g.graph();
    c.n = graph.num_nodes();
    c.m = graph.num_edges();
    c.T = g.declared_T ? *g.declared_T : exact_four_cycle_count(graph);
    c.trials = spec.trials;
    cells.push_back(std::move(c));
    streams.emplace_back(g.edges);
  }
  const auto trials = static_cast<std::size_t>(spec.trials);
  std::vector<Trial> out(cells.size() * trials);
  parallel_for(out.size(), spec.jobs, [&](std::size_t i) {
    const std::size_t cell = i / trials, trial = i % trials;
    const double T = spec.t_lower.value_or(static_cast<double>(cells[cell].T));
    out[i] = run_trial(spec, streams[cell], T, derive_seed(spec.seed, cell, trial));
  });
  for (std::size_t c = 0; c < cells.size(); ++c)
    for (std::size_t t = 0; t < trials; ++t) {
      const Trial& r = out[c * trials + t];
      cells[c].peaks.push_back(r.peak);
      cells[c].estimates.push_back(r.estimate);
      cells[c].found += r.found ? 1 : 0;
      cells[c].seconds += r.seconds;
    }
  return cells;
}

json sweep_json(const SweepSpec& spec, const std::vector<SweepCell>& cells) {
  json j = {{"schema", kSchemaVersion},
            {"command", "sweep"},
            {"algo", algo_name(spec.algo)},
            {"seed", spec.seed},
            {"trials", spec.trials},
            {"profile", profile_name(spec.profile)}};
  json arr = json::array();
  std::vector<double> xs, ys;
  for (const SweepCell& c : cells) {
    json cj = {{"input", c.input}, {"n", c.n}, {"m", c.m}, {"T", c.T}, {"trials", c.trials}};
    if (c.trials > 0) {
      const MeanStd ms = mean_std(c.peaks);
      cj["peak_mean"] = ms.mean;
      cj["peak_std"] = ms.stddev;
      if (spec.algo == SweepAlgo::detect) {
        cj["detection_rate"] = static_cast<double>(c.found) / c.trials;
      } else {
        std::vector<double> err;
        for (double e : c.estimates) err.push_back(c.T ? std::abs(e - static_cast<double>(c.T)) / c.T : e);
        cj["estimate_mean"] = mean_std(c.estimates).mean;
        cj["rel_error"] = {{"q50", quantile(err, 0.5)}, {"q90", quantile(err, 0.9)}, {"max", quantile(err, 1.0)}};
      }
      xs.push_back(static_cast<double>(c.T));
      ys.push_back(ms.mean);
    }
    if (!spec.deterministic) cj["seconds"] = c.seconds;
    arr.push_back(std::move(cj));
  }
  j["cells"] = std::move(arr);
  j["regression"] = regression_json(loglog_regression(xs, ys));
  return j;
}

std::string sweep_csv(const std::vector<SweepCell>& cells, SweepAlgo algo) {
  std::ostringstream os;
  os << "input,n,m,T,trials,peak_mean,peak_std," << (algo == SweepAlgo::detect ? "detection_rate" : "rel_error_q50")
     << "\n";
  for (const SweepCell& c : cells) {
    os << '"' << c.input << "\"," << c.n << ',' << c.m << ',' << c.T << ',' << c.trials << ',';
    if (c.trials == 0) {
      os << ",,\n";
      continue;
    }
    const MeanStd ms = mean_std(c.peaks);
    os << ms.mean << ',' << ms.stddev << ',';
    if (algo == SweepAlgo::detect) {
      os << static_cast<double>(c.found) / c.trials;
    } else {
      std::vector<double> err;
      for (double e : c.estimates) err.push_back(c.T ? std::abs(e - static_cast<double>(c.T)) / c.T : e);
      os << quantile(err, 0.5);
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace fourcycle
