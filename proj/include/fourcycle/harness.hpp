#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "fourcycle/baseline.hpp"
#include "fourcycle/count.hpp"
#include "fourcycle/detect.hpp"
#include "fourcycle/generators.hpp"
#include "fourcycle/sampling.hpp"

namespace fourcycle {

using json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

// Resolves (delta, c) from the profile; explicit overrides win.
struct ExperimentConfig {
  Mode mode = Mode::detect;
  Profile profile = Profile::desk;
  double T = 1;
  double epsilon = 0.5;
  std::optional<double> delta;
  std::optional<double> c;
};

SamplingParams resolve_params(const ExperimentConfig& cfg);
Profile parse_profile(const std::string& s);
const char* profile_name(Profile p);

// Calls f(i) for i in [0, n) on up to `jobs` threads; the first exception is rethrown.
void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& f);

struct MeanStd {
  double mean = 0, stddev = 0;  // sample standard deviation
};
MeanStd mean_std(const std::vector<double>& v);
// Linear interpolation between order statistics.
double quantile(std::vector<double> v, double q);

struct Regression {
  std::size_t points = 0;
  double slope = 0, intercept = 0, slope_se = 0, ci_low = 0, ci_high = 0;
};
// OLS of log y on log x with a two-sided 95% t interval on the slope.
Regression loglog_regression(const std::vector<double>& x, const std::vector<double>& y);

json params_json(const SamplingParams& p, Profile profile);
json shifts_json(const Shifts& s);
json cycle_json(const FourCycle& c);
json oracle_stats_json(const OracleStats& s);
json detect_json(const DetectResult& r);
json amplified_json(const AmplifiedResult& r);
json count_json(const CountResult& r);
json median_json(const MedianResult& r);
json baseline_json(const BaselineResult& r);
json regression_json(const Regression& r);

// Top-level document with schema, command and input metadata.
json envelope(const std::string& command, const Generated& input, std::uint64_t seed);

enum class SweepAlgo { detect, count, baseline };
SweepAlgo parse_algo(const std::string& s);

struct SweepSpec {
  std::vector<std::string> inputs;  // generator specs, one cell each
  SweepAlgo algo = SweepAlgo::detect;
  int trials = 10;
  std::uint64_t seed = 1;
  Profile profile = Profile::desk;
  double epsilon = 0.5;
  std::optional<double> delta, c, t_lower;
  int median_runs = 1;
  OracleMode oracle = OracleMode::reference;
  int jobs = 1;
  bool deterministic = false;
};

struct SweepCell {
  std::string input;
  std::size_t n = 0, m = 0;
  Count T = 0;
  int trials = 0;
  std::vector<double> peaks;
  std::vector<double> estimates;
  int found = 0;
  double seconds = 0;
};

std::vector<SweepCell> run_sweep_cells(const SweepSpec& spec);
json sweep_json(const SweepSpec& spec, const std::vector<SweepCell>& cells);
std::string sweep_csv(const std::vector<SweepCell>& cells, SweepAlgo algo);

}  // namespace fourcycle
