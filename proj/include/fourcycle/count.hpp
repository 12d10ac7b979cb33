#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "fourcycle/config_model.hpp"
#include "fourcycle/detect.hpp"
#include "fourcycle/oracles.hpp"
#include "fourcycle/stream.hpp"

namespace fourcycle {

enum class OracleMode { streaming, reference };

struct CountParams {
  SamplingParams sampling{1, 0.5, 1, Mode::count};
  double epsilon = 0.5;  // rounded down to a power of two by callers that derive delta
  std::uint64_t seed = 1;
  OracleMode oracle = OracleMode::reference;
  int median_runs = 1;
  std::optional<Shifts> shifts;  // drawn per run from the oracle budget when absent
  OracleTuning tuning;
  // Median driver: runs whose peak exceeds multiplier * M are discarded.
  double space_cap_multiplier = 10;
  std::optional<double> reference_space;
  int calibration_runs = 5;
};

struct CountResult {
  double estimate = 0;
  Count X = 0;
  double p = 0;  // pre-clamp c^2 / (delta^7 sqrt T)
  bool saturated = false;
  bool degraded = false;
  Shifts shifts;
  std::vector<Configuration> realized;
  std::vector<Configuration> accepted;
  SpaceMeter meter;
  OracleStats oracle_stats;
  std::vector<LabeledSubstructure> queried;  // streaming mode only
};

// Configurations fully realized by the pass-1/pass-2 stores, deduplicated and sorted.
std::vector<Configuration> realized_configuration_scan(CorePasses& core);

// Caches exact reference models per shift vector for one graph.
class ReferenceCache {
 public:
  explicit ReferenceCache(const Graph& g) : g_(&g) {}
  ExactModel& get(const SamplingParams& p, const Shifts& s);

 private:
  const Graph* g_;
  std::vector<std::pair<std::pair<SamplingParams, Shifts>, std::unique_ptr<ExactModel>>> models_;
};

Shifts shifts_for_run(const CountParams& params);
CountResult run_counting(const EdgeStream& stream, const CountParams& params, ReferenceCache* reference = nullptr);

struct MedianResult {
  bool ok = false;
  double estimate = 0;
  double reference_space = 0;
  std::uint64_t cap = 0;
  int aborted = 0;
  std::vector<double> estimates;  // non-aborted runs in run order
  std::vector<Count> X;
  std::vector<bool> saturated;
  std::vector<std::uint64_t> peaks;
};

double median_of(std::vector<double> v);
MedianResult median_estimate(const EdgeStream& stream, const CountParams& params, ReferenceCache* reference = nullptr);

}  // namespace fourcycle
