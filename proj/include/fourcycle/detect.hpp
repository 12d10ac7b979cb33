#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fourcycle/collected.hpp"
#include "fourcycle/sampling.hpp"
#include "fourcycle/stream.hpp"

namespace fourcycle {

// Pass-1 and pass-2 node-sampling collection shared by detection and counting.
class CorePasses {
 public:
  CorePasses(const SampleFamily& fam, std::size_t node_bound, SpaceMeter& meter);

  bool in(std::size_t k, NodeId v, SampleLabel l) { return cache_.has(k, v, l); }
  void pass1(const Edge& e);
  void pass2(const Edge& e);

  std::size_t kappas() const { return stores_.size(); }
  const CollectedGraph& store(std::size_t k) const { return stores_[k]; }
  const CollectedGraph& completions(std::size_t k) const { return pass2_[k]; }
  CollectedGraph union_graph() const;
  std::vector<std::size_t> pass1_counts() const;
  std::vector<std::size_t> pass2_counts() const;

 private:
  bool completes(std::size_t k, NodeId u, NodeId v);

  const SampleFamily* fam_;
  MembershipCache cache_;
  SpaceMeter* meter_;
  std::vector<CollectedGraph> stores_;
  std::vector<CollectedGraph> pass2_;
};

struct DetectParams {
  SamplingParams sampling;
  std::uint64_t seed = 1;
  int amplification = 1;
  double space_cap_multiplier = 10;
  std::optional<double> reference_space;  // M; measured by calibration when absent
  int calibration_runs = 20;
  std::uint64_t space_cap = 0;  // per run; 0 disables
};

struct DetectResult {
  bool found = false;
  bool aborted = false;
  bool saturated = false;
  std::optional<FourCycle> witness;
  SpaceMeter meter;
  std::vector<std::size_t> per_kappa_pass1, per_kappa_pass2;
  std::vector<Edge> collected;  // sorted union of stored edges
};

DetectResult run_detection(const EdgeStream& stream, const DetectParams& params);

struct AmplifiedResult {
  bool found = false;
  int runs = 0;
  int aborted = 0;
  double reference_space = 0;
  std::uint64_t cap = 0;
  std::optional<FourCycle> witness;
  std::vector<std::uint64_t> peaks;
};

int default_amplification(std::size_t n);
// Mean peak of `runs` independent runs with sub-seeds derived from `seed`.
double calibrate_space(const EdgeStream& stream, const DetectParams& params, int runs);
AmplifiedResult amplified_detection(const EdgeStream& stream, const DetectParams& params);

}  // namespace fourcycle
