#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "fourcycle/collected.hpp"
#include "fourcycle/config_model.hpp"
#include "fourcycle/detect.hpp"
#include "fourcycle/sampling.hpp"
#include "fourcycle/stream.hpp"

namespace fourcycle {

class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Query budgets and accuracy margins.
struct OracleBudget {
  double L = 1, cap_V = 1, Lp = 1, Lpp = 1;
  double eps_V = 1, eps_E = 1, eps_W = 1;
};

// Sampling multipliers applied to the core tier probabilities.
struct OracleTuning {
  double node_mult = 4;         // primed sets S', R'
  double edge_node_mult = 4;    // Q1a, Q1b
  double wedge_mult = 8;        // Q1w, Q2w
  double edge_sample_mult = 8;  // Qedge, QedgeSq
};

// L = ceil(400 log2(1/delta^2) T log2(T) p^2); cap_V bounds configurations counted by node queries.
double base_query_budget(const SamplingParams& p);
OracleBudget oracle_budget(const SamplingParams& p, double node_mult);
OracleTuning paper_tuning(const SamplingParams& p, std::size_t n);
// Shift grids (L'', L', L), each clamped to 1e12 so grid indices stay integral.
Shifts draw_oracle_shifts(std::mt19937_64& rng, const OracleBudget& b);

void configure_oracle_samples(SampleFamily& fam, const OracleTuning& tuning);

struct OracleStats {
  std::uint64_t node_queries = 0, edge_queries = 0, wedge_queries = 0, validity_queries = 0;
  std::uint64_t node_heavy = 0, edge_heavy = 0, wedge_heavy = 0, invalid = 0;
  std::uint64_t node_configurations = 0;  // oracle-realized configurations examined
  std::uint64_t stored_node = 0, stored_edge = 0, stored_wedge = 0, stored_sample = 0, stored_pass3 = 0;
  bool degraded = false;
};

enum class OracleKind : std::uint8_t { llm, node, edge_sampling, edge_node_sampling, validity, wedge };
const char* oracle_kind_name(OracleKind k);

class StreamingOracles : public HeavinessOracle {
 public:
  StreamingOracles(const SampleFamily& fam, const CorePasses& core, std::size_t node_bound, SpaceMeter& meter,
                   Shifts shifts, OracleBudget budget);

  void pass1(const Edge& e);
  void pass2(const Edge& e);
  // Fixes the query set from the realized configurations; must precede pass 3.
  void plan(const std::vector<Configuration>& realized);
  void pass3(const Edge& e);

  bool heavy(const LabeledSubstructure& ls) override;
  bool valid(const Edge& e) override;

  const OracleStats& stats() const { return stats_; }
  const Shifts& shifts() const { return shifts_; }
  const OracleBudget& budget() const { return budget_; }
  // Caller/callee pairs observed so far.
  const std::set<std::pair<OracleKind, OracleKind>>& call_graph() const { return calls_; }
  bool call_graph_acyclic() const;
  std::vector<LabeledSubstructure> queried() const;

  // Raw estimator counts, exposed for tests.
  Count wedge_count(const LabeledSubstructure& ls);
  Count edge_sample_count(const Edge& e, SampleLabel sample, std::size_t level);
  Count edge_node_count(const LabeledSubstructure& ls);
  Count node_count(const LabeledSubstructure& ls);

  bool anchor(std::size_t level, NodeId v);

 private:
  struct Level {
    CollectedGraph node;   // primed-set collection around anchors
    CollectedGraph q1;     // Q1a/Q1b edges
    CollectedGraph wedge;  // Q1w/Q2w edges
    CollectedGraph sample_sq;
  };
  class Scope;

  std::uint32_t mask(std::size_t k, NodeId v) { return cache_.mask(k, v); }
  bool primed_any(std::size_t q, NodeId v) { return (mask(q, v) & kPrimedBits) != 0; }
  bool q1_any(std::size_t q, NodeId v) { return (mask(q, v) & kQ1Bits) != 0; }
  bool main_known(NodeId a, NodeId b, std::size_t level) const;
  void store(CollectedGraph& g, const Edge& e, std::uint64_t& counter);
  bool wedge_heavy(const LabeledSubstructure& ls);
  bool edge_heavy(const LabeledSubstructure& ls);
  bool node_heavy(const LabeledSubstructure& ls);
  // Oracle-realized configurations through (v, level, label) in the node store.
  std::vector<Configuration> node_configurations(NodeId v, std::size_t level, SampleLabel label);
  double primed_product(const Configuration& c, NodeId v);
  void check_budget();

  static constexpr std::uint32_t kPrimedBits = 0xFC0u;
  static constexpr std::uint32_t kQ1Bits = (1u << 12) | (1u << 13);
  static constexpr std::uint32_t kQwBits = (1u << 14) | (1u << 15);

  const SampleFamily* fam_;
  const CorePasses* core_;
  MembershipCache cache_;
  SpaceMeter* meter_;
  Shifts shifts_;
  OracleBudget budget_;
  std::vector<std::vector<std::size_t>> anchor_levels_;  // per level, kappa indices inside [q, q/delta^2]
  std::vector<Level> levels_;
  CollectedGraph sample_;  // Qedge
  CollectedGraph pass3_;
  std::unordered_set<std::uint64_t> z_edges_;
  std::unordered_set<NodeId> z_nodes_, sample_nodes_;
  bool planned_ = false;

  std::unordered_map<LabeledSubstructure, bool, LabeledSubstructureHash> memo_;
  std::unordered_map<std::uint64_t, bool> valid_memo_;
  std::vector<OracleKind> stack_;
  std::set<std::pair<OracleKind, OracleKind>> calls_;
  OracleStats stats_;
};

struct MarginEntry {
  LabeledSubstructure ls;
  Count refined = 0;
  double theta = 0, shift = 1, eps = 0;
  bool bad = false;          // inside the margin at the current shift
  std::uint64_t bad_points = 0;  // grid points for which it would be inside the margin
};

struct MarginAudit {
  std::vector<MarginEntry> entries;
  std::uint64_t bad_now = 0;
  std::uint64_t max_bad_points = 0;
  std::uint64_t distinct_bad_points[3] = {0, 0, 0};  // wedge (s1), edge (s2), node (s3) grids
  std::uint64_t grid_size[3] = {0, 0, 0};
  bool disjoint() const { return max_bad_points <= 1; }
};

struct MarginWidths {
  double wedge, edge, node;
  static MarginWidths from(const OracleBudget& b) { return {b.eps_W, b.eps_E, b.eps_V}; }
};

// Grid points of the substructure's shift grid whose margin contains t.
std::vector<std::uint64_t> bad_grid_points(double t, double theta, double grid, double eps);
MarginAudit shift_margin_audit(ExactModel& model, const std::vector<LabeledSubstructure>& queried,
                               const MarginWidths& eps);
// Every node, edge and wedge of every configuration of every cycle.
MarginAudit shift_margin_audit(ExactModel& model, const MarginWidths& eps);

}  // namespace fourcycle
