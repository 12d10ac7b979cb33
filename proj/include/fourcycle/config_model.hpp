#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fourcycle/graph.hpp"
#include "fourcycle/sampling.hpp"

namespace fourcycle {

enum class SubKind : std::uint8_t { node, edge, wedge, pair };

const char* kind_name(SubKind k);

// node: nodes[0]; edge/pair: nodes[0] < nodes[1]; wedge: (u, center, v) with u < v.
struct LabeledSubstructure {
  SubKind kind = SubKind::node;
  std::array<NodeId, 3> nodes{};
  std::array<SampleLabel, 3> labels{};
  std::size_t kappa = 0;

  int size() const { return kind == SubKind::node ? 1 : kind == SubKind::wedge ? 3 : 2; }
  int tier1() const;
  int tier2() const;
  SampleLabel label_of(NodeId v) const;
  Substructure substructure() const;
  bool operator==(const LabeledSubstructure&) const = default;

  static LabeledSubstructure node(NodeId v, SampleLabel l, std::size_t kappa);
  static LabeledSubstructure edge(NodeId a, SampleLabel la, NodeId b, SampleLabel lb, std::size_t kappa);
  static LabeledSubstructure wedge(NodeId a, SampleLabel la, NodeId c, SampleLabel lc, NodeId b, SampleLabel lb,
                                   std::size_t kappa);
};

struct LabeledSubstructureHash {
  std::size_t operator()(const LabeledSubstructure& s) const;
};

struct Configuration {
  FourCycle cycle;
  std::size_t kappa = 0;  // index into the IndexSet
  NodeId x = 0, y = 0;    // x < y

  static Configuration make(const FourCycle& cycle, std::size_t kappa, NodeId a, NodeId b);
  bool opposite() const { return cycle.opposite(x) == y; }
  // The other two nodes of the cycle, sorted.
  std::pair<NodeId, NodeId> complement() const;
  auto operator<=>(const Configuration&) const = default;
};

struct ConfigurationHash {
  std::size_t operator()(const Configuration& c) const;
};

using Labeling = std::array<std::pair<NodeId, SampleLabel>, 4>;  // cycle order

Labeling labeling_of(const Configuration& c);
SampleLabel label_in(const Labeling& l, NodeId v);
// 4 nodes, 4 edges, 4 wedges (centered at cycle positions 0..3), 2 opposite pairs.
std::array<LabeledSubstructure, 14> substructures_of(const Configuration& c);
bool contains(const Configuration& c, const LabeledSubstructure& ls);
bool realized(const Configuration& c, const SampleFamily& fam);
// Every configuration (all kappa, all six pairs) of a cycle.
std::vector<Configuration> configurations_of(const FourCycle& a, const IndexSet& I);

struct ProbabilityValue {
  double pre = 0;
  double effective = 0;
};

ProbabilityValue substructure_probability(const LabeledSubstructure& ls, const SamplingParams& params,
                                          const IndexSet& I);

double threshold(SubKind kind, int tier1, int tier2, double kappa, const SamplingParams& params);
double threshold(const LabeledSubstructure& ls, const SamplingParams& params, const IndexSet& I);
double shift_factor(SubKind kind, const Shifts& s);

// Abstract heaviness answers, implemented exactly by ExactModel and approximately by the streaming oracles.
class HeavinessOracle {
 public:
  virtual ~HeavinessOracle() = default;
  virtual bool heavy(const LabeledSubstructure& ls) = 0;
  virtual bool valid(const Edge& e) = 0;
};

enum class Regime { floor, middle, upper };

Regime regime_of(std::size_t kappa, const SamplingParams& params, const IndexSet& I);
// Grid points kappa' < kappa that must be heavy for local minimality.
std::vector<std::size_t> lower_kappas(std::size_t kappa, const SamplingParams& params, const IndexSet& I);
bool pair_less(std::pair<NodeId, NodeId> a, std::pair<NodeId, NodeId> b);

bool config_heavy(const Configuration& c, HeavinessOracle& o);
bool config_valid(const Configuration& c, HeavinessOracle& o);
bool locally_minimal(const Configuration& c, HeavinessOracle& o, const SamplingParams& params, const IndexSet& I);
// heavy -> false; not locally minimal -> false; invalid -> false.
bool is_llm_with(const Configuration& c, HeavinessOracle& o, const SamplingParams& params, const IndexSet& I);

struct KappaAssignment {
  std::size_t kappa = 0;
  double raw = 0;
  bool clamped = false;
  std::optional<Substructure> maximizer;  // empty when the floor term wins
};

class ExactModel : public HeavinessOracle {
 public:
  ExactModel(const Graph& g, SamplingParams params, Shifts shifts);

  const Graph& graph() const { return *g_; }
  const SamplingParams& params() const { return params_; }
  const IndexSet& index() const { return index_; }
  const Shifts& shifts() const { return shifts_; }
  const std::vector<FourCycle>& cycles() const { return cycles_; }
  std::span<const std::size_t> cycles_through(NodeId v) const;
  std::span<const std::size_t> cycles_through(const Edge& e) const;

  Count heaviness(const Substructure& x);
  Count refined(const LabeledSubstructure& ls);
  double threshold(const LabeledSubstructure& ls) const;
  double shifted_threshold(const LabeledSubstructure& ls) const;

  bool heavy(const LabeledSubstructure& ls) override;
  bool valid(const Edge& e) override;

  bool is_valid(const Configuration& c);
  bool is_light(const Configuration& c);
  bool is_locally_minimal(const Configuration& c);
  bool is_llm(const Configuration& c);
  std::vector<Configuration> enumerate_llm();

  KappaAssignment kappa_A(const FourCycle& a);
  std::pair<NodeId, NodeId> assign_xy(const FourCycle& a);

  // Diagnostic record as a JSON string.
  std::string dump(const Configuration& c);

 private:
  const Graph* g_;
  SamplingParams params_;
  IndexSet index_;
  Shifts shifts_;
  std::vector<FourCycle> cycles_;
  std::vector<std::vector<std::size_t>> by_node_;
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> by_edge_;
  std::unordered_map<std::uint64_t, Count> node_t_, edge_t_;
  std::unordered_map<LabeledSubstructure, Count, LabeledSubstructureHash> refined_;
};

struct LemmaReport {
  Count two_heavy_edges = 0;              // edges with t >= sqrt(T)/(4 delta^2)
  Count heavy_edge_and_wedge = 0;         // plus a wedge with t >= 1/delta
  std::vector<std::array<Count, 9>> combination;  // per kappa, cases (i)..(ix)
  Count combination_union = 0;
  double bound_two_heavy = 0, bound_heavy_edge_wedge = 0, bound_combination = 0, bound_combination_case = 0;
  bool within_bounds() const;
};

LemmaReport lemma_counters(const Graph& g, const SamplingParams& params);

// Cycles with more than one LLM configuration, and its bound 3 delta log2(T)^3 T.
struct MultiplicityReport {
  Count cycles_with_llm = 0;
  Count cycles_with_multiple = 0;
  Count cycles_with_light = 0;
  Count light_without_llm = 0;
  double bound = 0;
};

MultiplicityReport llm_multiplicity(ExactModel& model);

inline double validity_threshold(const SamplingParams& p) { return std::sqrt(p.T) / (p.delta * p.delta); }

}  // namespace fourcycle
