#include "fourcycle/config_model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fourcycle/random.hpp"
#include "json.hpp"

namespace fourcycle {

const char* kind_name(SubKind k) {
  switch (k) {
    case SubKind::node: return "node";
    case SubKind::edge: return "edge";
    case SubKind::wedge: return "wedge";
    default: return "pair";
  }
}

int LabeledSubstructure::tier1() const {
  int c = 0;
  for (int i = 0; i < size(); ++i) c += tier(labels[static_cast<std::size_t>(i)]) == 1;
  return c;
}

int LabeledSubstructure::tier2() const {
  int c = 0;
  for (int i = 0; i < size(); ++i) c += tier(labels[static_cast<std::size_t>(i)]) == 2;
  return c;
}

SampleLabel LabeledSubstructure::label_of(NodeId v) const {
  for (int i = 0; i < size(); ++i)
    if (nodes[static_cast<std::size_t>(i)] == v) return labels[static_cast<std::size_t>(i)];
  throw std::logic_error("node not in labeled substructure");
}

Substructure LabeledSubstructure::substructure() const {
  switch (kind) {
    case SubKind::node: return nodes[0];
    case SubKind::wedge: return Wedge{nodes[0], nodes[1], nodes[2]};
    default: return Edge{nodes[0], nodes[1]};
  }
}

LabeledSubstructure LabeledSubstructure::node(NodeId v, SampleLabel l, std::size_t kappa) {
  LabeledSubstructure s;
  s.kind = SubKind::node;
  s.nodes = {v, 0, 0};
  s.labels = {l, SampleLabel::S1, SampleLabel::S1};
  s.kappa = kappa;
  return s;
}

LabeledSubstructure LabeledSubstructure::edge(NodeId a, SampleLabel la, NodeId b, SampleLabel lb, std::size_t kappa) {
  if (a == b) throw std::logic_error("degenerate edge");
  if (b < a) {
    std::swap(a, b);
    std::swap(la, lb);
  }
  LabeledSubstructure s;
  s.kind = SubKind::edge;
  s.nodes = {a, b, 0};
  s.labels = {la, lb, SampleLabel::S1};
  s.kappa = kappa;
  return s;
}

LabeledSubstructure LabeledSubstructure::wedge(NodeId a, SampleLabel la, NodeId c, SampleLabel lc, NodeId b,
                                               SampleLabel lb, std::size_t kappa) {
  if (b < a) {
    std::swap(a, b);
    std::swap(la, lb);
  }
  LabeledSubstructure s;
  s.kind = SubKind::wedge;
  s.nodes = {a, c, b};
  s.labels = {la, lc, lb};
  s.kappa = kappa;
  return s;
}

std::size_t LabeledSubstructureHash::operator()(const LabeledSubstructure& s) const {
  std::uint64_t h = mix64(static_cast<std::uint64_t>(s.kind) * 131 + s.kappa);
  for (int i = 0; i < 3; ++i) {
    h = mix64(h ^ s.nodes[static_cast<std::size_t>(i)]);
    h = mix64(h ^ static_cast<std::uint64_t>(s.labels[static_cast<std::size_t>(i)]));
  }
  return static_cast<std::size_t>(h);
}

Configuration Configuration::make(const FourCycle& cycle, std::size_t kappa, NodeId a, NodeId b) {
  if (a == b || !cycle.contains(a) || !cycle.contains(b)) throw std::logic_error("configuration pair must be two cycle nodes");
  Configuration c;
  c.cycle = cycle;
  c.kappa = kappa;
  c.x = std::min(a, b);
  c.y = std::max(a, b);
  return c;
}

std::pair<NodeId, NodeId> Configuration::complement() const {
  NodeId r[2];
  int k = 0;
  for (NodeId v : cycle.nodes)
    if (v != x && v != y) r[k++] = v;
  return {std::min(r[0], r[1]), std::max(r[0], r[1])};
}

std::size_t ConfigurationHash::operator()(const Configuration& c) const {
  std::uint64_t h = mix64(c.kappa + 0x77);
  for (NodeId v : c.cycle.nodes) h = mix64(h ^ v);
  h = mix64(h ^ c.x);
  return static_cast<std::size_t>(mix64(h ^ c.y));
}

Labeling labeling_of(const Configuration& c) {
  const FourCycle& a = c.cycle;
  const int i = a.position(c.x), j = a.position(c.y);
  if (i < 0 || j < 0 || i == j) throw std::logic_error("x and y must be distinct cycle nodes");
  Labeling l;
  for (int p = 0; p < 4; ++p) l[static_cast<std::size_t>(p)] = {a.at(p), SampleLabel::S2};
  auto set = [&](NodeId v, SampleLabel lab) { l[static_cast<std::size_t>(a.position(v))].second = lab; };
  if (a.opposite(c.x) == c.y) {
    set(c.x, SampleLabel::S1);
    set(c.y, SampleLabel::S1);
    return l;
  }
  const NodeId x_other = a.at(i + 1) == c.y ? a.at(i + 3) : a.at(i + 1);
  const NodeId y_other = a.at(j + 1) == c.x ? a.at(j + 3) : a.at(j + 1);
  set(c.x, SampleLabel::R1a);
  set(c.y, SampleLabel::R1b);
  set(x_other, SampleLabel::R2b);
  set(y_other, SampleLabel::R2a);
  return l;
}

SampleLabel label_in(const Labeling& l, NodeId v) {
  for (const auto& [n, lab] : l)
    if (n == v) return lab;
  throw std::logic_error("node not labeled");
}

std::array<LabeledSubstructure, 14> substructures_of(const Configuration& c) {
  const Labeling l = labeling_of(c);
  const FourCycle& a = c.cycle;
  auto lab = [&](int p) { return l[static_cast<std::size_t>(p & 3)].second; };
  std::array<LabeledSubstructure, 14> out;
  for (int p = 0; p < 4; ++p) {
    const auto q = static_cast<std::size_t>(p);
    out[q] = LabeledSubstructure::node(a.at(p), lab(p), c.kappa);
    out[4 + q] = LabeledSubstructure::edge(a.at(p), lab(p), a.at(p + 1), lab(p + 1), c.kappa);
    out[8 + q] = LabeledSubstructure::wedge(a.at(p + 3), lab(p + 3), a.at(p), lab(p), a.at(p + 1), lab(p + 1), c.kappa);
  }
  for (int p = 0; p < 2; ++p) {
    LabeledSubstructure s = LabeledSubstructure::edge(a.at(p), lab(p), a.at(p + 2), lab(p + 2), c.kappa);
    s.kind = SubKind::pair;
    out[12 + static_cast<std::size_t>(p)] = s;
  }
  return out;
}

bool contains(const Configuration& c, const LabeledSubstructure& ls) {
  if (c.kappa != ls.kappa) return false;
  const Labeling l = labeling_of(c);
  for (int i = 0; i < ls.size(); ++i) {
    const NodeId v = ls.nodes[static_cast<std::size_t>(i)];
    if (!c.cycle.contains(v) || label_in(l, v) != ls.labels[static_cast<std::size_t>(i)]) return false;
  }
  switch (ls.kind) {
    case SubKind::node: return true;
    case SubKind::edge: return c.cycle.adjacent(ls.nodes[0], ls.nodes[1]);
    case SubKind::pair: return c.cycle.opposite(ls.nodes[0]) == ls.nodes[1];
    case SubKind::wedge:
      return c.cycle.adjacent(ls.nodes[0], ls.nodes[1]) && c.cycle.adjacent(ls.nodes[1], ls.nodes[2]);
  }
  return false;
}

bool realized(const Configuration& c, const SampleFamily& fam) {
  for (const auto& [v, lab] : labeling_of(c))
    if (!fam.member(lab, c.kappa, v)) return false;
  return true;
}

std::vector<Configuration> configurations_of(const FourCycle& a, const IndexSet& I) {
  std::vector<Configuration> out;
  out.reserve(6 * I.size());
  for (std::size_t k = 0; k < I.size(); ++k)
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) out.push_back(Configuration::make(a, k, a.at(i), a.at(j)));
  return out;
}

ProbabilityValue substructure_probability(const LabeledSubstructure& ls, const SamplingParams& params,
                                          const IndexSet& I) {
  const TierProbabilities t = probabilities(I.value(ls.kappa), params);
  const int i = ls.tier1(), j = ls.tier2();
  return {std::pow(t.p1_pre, i) * std::pow(t.p2_pre, j), std::pow(t.p1, i) * std::pow(t.p2, j)};
}

double threshold(SubKind kind, int tier1, int tier2, double kappa, const SamplingParams& params) {
  const double T = params.T, d = params.delta, rt = std::sqrt(T);
  switch (kind) {
    case SubKind::node:
      if (tier1 == 1 && tier2 == 0) return kappa * rt / std::pow(d, 1.5);
      if (tier1 == 0 && tier2 == 1) return T / (kappa * std::pow(d, 1.5));
      break;
    case SubKind::edge:
    case SubKind::pair:
      if (tier1 == 2 && tier2 == 0) return kappa * kappa / (d * d);
      if (tier1 == 1 && tier2 == 1) return rt / (d * d);
      if (tier1 == 0 && tier2 == 2) return T / (kappa * kappa * d * d);
      break;
    case SubKind::wedge:
      if (tier1 == 2 && tier2 == 1) return kappa / d;
      if (tier1 == 1 && tier2 == 2) return rt / (kappa * d);
      break;
  }
  throw std::logic_error(std::string("no threshold for ") + kind_name(kind) + " with tiers (" +
                         std::to_string(tier1) + "," + std::to_string(tier2) + ")");
}

double threshold(const LabeledSubstructure& ls, const SamplingParams& params, const IndexSet& I) {
  return threshold(ls.kind, ls.tier1(), ls.tier2(), I.value(ls.kappa), params);
}

double shift_factor(SubKind kind, const Shifts& s) {
  switch (kind) {
    case SubKind::node: return s.s3;
    case SubKind::edge: return s.s2;
    case SubKind::wedge: return s.s1;
    default: return s.s1 * s.s1;
  }
}

Regime regime_of(std::size_t kappa, const SamplingParams& params, const IndexSet& I) {
  if (kappa == 0) return Regime::floor;
  const double upper_start = I.floor_value() / (params.delta * params.delta);
  return I.value(kappa) >= upper_start * (1 - 1e-9) ? Regime::upper : Regime::middle;
}

std::vector<std::size_t> lower_kappas(std::size_t kappa, const SamplingParams& params, const IndexSet& I) {
  std::vector<std::size_t> out;
  const Regime r = regime_of(kappa, params, I);
  if (r == Regime::floor) return out;
  const double k = I.value(kappa);
  double lo = params.delta * params.delta * k;
  if (r == Regime::middle) lo = std::max(lo, 2 * std::sqrt(params.T) / k);
  const double hi = k / 2;
  for (std::size_t j = 0; j < kappa; ++j) {
    const double v = I.value(j);
    if (v >= lo * (1 - 1e-9) && v <= hi * (1 + 1e-9)) out.push_back(j);
  }
  return out;
}

bool pair_less(std::pair<NodeId, NodeId> a, std::pair<NodeId, NodeId> b) {
  auto norm = [](std::pair<NodeId, NodeId> p) { return std::pair{std::min(p.first, p.second), std::max(p.first, p.second)}; };
  return norm(a) < norm(b);
}

bool config_heavy(const Configuration& c, HeavinessOracle& o) {
  const auto subs = substructures_of(c);
  for (std::size_t i = 8; i < 12; ++i)
    if (o.heavy(subs[i])) return true;
  for (std::size_t i = 4; i < 8; ++i)
    if (o.heavy(subs[i])) return true;
  for (std::size_t i = 0; i < 4; ++i)
    if (o.heavy(subs[i])) return true;
  return false;
}

bool config_valid(const Configuration& c, HeavinessOracle& o) {
  if (c.opposite()) return true;
  return o.valid(Edge::make(c.x, c.y));
}

bool locally_minimal(const Configuration& c, HeavinessOracle& o, const SamplingParams& params, const IndexSet& I) {
  const Regime r = regime_of(c.kappa, params, I);
  if (r == Regime::floor) {
    if (!c.opposite()) return true;
    const auto pairs = c.cycle.opposite_pairs();
    const Edge smallest = std::min(pairs[0], pairs[1]);
    return smallest == Edge{c.x, c.y};
  }
  for (std::size_t j : lower_kappas(c.kappa, params, I)) {
    Configuration lower = c;
    lower.kappa = j;
    if (!config_heavy(lower, o)) return false;
  }
  if (r == Regime::upper) return true;
  const auto [xp, yp] = c.complement();
  const Configuration ext = Configuration::make(c.cycle, c.kappa, xp, yp);
  if (config_heavy(ext, o)) return true;
  return pair_less({c.x, c.y}, {xp, yp});
}

bool is_llm_with(const Configuration& c, HeavinessOracle& o, const SamplingParams& params, const IndexSet& I) {
  if (config_heavy(c, o)) return false;
  if (!locally_minimal(c, o, params, I)) return false;
  return config_valid(c, o);
}

// ---------------------------------------------------------------------------

ExactModel::ExactModel(const Graph& g, SamplingParams params, Shifts shifts)
    : g_(&g), params_(params), index_(IndexSet::build(params.T)), shifts_(shifts) {
  params_.validate();
  cycles_ = enumerate_four_cycles(g);
  by_node_.assign(g.num_nodes(), {});
  for (std::size_t i = 0; i < cycles_.size(); ++i) {
    for (NodeId v : cycles_[i].nodes) by_node_[v].push_back(i);
    for (const Edge& e : cycles_[i].edges()) by_edge_[e.key()].push_back(i);
  }
}

std::span<const std::size_t> ExactModel::cycles_through(NodeId v) const {
  if (v >= by_node_.size()) return {};
  return by_node_[v];
}

std::span<const std::size_t> ExactModel::cycles_through(const Edge& e) const {
  auto it = by_edge_.find(e.key());
  if (it == by_edge_.end()) return {};
  return it->second;
}

Count ExactModel::heaviness(const Substructure& x) {
  if (const NodeId* v = std::get_if<NodeId>(&x)) return cycles_through(*v).size();
  if (const Edge* e = std::get_if<Edge>(&x)) return cycles_through(*e).size();
  const Wedge& w = std::get<Wedge>(x);
  return onion_width(*g_, w.u, w.v) - 1;
}

double ExactModel::threshold(const LabeledSubstructure& ls) const { return fourcycle::threshold(ls, params_, index_); }

double ExactModel::shifted_threshold(const LabeledSubstructure& ls) const {
  return shift_factor(ls.kind, shifts_) * threshold(ls);
}

Count ExactModel::refined(const LabeledSubstructure& ls) {
  if (ls.kind == SubKind::pair) throw std::logic_error("refined heaviness is not defined for opposite pairs");
  if (ls.kind == SubKind::wedge) return heaviness(ls.substructure());
  if (ls.kind == SubKind::edge && ls.tier2() < 2) return heaviness(ls.substructure());
  if (auto it = refined_.find(ls); it != refined_.end()) return it->second;

  std::span<const std::size_t> through =
      ls.kind == SubKind::node ? cycles_through(ls.nodes[0]) : cycles_through(Edge{ls.nodes[0], ls.nodes[1]});
  Count t = 0;
  for (std::size_t ci : through) {
    const FourCycle& a = cycles_[ci];
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) {
        const Configuration c = Configuration::make(a, ls.kappa, a.at(i), a.at(j));
        if (!contains(c, ls)) continue;
        const auto subs = substructures_of(c);
        bool ok = true;
        for (std::size_t w = 8; w < 12 && ok; ++w) ok = heaviness(subs[w].substructure()) <= shifted_threshold(subs[w]);
        if (ok && ls.kind == SubKind::node) {
          ok = is_valid(c);
          for (std::size_t e = 4; e < 8 && ok; ++e) ok = refined(subs[e]) <= shifted_threshold(subs[e]);
        }
        t += ok ? 1 : 0;
      }
  }
  refined_.emplace(ls, t);
  return t;
}

bool ExactModel::heavy(const LabeledSubstructure& ls) {
  return static_cast<double>(refined(ls)) > shifted_threshold(ls);
}

bool ExactModel::valid(const Edge& e) {
  return static_cast<double>(heaviness(e)) > validity_threshold(params_);
}

bool ExactModel::is_valid(const Configuration& c) { return config_valid(c, *this); }

bool ExactModel::is_light(const Configuration& c) { return !config_heavy(c, *this); }

bool ExactModel::is_locally_minimal(const Configuration& c) { return locally_minimal(c, *this, params_, index_); }

bool ExactModel::is_llm(const Configuration& c) { return is_llm_with(c, *this, params_, index_); }

std::vector<Configuration> ExactModel::enumerate_llm() {
  std::vector<Configuration> out;
  for (const FourCycle& a : cycles_)
    for (const Configuration& c : configurations_of(a, index_))
      if (is_llm(c)) out.push_back(c);
  return out;
}

KappaAssignment ExactModel::kappa_A(const FourCycle& a) {
  const double T = params_.T, d = params_.delta;
  double best = -1;
  std::optional<Substructure> arg;
  auto consider = [&](double v, const Substructure& s) {
    if (v > best) {
      best = v;
      arg = s;
    }
  };
  std::array<NodeId, 4> nodes = a.nodes;
  std::sort(nodes.begin(), nodes.end());
  for (NodeId v : nodes) consider(std::pow(d, 1.5) * static_cast<double>(heaviness(v)) / std::sqrt(T), v);
  auto edges = a.edges();
  std::sort(edges.begin(), edges.end());
  for (const Edge& e : edges) consider(d * std::sqrt(static_cast<double>(heaviness(e))), e);
  auto wedges = a.wedges();
  std::sort(wedges.begin(), wedges.end());
  for (const Wedge& w : wedges) consider(d * static_cast<double>(heaviness(w)), w);

  KappaAssignment out;
  const double floor_term = index_.floor_value();
  if (best > floor_term) {
    out.raw = best;
    out.maximizer = arg;
  } else {
    out.raw = floor_term;
  }
  out.kappa = index_.ceil_index(out.raw, &out.clamped);
  return out;
}

std::pair<NodeId, NodeId> ExactModel::assign_xy(const FourCycle& a) {
  auto edges = a.edges();
  std::sort(edges.begin(), edges.end());
  for (const Edge& e : edges)
    if (static_cast<double>(heaviness(e)) >= validity_threshold(params_)) return {e.u, e.v};
  const KappaAssignment k = kappa_A(a);
  const auto pairs = a.opposite_pairs();
  const Edge smallest = std::min(pairs[0], pairs[1]);
  if (k.kappa == 0 || !k.maximizer) return {smallest.u, smallest.v};
  if (const Wedge* w = std::get_if<Wedge>(&*k.maximizer)) return {w->u, w->v};
  if (const NodeId* v = std::get_if<NodeId>(&*k.maximizer)) {
    const NodeId o = a.opposite(*v);
    return {std::min(*v, o), std::max(*v, o)};
  }
  return {smallest.u, smallest.v};
}

std::string ExactModel::dump(const Configuration& c) {
  nlohmann::json j;
  j["cycle"] = c.cycle.nodes;
  j["kappa"] = index_.value(c.kappa);
  j["kappa_index"] = c.kappa;
  j["x"] = c.x;
  j["y"] = c.y;
  nlohmann::json lab = nlohmann::json::object();
  for (const auto& [v, l] : labeling_of(c)) lab[std::to_string(v)] = label_name(l);
  j["labeling"] = lab;
  nlohmann::json subs = nlohmann::json::array();
  for (const LabeledSubstructure& s : substructures_of(c)) {
    nlohmann::json r;
    r["kind"] = kind_name(s.kind);
    r["nodes"] = std::vector<NodeId>(s.nodes.begin(), s.nodes.begin() + s.size());
    if (s.kind == SubKind::pair) {
      r["t"] = onion_size(*g_, s.nodes[0], s.nodes[1]);
      r["theta"] = threshold(s);
    } else {
      r["t"] = heaviness(s.substructure());
      r["refined_t"] = refined(s);
      r["theta"] = threshold(s);
      r["heavy"] = heavy(s);
    }
    subs.push_back(r);
  }
  j["substructures"] = subs;
  j["valid"] = is_valid(c);
  j["llm"] = is_llm(c);
  return j.dump();
}

// ---------------------------------------------------------------------------

bool LemmaReport::within_bounds() const {
  if (static_cast<double>(two_heavy_edges) > bound_two_heavy) return false;
  if (static_cast<double>(heavy_edge_and_wedge) > bound_heavy_edge_wedge) return false;
  if (static_cast<double>(combination_union) > bound_combination) return false;
  for (const auto& row : combination)
    for (Count c : row)
      if (static_cast<double>(c) > bound_combination_case) return false;
  return true;
}

LemmaReport lemma_counters(const Graph& g, const SamplingParams& params) {
  params.validate();
  const IndexSet I = IndexSet::build(params.T);
  const double T = params.T, d = params.delta, rt = std::sqrt(T), d15 = std::pow(d, 1.5);
  const std::vector<FourCycle> cycles = enumerate_four_cycles(g);
  LemmaReport r;
  r.combination.assign(I.size(), {});
  r.bound_two_heavy = 328 * d * d * T;
  r.bound_heavy_edge_wedge = 145 * d * T;
  r.bound_combination = 576 * d * std::max(1.0, std::log2(T)) * T;
  r.bound_combination_case = 64 * d * T;

  std::vector<Count> node_t(g.num_nodes(), 0);
  for (const FourCycle& a : cycles)
    for (NodeId v : a.nodes) ++node_t[v];
  std::unordered_map<std::uint64_t, Count> edge_t;
  for (const FourCycle& a : cycles)
    for (const Edge& e : a.edges()) ++edge_t[e.key()];

  for (const FourCycle& a : cycles) {
    double tn[4], te[4], tw[4], os[4];
    const auto edges = a.edges();
    for (int i = 0; i < 4; ++i) {
      const auto q = static_cast<std::size_t>(i);
      tn[i] = static_cast<double>(node_t[a.at(i)]);
      te[i] = static_cast<double>(edge_t[edges[q].key()]);  // edge i joins positions i, i+1
      tw[i] = static_cast<double>(onion_width(g, a.at(i + 3), a.at(i + 1)) - 1);  // centered at i
      os[i] = static_cast<double>(onion_size(g, a.at(i), a.at(i + 2)));
    }
    const double heavy_edge = rt / (4 * d * d);
    int n_heavy_edges = 0;
    for (double t : te) n_heavy_edges += t >= heavy_edge;
    if (n_heavy_edges >= 2) ++r.two_heavy_edges;
    bool heavy_wedge = false;
    for (double t : tw) heavy_wedge = heavy_wedge || t >= 1 / d;
    if (n_heavy_edges >= 1 && heavy_wedge) ++r.heavy_edge_and_wedge;

    auto E = [&](int i) { return te[i & 3]; };
    auto W = [&](int i) { return tw[i & 3]; };
    auto N = [&](int i) { return tn[i & 3]; };
    bool any = false;
    for (std::size_t k = 0; k < I.size(); ++k) {
      const double kap = I.value(k);
      std::array<bool, 9> hit{};
      for (int i = 0; i < 4; ++i) {
        // (i) adjacent-center wedges
        for (int s : {1, 3})
          if (W(i) >= kap / (2 * d) && W(i + s) >= rt / (kap * d)) hit[0] = true;
        // (ii) wedge centered at i and the node opposite its center
        if (W(i) >= kap / (2 * d) && N(i + 2) >= T / (kap * d15)) hit[1] = true;
        // (iii) opposite edges
        if (E(i) >= kap * kap / (4 * d * d) && E(i + 2) >= T / (kap * kap * d * d)) hit[2] = true;
        // (iv) edge i=(i,i+1), node v off the edge, wedge through v and the edge
        if (E(i) >= kap * kap / (4 * d * d)) {
          if (N(i + 2) >= T / (kap * d15) && W(i + 1) <= kap / d) hit[3] = true;
          if (N(i + 3) >= T / (kap * d15) && W(i) <= kap / d) hit[3] = true;
        }
        const bool big_node = N(i) >= kap * rt / (2 * d15);
        if (!big_node) continue;
        // (v) adjacent node, light connecting edge
        if (N(i + 1) >= T / (kap * d15) && E(i) <= rt / (d * d)) hit[4] = true;
        if (N(i + 3) >= T / (kap * d15) && E(i + 3) <= rt / (d * d)) hit[4] = true;
        // (vi) opposite node with small onion
        if (N(i + 2) >= T / (kap * d15) && os[i & 3] <= rt / (d * d)) hit[5] = true;
        // (vii), (ix) disjoint edges (i+1,i+2) via wedge at i+1 and (i+2,i+3) via wedge at i+3
        if (E(i + 1) >= T / (kap * kap * d * d) && W(i + 1) <= rt / (kap * d)) hit[6] = true;
        if (E(i + 2) >= T / (kap * kap * d * d) && W(i + 3) <= rt / (kap * d)) hit[6] = true;
        // (viii) the wedge centered opposite
        if (W(i + 2) >= rt / (kap * d)) hit[7] = true;
        if (E(i + 1) >= rt / (d * d) && W(i + 1) <= kap / d) hit[8] = true;
        if (E(i + 2) >= rt / (d * d) && W(i + 3) <= kap / d) hit[8] = true;
      }
      for (std::size_t c = 0; c < 9; ++c) {
        r.combination[k][c] += hit[c];
        any = any || hit[c];
      }
    }
    r.combination_union += any;
  }
  return r;
}

MultiplicityReport llm_multiplicity(ExactModel& model) {
  MultiplicityReport r;
  const double T = model.params().T;
  const double lg = std::max(1.0, std::log2(T));
  r.bound = 3 * model.params().delta * lg * lg * lg * T;
  for (const FourCycle& a : model.cycles()) {
    int llm = 0;
    bool light = false;
    for (const Configuration& c : configurations_of(a, model.index())) {
      light = light || model.is_light(c);
      llm += model.is_llm(c);
    }
    r.cycles_with_light += light;
    r.cycles_with_llm += llm > 0;
    r.cycles_with_multiple += llm > 1;
    r.light_without_llm += light && llm == 0;
  }
  return r;
}

}  // namespace fourcycle
