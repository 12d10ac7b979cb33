#include "fourcycle/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace fourcycle {

namespace {

constexpr std::uint32_t bit(SampleLabel l) { return 1u << static_cast<unsigned>(l); }

bool cross(std::uint32_t a, std::uint32_t b, SampleLabel x, SampleLabel y) {
  return ((a & bit(x)) && (b & bit(y))) || ((a & bit(y)) && (b & bit(x)));
}

constexpr double kGridCap = 1e12;

double log2_at_least_1(double x) { return std::max(1.0, std::log2(x)); }

}  // namespace

const char* oracle_kind_name(OracleKind k) {
  switch (k) {
    case OracleKind::llm: return "llm";
    case OracleKind::node: return "node";
    case OracleKind::edge_sampling: return "edge_sampling";
    case OracleKind::edge_node_sampling: return "edge_node_sampling";
    case OracleKind::validity: return "validity";
    default: return "wedge";
  }
}

double base_query_budget(const SamplingParams& p) {
  const double q = p.pair_probability();
  const double v = 400.0 * std::log2(1.0 / (p.delta * p.delta)) * p.T * log2_at_least_1(p.T) * q * q;
  return std::max(1.0, std::ceil(v));
}

OracleBudget oracle_budget(const SamplingParams& p, double node_mult) {
  OracleBudget b;
  b.L = base_query_budget(p);
  const IndexSet I = IndexSet::build(p.T);
  double worst = 1;
  for (double k : I.values()) {
    const TierProbabilities t = probabilities(k, p);
    const double p1 = std::min(1.0, node_mult * t.p1_pre), p2 = std::min(1.0, node_mult * t.p2_pre);
    // a tier-1 query node sees the others at p1' p2'^2, a tier-2 one at p1'^2 p2'
    worst = std::max(worst, threshold(SubKind::node, 1, 0, k, p) * p1 * p2 * p2);
    worst = std::max(worst, threshold(SubKind::node, 0, 1, k, p) * p1 * p1 * p2);
  }
  b.cap_V = std::ceil(2 * b.L * worst);
  b.Lp = 4 * b.L + 4 * b.cap_V;
  b.Lpp = 4 * (b.L + b.Lp);
  b.eps_V = 1 / (600 * b.L);
  b.eps_E = 1 / (600 * b.Lp);
  b.eps_W = 1 / (600 * b.Lpp);
  return b;
}

OracleTuning paper_tuning(const SamplingParams& p, std::size_t n) {
  const double L = base_query_budget(p);
  OracleTuning t;
  t.node_mult = 201 * L * (600 * L) * (600 * L);
  const OracleBudget b = oracle_budget(p, t.node_mult);
  const double lgn = log2_at_least_1(static_cast<double>(n));
  t.edge_node_mult = 201 * b.Lp / (b.eps_E * b.eps_E);
  t.wedge_mult = lgn / (b.eps_W * b.eps_W);
  t.edge_sample_mult = lgn / (b.eps_E * b.eps_E);
  return t;
}

Shifts draw_oracle_shifts(std::mt19937_64& rng, const OracleBudget& b) {
  return draw_shifts(rng, std::min(b.L, kGridCap), std::min(b.Lp, kGridCap), std::min(b.Lpp, kGridCap));
}

void configure_oracle_samples(SampleFamily& fam, const OracleTuning& tuning) {
  const SamplingParams& sp = fam.params();
  const IndexSet& I = fam.index();
  for (std::size_t k = 0; k < I.size(); ++k) {
    const TierProbabilities t = probabilities(I.value(k), sp);
    for (int l = 0; l < 6; ++l) {
      const auto core = static_cast<SampleLabel>(l);
      fam.set_probability(primed(core), k, tuning.node_mult * (tier(core) == 1 ? t.p1_pre : t.p2_pre));
    }
    fam.set_probability(SampleLabel::Q1a, k, tuning.edge_node_mult * t.p1_pre);
    fam.set_probability(SampleLabel::Q1b, k, tuning.edge_node_mult * t.p1_pre);
    fam.set_probability(SampleLabel::Q1w, k, tuning.wedge_mult * t.p1_pre);
    fam.set_probability(SampleLabel::Q2w, k, tuning.wedge_mult * t.p2_pre);
    fam.set_probability(SampleLabel::Qedge, k, tuning.edge_sample_mult * t.p1_pre * t.p2_pre);
    fam.set_probability(SampleLabel::QedgeSq, k, tuning.edge_sample_mult * t.p2_pre * t.p2_pre);
  }
}

// ---------------------------------------------------------------------------

class StreamingOracles::Scope {
 public:
  Scope(StreamingOracles& o, OracleKind k) : o_(o) {
    const OracleKind caller = o_.stack_.empty() ? OracleKind::llm : o_.stack_.back();
    o_.calls_.insert({caller, k});
    o_.stack_.push_back(k);
  }
  ~Scope() { o_.stack_.pop_back(); }

 private:
  StreamingOracles& o_;
};

StreamingOracles::StreamingOracles(const SampleFamily& fam, const CorePasses& core, std::size_t node_bound,
                                   SpaceMeter& meter, Shifts shifts, OracleBudget budget)
    : fam_(&fam), core_(&core), cache_(fam, node_bound, 16), meter_(&meter), shifts_(shifts), budget_(budget) {
  const IndexSet& I = fam.index();
  const double d2 = fam.params().delta * fam.params().delta;
  anchor_levels_.resize(I.size());
  for (std::size_t q = 0; q < I.size(); ++q)
    for (std::size_t k = q; k < I.size(); ++k)
      if (I.value(k) <= I.value(q) / d2 * (1 + 1e-9)) anchor_levels_[q].push_back(k);
  levels_.resize(I.size());
  meter_->add_aux(10 * I.size() + 2);
}

bool StreamingOracles::anchor(std::size_t level, NodeId v) {
  for (std::size_t k : anchor_levels_[level])
    if (mask(k, v) & 0x3Fu) return true;
  return false;
}

void StreamingOracles::store(CollectedGraph& g, const Edge& e, std::uint64_t& counter) {
  if (g.add(e)) {
    meter_->record_store(1);
    ++counter;
  }
}

bool StreamingOracles::main_known(NodeId a, NodeId b, std::size_t level) const {
  if (levels_[level].node.has(a, b)) return true;
  for (std::size_t k = 0; k < core_->kappas(); ++k)
    if (core_->store(k).has(a, b)) return true;
  return false;
}

void StreamingOracles::pass1(const Edge& e) {
  if (fam_->edge_member(SampleLabel::Qedge, 0, e)) store(sample_, e, stats_.stored_sample);
  for (std::size_t q = 0; q < levels_.size(); ++q) {
    Level& lv = levels_[q];
    const std::uint32_t ma = mask(q, e.u), mb = mask(q, e.v);
    const bool aa = anchor(q, e.u), ab = anchor(q, e.v);
    const bool pa = ma & kPrimedBits, pb = mb & kPrimedBits;

    bool node = (aa && pb) || (ab && pa);
    if (!node && pa && pb)
      node = cross(ma, mb, SampleLabel::S1p, SampleLabel::S2p) || cross(ma, mb, SampleLabel::R1bp, SampleLabel::R2ap) ||
             cross(ma, mb, SampleLabel::R2ap, SampleLabel::R2bp) || cross(ma, mb, SampleLabel::R2bp, SampleLabel::R1ap);
    if (node) store(lv.node, e, stats_.stored_node);

    if (((aa || pa) && (mb & kQ1Bits)) || ((ab || pb) && (ma & kQ1Bits))) store(lv.q1, e, stats_.stored_edge);

    const bool va = aa || pa || (ma & kQ1Bits), vb = ab || pb || (mb & kQ1Bits);
    if ((va && (mb & kQwBits)) || (vb && (ma & kQwBits))) store(lv.wedge, e, stats_.stored_wedge);

    if (fam_->edge_member(SampleLabel::QedgeSq, q, e)) store(lv.sample_sq, e, stats_.stored_sample);
  }
}

void StreamingOracles::pass2(const Edge& e) {
  for (std::size_t q = 0; q < levels_.size(); ++q) {
    Level& lv = levels_[q];
    const std::uint32_t ma = mask(q, e.u), mb = mask(q, e.v);
    if (cross(ma, mb, SampleLabel::R1ap, SampleLabel::R1bp) && !lv.node.has(e)) {
      auto any = [](NodeId) { return true; };
      if (closes_cycle(lv.node, e.u, e.v, any, any)) store(lv.node, e, stats_.stored_node);
    }
    if (cross(ma, mb, SampleLabel::Q1a, SampleLabel::Q1b) && !lv.q1.has(e)) {
      bool closes = false;
      for (NodeId a : lv.q1.neighbors(e.v)) {
        if (a == e.u) continue;
        for (NodeId b : lv.q1.neighbors(e.u)) {
          if (b == e.v || b == a) continue;
          if (main_known(a, b, q)) {
            closes = true;
            break;
          }
        }
        if (closes) break;
      }
      if (closes) store(lv.q1, e, stats_.stored_edge);
    }
  }
}

std::vector<Configuration> StreamingOracles::node_configurations(NodeId v, std::size_t level, SampleLabel label) {
  const CollectedGraph& g = levels_[level].node;
  std::vector<Configuration> out;
  for (NodeId a : g.neighbors(v))
    for (NodeId w : g.neighbors(a)) {
      if (w == v) continue;
      for (NodeId b : g.neighbors(w)) {
        if (b == a || b == v || b < a || !g.has(v, b)) continue;
        const FourCycle cyc = FourCycle::canonical(v, a, w, b);
        for (int i = 0; i < 4; ++i)
          for (int j = i + 1; j < 4; ++j) {
            const Configuration c = Configuration::make(cyc, level, cyc.at(i), cyc.at(j));
            bool ok = true;
            for (const auto& [u, lab] : labeling_of(c)) {
              if (u == v) ok = ok && lab == label;
              else ok = ok && fam_->member(primed(lab), level, u);
            }
            if (ok) out.push_back(c);
          }
      }
    }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void StreamingOracles::plan(const std::vector<Configuration>& realized) {
  const SamplingParams& sp = fam_->params();
  const IndexSet& I = fam_->index();
  auto add_cycle = [&](const FourCycle& a) {
    for (const Edge& e : a.edges()) z_edges_.insert(e.key());
  };
  for (const Configuration& c : realized) {
    std::vector<Configuration> queried{c};
    for (std::size_t j : lower_kappas(c.kappa, sp, I)) {
      Configuration lower = c;
      lower.kappa = j;
      queried.push_back(lower);
    }
    if (regime_of(c.kappa, sp, I) == Regime::middle) {
      const auto [xp, yp] = c.complement();
      queried.push_back(Configuration::make(c.cycle, c.kappa, xp, yp));
    }
    add_cycle(c.cycle);
    for (const Configuration& qc : queried)
      for (const auto& [v, lab] : labeling_of(qc))
        for (const Configuration& oc : node_configurations(v, qc.kappa, lab)) add_cycle(oc.cycle);
  }
  for (std::uint64_t k : z_edges_) {
    z_nodes_.insert(static_cast<NodeId>(k >> 32));
    z_nodes_.insert(static_cast<NodeId>(k & 0xFFFFFFFFu));
  }
  for (const Edge& e : sample_.sorted_edges()) {
    sample_nodes_.insert(e.u);
    sample_nodes_.insert(e.v);
  }
  for (const Level& lv : levels_)
    for (const Edge& e : lv.sample_sq.sorted_edges()) {
      sample_nodes_.insert(e.u);
      sample_nodes_.insert(e.v);
    }
  planned_ = true;
}

void StreamingOracles::pass3(const Edge& e) {
  if (!planned_) throw ContractViolation("pass 3 requires a query plan");
  const bool zu = z_nodes_.count(e.u) > 0, zv = z_nodes_.count(e.v) > 0;
  if (!zu && !zv) return;
  const bool su = sample_nodes_.count(e.u) > 0, sv = sample_nodes_.count(e.v) > 0;
  if ((zu && sv) || (zv && su)) store(pass3_, e, stats_.stored_pass3);
}

// ---------------------------------------------------------------------------

Count StreamingOracles::wedge_count(const LabeledSubstructure& ls) {
  const std::size_t q = ls.kappa;
  const NodeId u = ls.nodes[0], c = ls.nodes[1], w = ls.nodes[2];
  for (NodeId x : {u, w})
    if (!anchor(q, x) && !primed_any(q, x) && !q1_any(q, x))
      throw ContractViolation("wedge oracle queried on an endpoint outside the sampled sets");
  const SampleLabel sel = ls.tier1() == 2 ? SampleLabel::Q2w : SampleLabel::Q1w;
  const CollectedGraph& g = levels_[q].wedge;
  Count n = 0;
  for (NodeId z : g.neighbors(u))
    if (z != c && z != w && (mask(q, z) & bit(sel)) && g.has(w, z)) ++n;
  return n;
}

bool StreamingOracles::wedge_heavy(const LabeledSubstructure& ls) {
  Scope s(*this, OracleKind::wedge);
  ++stats_.wedge_queries;
  const SampleLabel sel = ls.tier1() == 2 ? SampleLabel::Q2w : SampleLabel::Q1w;
  const double p = fam_->probability(sel, ls.kappa);
  const double th = fourcycle::threshold(ls, fam_->params(), fam_->index());
  const bool h = static_cast<double>(wedge_count(ls)) > p * shifts_.s1 * th;
  stats_.wedge_heavy += h;
  return h;
}

Count StreamingOracles::edge_sample_count(const Edge& e, SampleLabel sample, std::size_t level) {
  if (!planned_) throw ContractViolation("edge-sampling oracle queried before the query plan");
  if (!z_edges_.count(e.key())) throw ContractViolation("edge-sampling oracle queried on an unplanned edge");
  const CollectedGraph& s = sample == SampleLabel::Qedge ? sample_ : levels_[level].sample_sq;
  Count n = 0;
  for (NodeId a : pass3_.neighbors(e.v)) {
    if (a == e.u) continue;
    for (NodeId b : pass3_.neighbors(e.u)) {
      if (b == e.v || b == a) continue;
      if (s.has(a, b)) ++n;
    }
  }
  return n;
}

Count StreamingOracles::edge_node_count(const LabeledSubstructure& ls) {
  const std::size_t q = ls.kappa;
  NodeId a = ls.nodes[0], b = ls.nodes[1];
  if (ls.labels[0] == SampleLabel::R2b && ls.labels[1] == SampleLabel::R2a) std::swap(a, b);
  else if (!(ls.labels[0] == SampleLabel::R2a && ls.labels[1] == SampleLabel::R2b))
    throw std::logic_error("node-sampling edge oracle expects an (R2a, R2b) edge");
  for (NodeId x : {a, b})
    if (!anchor(q, x) && !primed_any(q, x)) throw ContractViolation("edge oracle queried on an unsampled endpoint");
  const CollectedGraph& g = levels_[q].q1;
  Count n = 0;
  for (NodeId x : g.neighbors(b)) {
    if (x == a || !(mask(q, x) & bit(SampleLabel::Q1a))) continue;
    for (NodeId y : g.neighbors(a)) {
      if (y == b || y <= x || !(mask(q, y) & bit(SampleLabel::Q1b)) || !g.has(x, y)) continue;
      const Configuration c = Configuration::make(FourCycle::canonical(x, y, a, b), q, x, y);
      const auto subs = substructures_of(c);
      bool light = true;
      for (std::size_t i = 8; i < 12 && light; ++i) light = !heavy(subs[i]);
      n += light;
    }
  }
  return n;
}

bool StreamingOracles::edge_heavy(const LabeledSubstructure& ls) {
  const Edge e{ls.nodes[0], ls.nodes[1]};
  const double th = fourcycle::threshold(ls, fam_->params(), fam_->index());
  bool h = false;
  if (ls.tier2() == 2) {
    Scope s(*this, OracleKind::edge_node_sampling);
    ++stats_.edge_queries;
    const double p = fam_->probability(SampleLabel::Q1a, ls.kappa) * fam_->probability(SampleLabel::Q1b, ls.kappa);
    h = static_cast<double>(edge_node_count(ls)) > p * shifts_.s2 * th;
  } else {
    Scope s(*this, OracleKind::edge_sampling);
    ++stats_.edge_queries;
    const SampleLabel sample = ls.tier1() == 2 ? SampleLabel::QedgeSq : SampleLabel::Qedge;
    const std::size_t slot = sample == SampleLabel::Qedge ? 0 : ls.kappa;
    const double p = fam_->probability(sample, slot);
    h = static_cast<double>(edge_sample_count(e, sample, ls.kappa)) > p * shifts_.s2 * th;
  }
  stats_.edge_heavy += h;
  return h;
}

double StreamingOracles::primed_product(const Configuration& c, NodeId v) {
  double p = 1;
  for (const auto& [u, lab] : labeling_of(c))
    if (u != v) p *= fam_->probability(primed(lab), c.kappa);
  return p;
}

Count StreamingOracles::node_count(const LabeledSubstructure& ls) {
  const NodeId v = ls.nodes[0];
  if (!anchor(ls.kappa, v)) throw ContractViolation("node oracle queried on a node outside the sampled sets");
  Count n = 0;
  for (const Configuration& c : node_configurations(v, ls.kappa, ls.labels[0])) {
    ++stats_.node_configurations;
    const auto subs = substructures_of(c);
    bool ok = true;
    for (std::size_t i = 8; i < 12 && ok; ++i) ok = !heavy(subs[i]);
    if (ok) ok = config_valid(c, *this);
    for (std::size_t i = 4; i < 8 && ok; ++i) ok = !heavy(subs[i]);
    n += ok;
  }
  return n;
}

bool StreamingOracles::node_heavy(const LabeledSubstructure& ls) {
  Scope s(*this, OracleKind::node);
  ++stats_.node_queries;
  const std::size_t q = ls.kappa;
  const double p1 = fam_->probability(SampleLabel::S1p, q), p2 = fam_->probability(SampleLabel::S2p, q);
  const double prod = tier(ls.labels[0]) == 1 ? p1 * p2 * p2 : p1 * p1 * p2;
  const double th = fourcycle::threshold(ls, fam_->params(), fam_->index());
  const bool h = static_cast<double>(node_count(ls)) > prod * shifts_.s3 * th;
  stats_.node_heavy += h;
  return h;
}

bool StreamingOracles::heavy(const LabeledSubstructure& ls) {
  if (ls.kind == SubKind::pair) throw std::logic_error("opposite pairs are not queried");
  if (auto it = memo_.find(ls); it != memo_.end()) return it->second;
  bool h = false;
  switch (ls.kind) {
    case SubKind::wedge: h = wedge_heavy(ls); break;
    case SubKind::edge: h = edge_heavy(ls); break;
    default: h = node_heavy(ls); break;
  }
  memo_.emplace(ls, h);
  check_budget();
  return h;
}

bool StreamingOracles::valid(const Edge& e) {
  if (auto it = valid_memo_.find(e.key()); it != valid_memo_.end()) return it->second;
  Scope s(*this, OracleKind::validity);
  ++stats_.validity_queries;
  const double p = fam_->probability(SampleLabel::Qedge, 0);
  const bool v = static_cast<double>(edge_sample_count(e, SampleLabel::Qedge, 0)) > p * validity_threshold(fam_->params());
  stats_.invalid += !v;
  valid_memo_.emplace(e.key(), v);
  check_budget();
  return v;
}

void StreamingOracles::check_budget() {
  if (static_cast<double>(stats_.node_queries) > budget_.L ||
      static_cast<double>(stats_.edge_queries + stats_.validity_queries) > budget_.Lp ||
      static_cast<double>(stats_.wedge_queries) > budget_.Lpp)
    stats_.degraded = true;
}

bool StreamingOracles::call_graph_acyclic() const {
  std::map<OracleKind, std::vector<OracleKind>> adj;
  for (const auto& [a, b] : calls_) adj[a].push_back(b);
  std::map<OracleKind, int> state;
  std::function<bool(OracleKind)> dfs = [&](OracleKind k) {
    state[k] = 1;
    for (OracleKind n : adj[k]) {
      if (state[n] == 1) return false;
      if (state[n] == 0 && !dfs(n)) return false;
    }
    state[k] = 2;
    return true;
  };
  for (const auto& [k, _] : adj)
    if (state[k] == 0 && !dfs(k)) return false;
  return true;
}

std::vector<LabeledSubstructure> StreamingOracles::queried() const {
  std::vector<LabeledSubstructure> out;
  out.reserve(memo_.size());
  for (const auto& [ls, _] : memo_) out.push_back(ls);
  std::sort(out.begin(), out.end(), [](const LabeledSubstructure& a, const LabeledSubstructure& b) {
    return std::tie(a.kind, a.kappa, a.nodes, a.labels) < std::tie(b.kind, b.kappa, b.nodes, b.labels);
  });
  return out;
}

// ---------------------------------------------------------------------------

std::vector<std::uint64_t> bad_grid_points(double t, double theta, double grid, double eps) {
  std::vector<std::uint64_t> out;
  if (theta <= 0 || t <= 0) return out;
  const std::uint64_t size = shift_grid_size(grid);
  // s in [t/((1+eps) theta), t/((1-eps) theta)]
  const double lo = t / ((1 + eps) * theta), hi = eps < 1 ? t / ((1 - eps) * theta) : INFINITY;
  const double step = std::log1p(1.0 / (200.0 * grid));
  const double start = std::floor(std::log(std::max(lo, 1e-300)) / step) - 2;
  for (double i = std::max(0.0, start); i < static_cast<double>(size); i += 1) {
    const double s = shift_value(grid, static_cast<std::uint64_t>(i));
    if (s > hi) break;
    if (s >= lo) out.push_back(static_cast<std::uint64_t>(i));
  }
  return out;
}

MarginAudit shift_margin_audit(ExactModel& model, const std::vector<LabeledSubstructure>& queried,
                               const MarginWidths& eps) {
  MarginAudit r;
  const Shifts& s = model.shifts();
  const double grids[3] = {s.grid1, s.grid2, s.grid3};
  for (int i = 0; i < 3; ++i) r.grid_size[i] = shift_grid_size(grids[i]);
  std::set<std::uint64_t> bad[3];
  for (const LabeledSubstructure& ls : queried) {
    if (ls.kind == SubKind::pair) continue;
    const int g = ls.kind == SubKind::wedge ? 0 : ls.kind == SubKind::edge ? 1 : 2;
    MarginEntry m;
    m.ls = ls;
    m.refined = model.refined(ls);
    m.theta = model.threshold(ls);
    m.shift = shift_factor(ls.kind, s);
    m.eps = g == 0 ? eps.wedge : g == 1 ? eps.edge : eps.node;
    const double t = static_cast<double>(m.refined);
    m.bad = t >= (1 - m.eps) * m.shift * m.theta && t <= (1 + m.eps) * m.shift * m.theta;
    const auto pts = bad_grid_points(t, m.theta, grids[g], m.eps);
    m.bad_points = pts.size();
    bad[g].insert(pts.begin(), pts.end());
    r.bad_now += m.bad;
    r.max_bad_points = std::max(r.max_bad_points, m.bad_points);
    r.entries.push_back(m);
  }
  for (int i = 0; i < 3; ++i) r.distinct_bad_points[i] = bad[i].size();
  return r;
}

MarginAudit shift_margin_audit(ExactModel& model, const MarginWidths& eps) {
  std::vector<LabeledSubstructure> all;
  std::unordered_set<LabeledSubstructure, LabeledSubstructureHash> seen;
  for (const FourCycle& a : model.cycles())
    for (const Configuration& c : configurations_of(a, model.index()))
      for (const LabeledSubstructure& ls : substructures_of(c))
        if (ls.kind != SubKind::pair && seen.insert(ls).second) all.push_back(ls);
  return shift_margin_audit(model, all, eps);
}

}  // namespace fourcycle
