#include "fourcycle/count.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "fourcycle/random.hpp"

namespace fourcycle {

std::vector<Configuration> realized_configuration_scan(CorePasses& core) {
  std::vector<Configuration> out;
  for (std::size_t k = 0; k < core.kappas(); ++k) {
    const CollectedGraph& g = core.store(k);
    auto has = [&](NodeId v, SampleLabel l) { return core.in(k, v, l); };

    // opposite pairs: x, y in S1 and the other two in S2, all four edges in E[S1,S2]
    for (const Edge& e : g.sorted_edges()) {
      for (NodeId x : {e.u, e.v}) {
        const NodeId a = e.other(x);
        if (!has(x, SampleLabel::S1) || !has(a, SampleLabel::S2)) continue;
        for (NodeId d : g.neighbors(x)) {
          if (d <= a || !has(d, SampleLabel::S2)) continue;
          for (NodeId y : g.neighbors(a)) {
            if (y <= x || y == d || !has(y, SampleLabel::S1) || !g.has(y, d)) continue;
            out.push_back(Configuration::make(FourCycle::canonical(x, a, y, d), k, x, y));
          }
        }
      }
    }

    // adjacent pairs: (x,y) completed in pass 2 with x in R1a, y in R1b
    for (const Edge& e : core.completions(k).sorted_edges()) {
      const NodeId x = e.u, y = e.v;
      if (!has(x, SampleLabel::R1a) || !has(y, SampleLabel::R1b)) continue;
      for (NodeId a : g.neighbors(y)) {
        if (a == x || !has(a, SampleLabel::R2a)) continue;
        for (NodeId b : g.neighbors(x)) {
          if (b == y || b == a || !has(b, SampleLabel::R2b) || !g.has(a, b)) continue;
          out.push_back(Configuration::make(FourCycle::canonical(x, y, a, b), k, x, y));
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

bool same_params(const SamplingParams& a, const SamplingParams& b) {
  return a.T == b.T && a.delta == b.delta && a.c == b.c && a.mode == b.mode;
}

}  // namespace

ExactModel& ReferenceCache::get(const SamplingParams& p, const Shifts& s) {
  for (auto& [key, model] : models_)
    if (same_params(key.first, p) && key.second == s) return *model;
  if (models_.size() >= 64) models_.erase(models_.begin());
  models_.emplace_back(std::pair{p, s}, std::make_unique<ExactModel>(*g_, p, s));
  return *models_.back().second;
}

Shifts shifts_for_run(const CountParams& params) {
  if (params.shifts) return *params.shifts;
  SamplingParams sp = params.sampling;
  sp.mode = Mode::count;
  std::mt19937_64 rng(derive_seed(params.seed, 0x5317));
  return draw_oracle_shifts(rng, oracle_budget(sp, params.tuning.node_mult));
}

CountResult run_counting(const EdgeStream& stream, const CountParams& params, ReferenceCache* reference) {
  SamplingParams sp = params.sampling;
  sp.mode = Mode::count;
  sp.validate();
  SampleFamily fam(params.seed, sp);
  const bool streaming = params.oracle == OracleMode::streaming;
  if (streaming) configure_oracle_samples(fam, params.tuning);

  CountResult r;
  r.saturated = fam.any_core_saturated();
  r.shifts = shifts_for_run(params);
  r.p = sp.pair_probability();

  CorePasses core(fam, stream.node_bound(), r.meter);
  std::unique_ptr<StreamingOracles> orc;
  if (streaming)
    orc = std::make_unique<StreamingOracles>(fam, core, stream.node_bound(), r.meter, r.shifts,
                                             oracle_budget(sp, params.tuning.node_mult));

  for (const Edge& e : stream.open_pass(1)) {
    core.pass1(e);
    if (orc) orc->pass1(e);
  }
  for (const Edge& e : stream.open_pass(2)) {
    core.pass2(e);
    if (orc) orc->pass2(e);
  }
  r.realized = realized_configuration_scan(core);

  if (orc) {
    orc->plan(r.realized);
    for (const Edge& e : stream.open_pass(3)) orc->pass3(e);
    for (const Configuration& c : r.realized)
      if (is_llm_with(c, *orc, sp, fam.index())) r.accepted.push_back(c);
    r.oracle_stats = orc->stats();
    r.queried = orc->queried();
    r.degraded = r.oracle_stats.degraded;
  } else if (!r.realized.empty()) {
    std::optional<Graph> local;
    std::optional<ReferenceCache> local_cache;
    if (!reference) {
      local.emplace(stream.to_graph());
      local_cache.emplace(*local);
      reference = &*local_cache;
    }
    ExactModel& model = reference->get(sp, r.shifts);
    for (const Configuration& c : r.realized)
      if (model.is_llm(c)) r.accepted.push_back(c);
  }
  r.X = r.accepted.size();
  r.estimate = static_cast<double>(r.X) / (r.p * r.p);
  return r;
}

double median_of(std::vector<double> v) {
  if (v.empty()) throw std::invalid_argument("median of an empty set");
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : (v[n / 2 - 1] + v[n / 2]) / 2;
}

MedianResult median_estimate(const EdgeStream& stream, const CountParams& params, ReferenceCache* reference) {
  if (params.median_runs < 1) throw std::invalid_argument("median_runs must be >= 1");
  MedianResult m;
  std::optional<Graph> local;
  std::optional<ReferenceCache> local_cache;
  if (!reference && params.oracle == OracleMode::reference) {
    local.emplace(stream.to_graph());
    local_cache.emplace(*local);
    reference = &*local_cache;
  }
  const bool capped = params.space_cap_multiplier > 0;
  if (capped) {
    if (params.reference_space) {
      m.reference_space = *params.reference_space;
    } else {
      const int runs = std::max(1, params.calibration_runs);
      double total = 0;
      for (int i = 0; i < runs; ++i) {
        CountParams p = params;
        p.seed = derive_seed(params.seed, 0xCA1, static_cast<std::uint64_t>(i));
        total += static_cast<double>(run_counting(stream, p, reference).meter.peak());
      }
      m.reference_space = total / runs;
    }
    m.cap = static_cast<std::uint64_t>(std::ceil(params.space_cap_multiplier * std::max(1.0, m.reference_space)));
  }
  for (int i = 0; i < params.median_runs; ++i) {
    CountParams p = params;
    p.seed = derive_seed(params.seed, 0x3ED, static_cast<std::uint64_t>(i));
    const CountResult r = run_counting(stream, p, reference);
    m.peaks.push_back(r.meter.peak());
    if (capped && r.meter.peak() > m.cap) {
      ++m.aborted;
      continue;
    }
    m.estimates.push_back(r.estimate);
    m.X.push_back(r.X);
    m.saturated.push_back(r.saturated);
  }
  m.ok = !m.estimates.empty() && 2 * m.aborted <= params.median_runs;
  if (m.ok) m.estimate = median_of(m.estimates);
  return m;
}

}  // namespace fourcycle
