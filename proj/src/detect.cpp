#include "fourcycle/detect.hpp"

#include <cmath>

#include "fourcycle/random.hpp"

namespace fourcycle {

namespace {

constexpr std::uint32_t bit(SampleLabel l) { return 1u << static_cast<unsigned>(l); }

// Pass-1 categories: E[S1,S2], E[R1b,R2a], E[R2a,R2b], E[R2b,R1a].
bool pass1_pair(std::uint32_t a, std::uint32_t b) {
  auto cross = [&](SampleLabel x, SampleLabel y) {
    return ((a & bit(x)) && (b & bit(y))) || ((a & bit(y)) && (b & bit(x)));
  };
  return cross(SampleLabel::S1, SampleLabel::S2) || cross(SampleLabel::R1b, SampleLabel::R2a) ||
         cross(SampleLabel::R2a, SampleLabel::R2b) || cross(SampleLabel::R2b, SampleLabel::R1a);
}

}  // namespace

CorePasses::CorePasses(const SampleFamily& fam, std::size_t node_bound, SpaceMeter& meter)
    : fam_(&fam), cache_(fam, node_bound, 6), meter_(&meter), stores_(fam.index().size()), pass2_(fam.index().size()) {
  meter_->add_aux(6 * fam.index().size());
}

void CorePasses::pass1(const Edge& e) {
  for (std::size_t k = 0; k < stores_.size(); ++k) {
    if (!pass1_pair(cache_.mask(k, e.u), cache_.mask(k, e.v))) continue;
    if (stores_[k].add(e)) meter_->record_store(1);
  }
}

bool CorePasses::completes(std::size_t k, NodeId u, NodeId v) {
  // u ∈ R1a, v ∈ R1b, a ∈ R2a adjacent to v, b ∈ R2b adjacent to u.
  return closes_cycle(
      stores_[k], u, v, [&](NodeId a) { return in(k, a, SampleLabel::R2a); },
      [&](NodeId b) { return in(k, b, SampleLabel::R2b); });
}

void CorePasses::pass2(const Edge& e) {
  for (std::size_t k = 0; k < stores_.size(); ++k) {
    bool hit = false;
    if (in(k, e.u, SampleLabel::R1a) && in(k, e.v, SampleLabel::R1b)) hit = completes(k, e.u, e.v);
    if (!hit && in(k, e.v, SampleLabel::R1a) && in(k, e.u, SampleLabel::R1b)) hit = completes(k, e.v, e.u);
    if (!hit) continue;
    if (pass2_[k].add(e) && !stores_[k].has(e)) meter_->record_store(1);
  }
}

CollectedGraph CorePasses::union_graph() const {
  CollectedGraph u;
  for (std::size_t k = 0; k < stores_.size(); ++k) {
    u.merge(stores_[k]);
    u.merge(pass2_[k]);
  }
  return u;
}

std::vector<std::size_t> CorePasses::pass1_counts() const {
  std::vector<std::size_t> out;
  for (const auto& s : stores_) out.push_back(s.size());
  return out;
}

std::vector<std::size_t> CorePasses::pass2_counts() const {
  std::vector<std::size_t> out;
  for (const auto& s : pass2_) out.push_back(s.size());
  return out;
}

DetectResult run_detection(const EdgeStream& stream, const DetectParams& params) {
  SamplingParams sp = params.sampling;
  sp.mode = Mode::detect;
  const SampleFamily fam(params.seed, sp);
  DetectResult r;
  r.saturated = fam.any_core_saturated();
  CorePasses core(fam, stream.node_bound(), r.meter);
  auto over = [&] { return params.space_cap > 0 && enforce_space_cap(r.meter, params.space_cap) == CapStatus::aborted; };

  for (const Edge& e : stream.open_pass(1)) {
    core.pass1(e);
    if (over()) {
      r.aborted = true;
      return r;
    }
  }
  for (const Edge& e : stream.open_pass(2)) {
    core.pass2(e);
    if (over()) {
      r.aborted = true;
      return r;
    }
  }
  r.per_kappa_pass1 = core.pass1_counts();
  r.per_kappa_pass2 = core.pass2_counts();
  const CollectedGraph u = core.union_graph();
  r.collected = u.sorted_edges();
  const Graph sub(r.collected);
  const auto cycles = enumerate_four_cycles(sub);
  if (!cycles.empty()) {
    r.found = true;
    r.witness = cycles.front();
  }
  return r;
}

int default_amplification(std::size_t n) {
  if (n < 2) return 1;
  return static_cast<int>(std::ceil(3 * std::log2(static_cast<double>(n)) - 1e-12));
}

double calibrate_space(const EdgeStream& stream, const DetectParams& params, int runs) {
  if (runs <= 0) throw std::invalid_argument("calibration needs at least one run");
  double total = 0;
  for (int i = 0; i < runs; ++i) {
    DetectParams p = params;
    p.space_cap = 0;
    p.seed = derive_seed(params.seed, 0xCA11B, static_cast<std::uint64_t>(i));
    total += static_cast<double>(run_detection(stream, p).meter.peak());
  }
  return total / runs;
}

AmplifiedResult amplified_detection(const EdgeStream& stream, const DetectParams& params) {
  AmplifiedResult out;
  out.runs = std::max(1, params.amplification);
  out.reference_space =
      params.reference_space ? *params.reference_space : calibrate_space(stream, params, params.calibration_runs);
  out.cap = static_cast<std::uint64_t>(std::ceil(params.space_cap_multiplier * std::max(out.reference_space, 1.0)));
  for (int i = 0; i < out.runs; ++i) {
    DetectParams p = params;
    p.seed = derive_seed(params.seed, 0xA3F, static_cast<std::uint64_t>(i));
    p.space_cap = out.cap;
    const DetectResult r = run_detection(stream, p);
    out.peaks.push_back(r.meter.peak());
    if (r.aborted) {
      ++out.aborted;
      continue;
    }
    if (r.found && !out.found) {
      out.found = true;
      out.witness = r.witness;
    }
  }
  return out;
}

}  // namespace fourcycle
