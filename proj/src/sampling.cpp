#include "fourcycle/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fourcycle/random.hpp"

namespace fourcycle {

IndexSet IndexSet::build(double T) {
  if (!(T >= 1)) throw InputError("the count lower bound T must be >= 1");
  IndexSet s;
  s.T_ = T;
  const double tau = std::pow(T, 0.25);
  int kmax = 0;
  if (tau > 1) kmax = static_cast<int>(std::ceil(std::log2(tau) - 1e-12));
  for (int k = 0; k <= kmax; ++k) s.values_.push_back(std::ldexp(tau, k));
  return s;
}

std::size_t IndexSet::ceil_index(double raw, bool* clamped) const {
  if (clamped) *clamped = false;
  for (std::size_t k = 0; k < values_.size(); ++k)
    if (raw <= values_[k] * (1 + 1e-9)) return k;
  if (clamped) *clamped = true;
  return values_.size() - 1;
}

double SamplingParams::pair_probability() const {
  return c * c / (std::pow(delta, 2 * exponent()) * std::sqrt(T));
}

void SamplingParams::validate() const {
  if (!(T >= 1)) throw InputError("T must be >= 1");
  if (!(delta > 0)) throw InputError("delta must be positive");
  if (!(c > 0)) throw InputError("c must be positive");
}

TierProbabilities probabilities(double kappa, const SamplingParams& params) {
  TierProbabilities t;
  const double scale = params.c / std::pow(params.delta, params.exponent());
  t.p1_pre = scale * kappa / std::sqrt(params.T);
  t.p2_pre = scale / kappa;
  t.p1 = std::min(1.0, t.p1_pre);
  t.p2 = std::min(1.0, t.p2_pre);
  t.p1_saturated = t.p1_pre > 1;
  t.p2_saturated = t.p2_pre > 1;
  return t;
}

int tier(SampleLabel l) {
  switch (l) {
    case SampleLabel::S1: case SampleLabel::R1a: case SampleLabel::R1b:
    case SampleLabel::S1p: case SampleLabel::R1ap: case SampleLabel::R1bp:
    case SampleLabel::Q1a: case SampleLabel::Q1b: case SampleLabel::Q1w:
      return 1;
    case SampleLabel::S2: case SampleLabel::R2a: case SampleLabel::R2b:
    case SampleLabel::S2p: case SampleLabel::R2ap: case SampleLabel::R2bp:
    case SampleLabel::Q2w:
      return 2;
    default:
      return 0;
  }
}

bool is_core(SampleLabel l) { return static_cast<int>(l) <= static_cast<int>(SampleLabel::R2b); }

SampleLabel primed(SampleLabel core) {
  if (!is_core(core)) throw std::logic_error("primed() needs a core label");
  return static_cast<SampleLabel>(static_cast<int>(core) + 6);
}

const char* label_name(SampleLabel l) {
  static const char* names[] = {"S1",  "S2",   "R1a",  "R1b",  "R2a",  "R2b", "S1'", "S2'", "R1a'",
                                "R1b'", "R2a'", "R2b'", "Q1a", "Q1b", "Q1w", "Q2w", "Qedge", "QedgeSq"};
  return names[static_cast<std::size_t>(l)];
}

SampleFamily::SampleFamily(std::uint64_t master_seed, SamplingParams params)
    : seed_(master_seed), params_(params), index_(IndexSet::build(params.T)) {
  params_.validate();
  const std::size_t slots = kLabelCount * index_.size();
  p_.assign(slots, 0.0);
  pre_.assign(slots, 0.0);
  seeds_.resize(slots);
  for (std::size_t l = 0; l < kLabelCount; ++l)
    for (std::size_t k = 0; k < index_.size(); ++k) seeds_[l * index_.size() + k] = derive_seed(seed_, l + 1, k);
  for (std::size_t k = 0; k < index_.size(); ++k) {
    TierProbabilities t = probabilities(index_.value(k), params_);
    for (int l = 0; l < 6; ++l) {
      auto lab = static_cast<SampleLabel>(l);
      set_probability(lab, k, tier(lab) == 1 ? t.p1_pre : t.p2_pre);
    }
  }
}

void SampleFamily::set_probability(SampleLabel l, std::size_t k, double p_pre) {
  if (!(p_pre >= 0)) throw std::invalid_argument("probability must be non-negative");
  pre_[slot(l, k)] = p_pre;
  p_[slot(l, k)] = std::min(1.0, p_pre);
}

bool SampleFamily::any_core_saturated() const {
  for (int l = 0; l < 6; ++l)
    for (std::size_t k = 0; k < index_.size(); ++k)
      if (saturated(static_cast<SampleLabel>(l), k)) return true;
  return false;
}

std::uint64_t SampleFamily::sub_seed(SampleLabel l, std::size_t k) const { return seeds_[slot(l, k)]; }

bool SampleFamily::member(SampleLabel l, std::size_t k, NodeId v) const {
  const std::size_t s = slot(l, k);
  const double p = p_[s];
  if (p >= 1) return true;
  if (p <= 0) return false;
  return unit_interval(mix64(seeds_[s] ^ mix64(v))) < p;
}

bool SampleFamily::edge_member(SampleLabel l, std::size_t k, const Edge& e) const {
  const std::size_t s = slot(l, k);
  const double p = p_[s];
  if (p >= 1) return true;
  if (p <= 0) return false;
  return unit_interval(mix64(seeds_[s] ^ mix64(e.key()))) < p;
}

Shifts Shifts::at(double grid1, std::uint64_t i1, double grid2, std::uint64_t i2, double grid3, std::uint64_t i3) {
  Shifts s;
  s.grid1 = grid1;
  s.grid2 = grid2;
  s.grid3 = grid3;
  s.i1 = i1;
  s.i2 = i2;
  s.i3 = i3;
  s.s1 = shift_value(grid1, i1);
  s.s2 = shift_value(grid2, i2);
  s.s3 = shift_value(grid3, i3);
  return s;
}

std::uint64_t shift_grid_size(double grid) {
  if (!(grid >= 1)) throw std::invalid_argument("shift grid parameter must be >= 1");
  const double base_log = std::log1p(1.0 / (200.0 * grid));
  auto i = static_cast<std::uint64_t>(std::floor(std::log(2.0) / base_log));
  while (i > 0 && shift_value(grid, i) >= 2.0) --i;
  while (shift_value(grid, i + 1) < 2.0) ++i;
  return i + 1;
}

double shift_value(double grid, std::uint64_t i) {
  return std::exp(static_cast<double>(i) * std::log1p(1.0 / (200.0 * grid)));
}

Shifts draw_shifts(std::mt19937_64& rng, double L, double Lp, double Lpp) {
  if (!(L >= 1 && Lp >= 1 && Lpp >= 1)) throw std::invalid_argument("budgets must be >= 1");
  auto pick = [&](double grid) {
    std::uniform_int_distribution<std::uint64_t> d(0, shift_grid_size(grid) - 1);
    return d(rng);
  };
  const std::uint64_t i1 = pick(Lpp), i2 = pick(Lp), i3 = pick(L);
  return Shifts::at(Lpp, i1, Lp, i2, L, i3);
}

double round_epsilon_pow2(double eps) {
  if (!(eps > 0 && eps <= 1)) throw InputError("epsilon must lie in (0,1]");
  return std::exp2(std::floor(std::log2(eps) + 1e-12));
}

double default_delta(Mode mode, double T, double epsilon) {
  const double lg = std::max(1.0, std::log2(T));
  if (mode == Mode::detect) return 1.0 / (2098.0 * lg);
  return round_epsilon_pow2(epsilon) / (2098.0 * lg * lg * lg);
}

double desk_constant(double T, Mode mode, const DeskTuning& tuning) {
  const IndexSet I = IndexSet::build(T);
  SamplingParams unit{T, tuning.delta, 1.0, mode};
  double anchor = 0;
  if (tuning.anchor == DeskAnchor::max_probability) {
    for (double k : I.values()) {
      TierProbabilities t = probabilities(k, unit);
      anchor = std::max({anchor, t.p1_pre, t.p2_pre});
    }
  } else {
    anchor = probabilities(I.floor_value(), unit).p1_pre;
  }
  return tuning.target / anchor;
}

}  // namespace fourcycle

namespace fourcycle {

MembershipCache::MembershipCache(const SampleFamily& fam, std::size_t node_bound, std::size_t labels)
    : fam_(&fam), n_(node_bound), labels_(labels), masks_(node_bound * fam.index().size(), kUnset) {}

std::uint32_t MembershipCache::mask(std::size_t k, NodeId v) {
  if (v >= n_) throw std::out_of_range("node outside membership cache");
  std::uint32_t& m = masks_[k * n_ + v];
  if (m == kUnset) {
    m = 0;
    for (std::size_t l = 0; l < labels_; ++l)
      if (fam_->member(static_cast<SampleLabel>(l), k, v)) m |= 1u << l;
  }
  return m;
}

}  // namespace fourcycle
