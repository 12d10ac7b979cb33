#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "fourcycle/graph.hpp"

namespace fourcycle {

enum class Mode { detect, count };

class IndexSet {
 public:
  IndexSet() = default;
  static IndexSet build(double T);

  double T() const { return T_; }
  std::size_t size() const { return values_.size(); }
  double value(std::size_t k) const { return values_.at(k); }
  const std::vector<double>& values() const { return values_; }
  double floor_value() const { return values_.front(); }
  double max_value() const { return values_.back(); }
  // Smallest index whose value is >= raw (relative tolerance 1e-9); clamps to the last index.
  std::size_t ceil_index(double raw, bool* clamped = nullptr) const;

 private:
  double T_ = 0;
  std::vector<double> values_;
};

struct SamplingParams {
  double T = 1;
  double delta = 0.5;
  double c = 1;
  Mode mode = Mode::detect;

  double exponent() const { return mode == Mode::detect ? 1.5 : 3.5; }
  // Pre-clamp product p1*p2, identical for every kappa.
  double pair_probability() const;
  void validate() const;
};

struct TierProbabilities {
  double p1_pre = 0, p2_pre = 0;
  double p1 = 0, p2 = 0;
  bool p1_saturated = false, p2_saturated = false;
};

TierProbabilities probabilities(double kappa, const SamplingParams& params);

enum class SampleLabel : std::uint8_t {
  S1, S2, R1a, R1b, R2a, R2b,
  S1p, S2p, R1ap, R1bp, R2ap, R2bp,
  Q1a, Q1b, Q1w, Q2w,
  Qedge, QedgeSq,
  kCount
};

constexpr std::size_t kLabelCount = static_cast<std::size_t>(SampleLabel::kCount);

// 1 for tier-1 labels, 2 for tier-2 labels, 0 for edge-sampling labels.
int tier(SampleLabel l);
bool is_core(SampleLabel l);
SampleLabel primed(SampleLabel core);
const char* label_name(SampleLabel l);

// Hash-seeded implicit membership for every (label, kappa index).
class SampleFamily {
 public:
  SampleFamily(std::uint64_t master_seed, SamplingParams params);

  std::uint64_t seed() const { return seed_; }
  const SamplingParams& params() const { return params_; }
  const IndexSet& index() const { return index_; }

  void set_probability(SampleLabel l, std::size_t k, double p_pre);
  double probability(SampleLabel l, std::size_t k) const { return p_[slot(l, k)]; }
  double probability_pre(SampleLabel l, std::size_t k) const { return pre_[slot(l, k)]; }
  bool saturated(SampleLabel l, std::size_t k) const { return pre_[slot(l, k)] > 1.0; }
  bool any_core_saturated() const;

  std::uint64_t sub_seed(SampleLabel l, std::size_t k) const;
  bool member(SampleLabel l, std::size_t k, NodeId v) const;
  bool edge_member(SampleLabel l, std::size_t k, const Edge& e) const;

 private:
  std::size_t slot(SampleLabel l, std::size_t k) const {
    return static_cast<std::size_t>(l) * index_.size() + k;
  }

  std::uint64_t seed_;
  SamplingParams params_;
  IndexSet index_;
  std::vector<double> p_, pre_;
  std::vector<std::uint64_t> seeds_;
};

struct Shifts {
  double s1 = 1, s2 = 1, s3 = 1;
  std::uint64_t i1 = 0, i2 = 0, i3 = 0;
  double grid1 = 1, grid2 = 1, grid3 = 1;  // L'', L', L

  static Shifts unit() { return Shifts{}; }
  static Shifts at(double grid1, std::uint64_t i1, double grid2, std::uint64_t i2, double grid3, std::uint64_t i3);
  bool operator==(const Shifts&) const = default;
};

// Number of integers i >= 0 with (1 + 1/(200 grid))^i < 2.
std::uint64_t shift_grid_size(double grid);
double shift_value(double grid, std::uint64_t i);
// s1 on grid L'', s2 on grid L', s3 on grid L.
Shifts draw_shifts(std::mt19937_64& rng, double L, double Lp, double Lpp);

// Profiles.
enum class Profile { paper, desk };

double round_epsilon_pow2(double eps);
double default_delta(Mode mode, double T, double epsilon);

enum class DeskAnchor { max_probability, floor_probability };

struct DeskTuning {
  double delta = 0.5;
  double target = 0.9;
  DeskAnchor anchor = DeskAnchor::max_probability;
};

// The constant c that puts the anchored core probability exactly at tuning.target.
double desk_constant(double T, Mode mode, const DeskTuning& tuning);

}  // namespace fourcycle

namespace fourcycle {

// Lazily evaluated membership bits of the first `labels` labels, per (kappa index, node).
class MembershipCache {
 public:
  MembershipCache(const SampleFamily& fam, std::size_t node_bound, std::size_t labels);
  std::uint32_t mask(std::size_t k, NodeId v);
  bool has(std::size_t k, NodeId v, SampleLabel l) { return (mask(k, v) >> static_cast<unsigned>(l)) & 1u; }

 private:
  const SampleFamily* fam_;
  std::size_t n_;
  std::size_t labels_;
  std::vector<std::uint32_t> masks_;
  static constexpr std::uint32_t kUnset = 0x80000000u;
};

}  // namespace fourcycle
