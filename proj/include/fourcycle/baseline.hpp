#pragma once

#include <cstdint>

#include "fourcycle/stream.hpp"

namespace fourcycle {

struct BaselineResult {
  double estimate = 0;
  double p = 0;
  bool saturated = false;
  Count completions = 0;  // 3-paths closed by an arriving edge
  std::uint64_t sample_size = 0;
  SpaceMeter meter;
};

// Edge sampling at p = min(1, c / T^(1/3)); pass 2 counts sampled 3-paths closed by each edge.
BaselineResult edge_sampling_estimate(const EdgeStream& stream, double T, std::uint64_t seed, double c = 1);

}  // namespace fourcycle
