#include "fourcycle/baseline.hpp"

#include <cmath>

#include "fourcycle/collected.hpp"
#include "fourcycle/random.hpp"

namespace fourcycle {

BaselineResult edge_sampling_estimate(const EdgeStream& stream, double T, std::uint64_t seed, double c) {
  if (!(T >= 1)) throw InputError("T must be >= 1");
  if (!(c > 0)) throw InputError("c must be positive");
  BaselineResult r;
  const double pre = c / std::cbrt(T);
  r.p = std::min(1.0, pre);
  r.saturated = pre >= 1;
  const std::uint64_t s = derive_seed(seed, 0xBA5E);
  CollectedGraph sample;
  for (const Edge& e : stream.open_pass(1)) {
    if (r.p < 1 && unit_interval(mix64(s ^ mix64(e.key()))) >= r.p) continue;
    if (sample.add(e)) r.meter.record_store(1);
  }
  r.sample_size = sample.size();
  r.meter.add_aux(2);
  for (const Edge& e : stream.open_pass(2)) {
    for (NodeId a : sample.neighbors(e.u)) {
      if (a == e.v) continue;
      for (NodeId b : sample.neighbors(a)) {
        if (b == e.u || b == e.v) continue;
        if (sample.has(b, e.v)) ++r.completions;
      }
    }
  }
  r.estimate = static_cast<double>(r.completions) / (4 * r.p * r.p * r.p);
  return r;
}

}  // namespace fourcycle
