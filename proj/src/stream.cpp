#include "fourcycle/stream.hpp"

#include <algorithm>
#include <random>
#include <unordered_set>

#include "fourcycle/random.hpp"

namespace fourcycle {

void SpaceMeter::record_store(std::int64_t delta) {
  if (delta < 0 && static_cast<std::uint64_t>(-delta) > stored_)
    throw std::logic_error("space meter would become negative");
  stored_ = static_cast<std::uint64_t>(static_cast<std::int64_t>(stored_) + delta);
  peak_ = std::max(peak_, stored_);
}

CapStatus enforce_space_cap(const SpaceMeter& meter, std::uint64_t cap) {
  if (cap == 0) throw std::invalid_argument("space cap must be positive");
  return meter.peak() > cap ? CapStatus::aborted : CapStatus::within;
}

EdgeStream::EdgeStream(std::vector<Edge> edges, std::uint64_t order_seed, bool reshuffle)
    : order_seed_(order_seed), reshuffle_(reshuffle) {
  std::unordered_set<std::uint64_t> seen;
  edges_.reserve(edges.size());
  for (const Edge& raw : edges) {
    Edge e = Edge::make(raw.u, raw.v);
    if (seen.insert(e.key()).second)
      edges_.push_back(e);
    else
      ++duplicates_;
    node_bound_ = std::max<std::size_t>(node_bound_, static_cast<std::size_t>(e.v) + 1);
  }
}

EdgeStream EdgeStream::from_graph(const Graph& g, std::uint64_t order_seed, bool reshuffle) {
  return EdgeStream(g.edges(), order_seed, reshuffle);
}

EdgeStream EdgeStream::from_file(const std::string& path, bool replay_from_disk, std::uint64_t order_seed,
                                 bool reshuffle) {
  EdgeListParse p = read_edge_list(path);
  EdgeStream s(std::move(p.edges), order_seed, reshuffle);
  s.duplicates_ += p.duplicates;
  if (replay_from_disk) s.replay_path_ = path;
  return s;
}

EdgeStream EdgeStream::with_order(std::uint64_t order_seed, bool reshuffle) const {
  EdgeStream s = *this;
  s.order_seed_ = order_seed;
  s.reshuffle_ = reshuffle;
  return s;
}

std::vector<Edge> EdgeStream::open_pass(int pass_index) const {
  if (pass_index < 1) throw std::invalid_argument("pass index starts at 1");
  std::vector<Edge> order;
  if (replay_path_) {
    order = read_edge_list(*replay_path_).edges;
    if (order.size() != edges_.size())
      throw StreamError("stream exhausted mid-pass: expected " + std::to_string(edges_.size()) + " edges, read " +
                        std::to_string(order.size()));
  } else {
    order = edges_;
  }
  if (reshuffle_) {
    std::mt19937_64 rng(derive_seed(order_seed_, 0x5EED, static_cast<std::uint64_t>(pass_index)));
    std::shuffle(order.begin(), order.end(), rng);
  }
  return order;
}

}  // namespace fourcycle
