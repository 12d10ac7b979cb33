#include "fourcycle/collected.hpp"

#include <algorithm>

namespace fourcycle {

bool CollectedGraph::add(const Edge& e) {
  if (!keys_.insert(e.key()).second) return false;
  adj_[e.u].push_back(e.v);
  adj_[e.v].push_back(e.u);
  return true;
}

bool CollectedGraph::has(NodeId a, NodeId b) const {
  if (a == b) return false;
  return keys_.count(Edge::make(a, b).key()) > 0;
}

std::span<const NodeId> CollectedGraph::neighbors(NodeId v) const {
  auto it = adj_.find(v);
  if (it == adj_.end()) return {};
  return it->second;
}

std::vector<Edge> CollectedGraph::sorted_edges() const {
  std::vector<Edge> out;
  out.reserve(keys_.size());
  for (std::uint64_t k : keys_) out.push_back(Edge{static_cast<NodeId>(k >> 32), static_cast<NodeId>(k & 0xFFFFFFFFu)});
  std::sort(out.begin(), out.end());
  return out;
}

void CollectedGraph::merge(const CollectedGraph& other) {
  for (const Edge& e : other.sorted_edges()) add(e);
}

}  // namespace fourcycle
