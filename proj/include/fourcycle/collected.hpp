#pragma once

#include <span>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "fourcycle/graph.hpp"

namespace fourcycle {

// Sparse adjacency over the edges an algorithm has stored.
class CollectedGraph {
 public:
  bool add(const Edge& e);
  bool has(NodeId a, NodeId b) const;
  bool has(const Edge& e) const { return keys_.count(e.key()) > 0; }
  std::span<const NodeId> neighbors(NodeId v) const;
  std::size_t size() const { return keys_.size(); }
  std::vector<Edge> sorted_edges() const;
  void merge(const CollectedGraph& other);

 private:
  std::unordered_map<NodeId, std::vector<NodeId>> adj_;
  std::unordered_set<std::uint64_t> keys_;
};

// Whether some a ∈ N(v), b ∈ N(u) with (a,b) stored closes the cycle u-v-a-b, all four nodes distinct.
template <class AcceptA, class AcceptB>
bool closes_cycle(const CollectedGraph& g, NodeId u, NodeId v, AcceptA&& accept_a, AcceptB&& accept_b) {
  for (NodeId a : g.neighbors(v)) {
    if (a == u || !accept_a(a)) continue;
    for (NodeId b : g.neighbors(u)) {
      if (b == v || b == a || !accept_b(b)) continue;
      if (g.has(a, b)) return true;
    }
  }
  return false;
}

}  // namespace fourcycle
