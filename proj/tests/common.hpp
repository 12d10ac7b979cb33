#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "fourcycle/graph.hpp"

namespace testing_support {

using fourcycle::Count;
using fourcycle::Edge;
using fourcycle::FourCycle;
using fourcycle::Graph;
using fourcycle::NodeId;

inline std::vector<Edge> random_edges(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> out;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) out.push_back(Edge::make(static_cast<NodeId>(u), static_cast<NodeId>(v)));
  return out;
}

// Every 4-subset, every one of its three cyclic orders.
inline std::set<FourCycle> brute_cycles(const Graph& g) {
  std::set<FourCycle> out;
  const auto n = static_cast<NodeId>(g.num_nodes());
  for (NodeId a = 0; a < n; ++a)
    for (NodeId b = a + 1; b < n; ++b)
      for (NodeId c = b + 1; c < n; ++c)
        for (NodeId d = c + 1; d < n; ++d) {
          const std::array<std::array<NodeId, 4>, 3> orders{{{a, b, c, d}, {a, b, d, c}, {a, c, b, d}}};
          for (const auto& o : orders)
            if (g.has_edge(o[0], o[1]) && g.has_edge(o[1], o[2]) && g.has_edge(o[2], o[3]) && g.has_edge(o[3], o[0]))
              out.insert(FourCycle::canonical(o[0], o[1], o[2], o[3]));
        }
  return out;
}

inline Count brute_count(const Graph& g) { return brute_cycles(g).size(); }

}  // namespace testing_support
