#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fourcycle/graph.hpp"

namespace fourcycle {

struct Generated {
  std::string name;
  std::vector<Edge> edges;
  std::optional<Count> declared_T;  // exact four-cycle count when known in closed form
  std::map<std::string, double> meta;

  Graph graph() const { return Graph(edges); }
};

// K_{2,k}.
Generated gen_onion(int k);
// `copies` disjoint copies of K_{a,k}.
Generated gen_overlap(int a, int k, int copies = 1);
// Edge (0,1) plus T disjoint paths 0 - a_i - b_i - 1.
Generated gen_heavy_edge(Count T);

// Node 0 on `cycles` edge-disjoint four-cycles and on `onions` onions of width `width` with private hubs.
struct NonmonotoneSpec {
  int cycles = 30;
  int onions = 2;
  int width = 10;
  // Parameters under which (0, kappa, S1) is heavy, light, heavy at kappa indices 0, 1, 2 with unit shifts.
  double T_param = 17;
  double delta = 0.5;
};
Generated gen_nonmonotone(const NonmonotoneSpec& spec);

Generated gen_gnp(int n, double p, std::uint64_t seed);

// Four-cycle-free families.
Generated gen_random_tree(int n, std::uint64_t seed);
Generated gen_odd_cycle(int n);
// Point-line incidence graph of the projective plane over GF(q), q prime.
Generated gen_projective_incidence(int q);
// A path on `edges` edges starting at node `first`.
Generated gen_path(int edges, NodeId first = 0);

// Node ids of `b` shifted past those of `a`.
Generated disjoint_union(const Generated& a, const Generated& b);
NodeId max_node(const std::vector<Edge>& edges);

// onion:k=32, overlap:a=8,k=8[,copies=2], heavy:T=1000, gnp:n=200,p=0.05,seed=7,
// nonmonotone:cycles=30,onions=2,width=10, tree:n=50,seed=1, oddcycle:n=9, pg:q=3, path:m=10,
// file:<path>. Unknown kinds or keys raise InputError.
Generated generate(const std::string& spec);

}  // namespace fourcycle
