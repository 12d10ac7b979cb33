#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace fourcycle {

using NodeId = std::uint32_t;
using Count = std::uint64_t;

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Edge {
  NodeId u = 0;
  NodeId v = 0;

  // Normalized so that u < v. Throws InputError for self-loops.
  static Edge make(NodeId a, NodeId b);
  std::uint64_t key() const { return (static_cast<std::uint64_t>(u) << 32) | v; }
  bool contains(NodeId x) const { return x == u || x == v; }
  NodeId other(NodeId x) const { return x == u ? v : u; }
  auto operator<=>(const Edge&) const = default;
};

struct Wedge {
  NodeId u = 0;       // endpoint, u < v
  NodeId center = 0;
  NodeId v = 0;

  static Wedge make(NodeId a, NodeId center, NodeId b);
  auto operator<=>(const Wedge&) const = default;
};

// Nodes (a,b,c,d) denote edges ab, bc, cd, da. Canonical: a is the minimum
// and b < d.
struct FourCycle {
  std::array<NodeId, 4> nodes{};

  static FourCycle canonical(NodeId a, NodeId b, NodeId c, NodeId d);
  NodeId at(int i) const { return nodes[static_cast<std::size_t>(i & 3)]; }
  int position(NodeId v) const;  // -1 if absent
  bool contains(NodeId v) const { return position(v) >= 0; }
  NodeId opposite(NodeId v) const;
  std::array<Edge, 4> edges() const;
  std::array<Wedge, 4> wedges() const;  // wedge i is centered at nodes[i]
  std::array<Edge, 2> opposite_pairs() const;
  bool adjacent(NodeId x, NodeId y) const;
  auto operator<=>(const FourCycle&) const = default;
};

std::ostream& operator<<(std::ostream& os, const FourCycle& c);

struct EdgeListParse {
  std::vector<Edge> edges;     // normalized, file order, duplicates removed
  std::size_t duplicates = 0;  // collapsed duplicate or reversed pairs
  std::size_t lines = 0;
};

// Parses "u v" lines; '#' comments and blank lines are skipped.
EdgeListParse parse_edge_list(std::istream& in);
EdgeListParse read_edge_list(const std::string& path);

class Graph {
 public:
  Graph() = default;
  explicit Graph(std::span<const Edge> edges);
  Graph(std::size_t n, std::span<const Edge> edges);

  std::size_t num_nodes() const { return adj_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  std::size_t duplicates_collapsed() const { return duplicates_; }
  bool contains(NodeId v) const { return v < adj_.size(); }
  std::span<const NodeId> neighbors(NodeId v) const;
  std::size_t degree(NodeId v) const { return neighbors(v).size(); }
  bool has_edge(NodeId a, NodeId b) const;
  const std::vector<Edge>& edges() const { return edges_; }

 private:
  void build(std::size_t n, std::span<const Edge> edges);

  std::vector<std::vector<NodeId>> adj_;
  std::vector<Edge> edges_;
  std::size_t duplicates_ = 0;
};

Count onion_width(const Graph& g, NodeId u, NodeId v);
Count onion_size(const Graph& g, NodeId u, NodeId v);
Count exact_four_cycle_count(const Graph& g);
// Σ_{u<v} os(u,v), exposed for the identity Σ os = 2T.
Count onion_size_sum(const Graph& g);
std::vector<FourCycle> enumerate_four_cycles(const Graph& g);

using Substructure = std::variant<NodeId, Edge, Wedge>;

// Codegree-based heaviness.
Count true_heaviness(const Graph& g, const Substructure& x);
// Same quantity by scanning an explicit cycle list.
Count heaviness_by_enumeration(std::span<const FourCycle> cycles, const Substructure& x);

inline Count choose2(Count k) { return k < 2 ? 0 : k * (k - 1) / 2; }

}  // namespace fourcycle
