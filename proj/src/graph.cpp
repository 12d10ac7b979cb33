#include "fourcycle/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_set>

namespace fourcycle {

Edge Edge::make(NodeId a, NodeId b) {
  if (a == b) throw InputError("self-loop on node " + std::to_string(a));
  return a < b ? Edge{a, b} : Edge{b, a};
}

Wedge Wedge::make(NodeId a, NodeId center, NodeId b) {
  if (a == b || a == center || b == center) throw InputError("degenerate wedge");
  return a < b ? Wedge{a, center, b} : Wedge{b, center, a};
}

FourCycle FourCycle::canonical(NodeId a, NodeId b, NodeId c, NodeId d) {
  std::array<NodeId, 4> r{a, b, c, d};
  auto it = std::min_element(r.begin(), r.end());
  std::rotate(r.begin(), it, r.end());
  if (r[3] < r[1]) std::swap(r[1], r[3]);
  return FourCycle{r};
}

int FourCycle::position(NodeId v) const {
  for (int i = 0; i < 4; ++i)
    if (nodes[static_cast<std::size_t>(i)] == v) return i;
  return -1;
}

NodeId FourCycle::opposite(NodeId v) const {
  int i = position(v);
  if (i < 0) throw std::logic_error("node not on cycle");
  return at(i + 2);
}

std::array<Edge, 4> FourCycle::edges() const {
  std::array<Edge, 4> e;
  for (int i = 0; i < 4; ++i) e[static_cast<std::size_t>(i)] = Edge::make(at(i), at(i + 1));
  return e;
}

std::array<Wedge, 4> FourCycle::wedges() const {
  std::array<Wedge, 4> w;
  for (int i = 0; i < 4; ++i) w[static_cast<std::size_t>(i)] = Wedge::make(at(i + 3), at(i), at(i + 1));
  return w;
}

std::array<Edge, 2> FourCycle::opposite_pairs() const {
  return {Edge::make(nodes[0], nodes[2]), Edge::make(nodes[1], nodes[3])};
}

bool FourCycle::adjacent(NodeId x, NodeId y) const {
  int i = position(x), j = position(y);
  if (i < 0 || j < 0 || i == j) return false;
  return ((i - j + 4) % 4) % 2 == 1;
}

std::ostream& operator<<(std::ostream& os, const FourCycle& c) {
  return os << '(' << c.nodes[0] << ',' << c.nodes[1] << ',' << c.nodes[2] << ',' << c.nodes[3] << ')';
}

namespace {

bool parse_id(std::string_view tok, NodeId& out) {
  std::uint64_t v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || p != tok.data() + tok.size() || v > 0xFFFFFFFEull) return false;
  out = static_cast<NodeId>(v);
  return true;
}

}  // namespace

EdgeListParse parse_edge_list(std::istream& in) {
  EdgeListParse out;
  std::unordered_set<std::uint64_t> seen;
  std::string line;
  while (std::getline(in, line)) {
    ++out.lines;
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream ls(line);
    std::string a, b, extra;
    ls >> a >> b;
    NodeId u = 0, v = 0;
    if (b.empty() || (ls >> extra) || !parse_id(a, u) || !parse_id(b, v))
      throw InputError("line " + std::to_string(out.lines) + ": expected two non-negative integer ids");
    if (u == v) throw InputError("line " + std::to_string(out.lines) + ": self-loop");
    Edge e = Edge::make(u, v);
    if (seen.insert(e.key()).second)
      out.edges.push_back(e);
    else
      ++out.duplicates;
  }
  return out;
}

EdgeListParse read_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  return parse_edge_list(in);
}

Graph::Graph(std::span<const Edge> edges) {
  NodeId mx = 0;
  bool any = false;
  for (const Edge& e : edges) {
    mx = std::max({mx, e.u, e.v});
    any = true;
  }
  build(any ? static_cast<std::size_t>(mx) + 1 : 0, edges);
}

Graph::Graph(std::size_t n, std::span<const Edge> edges) { build(n, edges); }

void Graph::build(std::size_t n, std::span<const Edge> edges) {
  adj_.assign(n, {});
  std::vector<Edge> norm;
  norm.reserve(edges.size());
  for (const Edge& raw : edges) {
    Edge e = Edge::make(raw.u, raw.v);
    if (e.v >= n) throw InputError("edge endpoint " + std::to_string(e.v) + " outside node range");
    norm.push_back(e);
  }
  std::sort(norm.begin(), norm.end());
  auto last = std::unique(norm.begin(), norm.end());
  duplicates_ = static_cast<std::size_t>(norm.end() - last);
  norm.erase(last, norm.end());
  edges_ = std::move(norm);
  for (const Edge& e : edges_) {
    adj_[e.u].push_back(e.v);
    adj_[e.v].push_back(e.u);
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());
}

std::span<const NodeId> Graph::neighbors(NodeId v) const {
  if (!contains(v)) throw InputError("unknown node id " + std::to_string(v));
  return adj_[v];
}

bool Graph::has_edge(NodeId a, NodeId b) const {
  if (!contains(a) || !contains(b) || a == b) return false;
  const auto& na = adj_[a].size() <= adj_[b].size() ? adj_[a] : adj_[b];
  NodeId target = adj_[a].size() <= adj_[b].size() ? b : a;
  return std::binary_search(na.begin(), na.end(), target);
}

Count onion_width(const Graph& g, NodeId u, NodeId v) {
  if (!g.contains(u) || !g.contains(v)) throw InputError("unknown node id");
  if (u == v) throw InputError("onion width needs distinct nodes");
  auto a = g.neighbors(u), b = g.neighbors(v);
  Count c = 0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      ++c;
      ++i;
      ++j;
    }
  }
  return c;
}

Count onion_size(const Graph& g, NodeId u, NodeId v) { return choose2(onion_width(g, u, v)); }

namespace {

// Visits, for every u, the codegrees ow(u,w) with w > u.
template <class F>
void for_each_codegree(const Graph& g, F&& f) {
  const std::size_t n = g.num_nodes();
  std::vector<Count> cnt(n, 0);
  std::vector<NodeId> touched;
  for (NodeId u = 0; u < n; ++u) {
    touched.clear();
    for (NodeId m : g.neighbors(u))
      for (NodeId w : g.neighbors(m)) {
        if (w <= u) continue;
        if (cnt[w]++ == 0) touched.push_back(w);
      }
    for (NodeId w : touched) {
      f(u, w, cnt[w]);
      cnt[w] = 0;
    }
  }
}

}  // namespace

Count onion_size_sum(const Graph& g) {
  Count s = 0;
  for_each_codegree(g, [&](NodeId, NodeId, Count ow) { s += choose2(ow); });
  return s;
}

Count exact_four_cycle_count(const Graph& g) { return onion_size_sum(g) / 2; }

std::vector<FourCycle> enumerate_four_cycles(const Graph& g) {
  std::vector<FourCycle> out;
  const std::size_t n = g.num_nodes();
  std::vector<std::vector<NodeId>> mids(n);
  std::vector<NodeId> touched;
  for (NodeId a = 0; a < n; ++a) {
    touched.clear();
    for (NodeId b : g.neighbors(a)) {
      if (b < a) continue;
      for (NodeId c : g.neighbors(b)) {
        if (c <= a) continue;
        if (mids[c].empty()) touched.push_back(c);
        mids[c].push_back(b);
      }
    }
    std::sort(touched.begin(), touched.end());
    for (NodeId c : touched) {
      auto& ms = mids[c];
      std::sort(ms.begin(), ms.end());
      for (std::size_t i = 0; i < ms.size(); ++i)
        for (std::size_t j = i + 1; j < ms.size(); ++j) out.push_back(FourCycle{{a, ms[i], c, ms[j]}});
      ms.clear();
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Count true_heaviness(const Graph& g, const Substructure& x) {
  if (const NodeId* v = std::get_if<NodeId>(&x)) {
    if (!g.contains(*v)) throw InputError("unknown node id");
    const std::size_t n = g.num_nodes();
    std::vector<Count> cnt(n, 0);
    for (NodeId m : g.neighbors(*v))
      for (NodeId w : g.neighbors(m))
        if (w != *v) ++cnt[w];
    Count t = 0;
    for (Count c : cnt) t += choose2(c);
    return t;
  }
  if (const Edge* e = std::get_if<Edge>(&x)) {
    if (!g.has_edge(e->u, e->v)) throw InputError("edge not in graph");
    Count t = 0;
    for (NodeId a : g.neighbors(e->v)) {
      if (a == e->u) continue;
      t += onion_width(g, e->u, a) - 1;  // v is always a common neighbor
    }
    return t;
  }
  const Wedge& w = std::get<Wedge>(x);
  if (!g.has_edge(w.u, w.center) || !g.has_edge(w.center, w.v)) throw InputError("wedge not in graph");
  return onion_width(g, w.u, w.v) - 1;
}

Count heaviness_by_enumeration(std::span<const FourCycle> cycles, const Substructure& x) {
  Count t = 0;
  for (const FourCycle& c : cycles) {
    bool hit = false;
    if (const NodeId* v = std::get_if<NodeId>(&x)) {
      hit = c.contains(*v);
    } else if (const Edge* e = std::get_if<Edge>(&x)) {
      for (const Edge& f : c.edges()) hit = hit || f == *e;
    } else {
      const Wedge& w = std::get<Wedge>(x);
      for (const Wedge& f : c.wedges()) hit = hit || f == w;
    }
    t += hit ? 1 : 0;
  }
  return t;
}

}  // namespace fourcycle
