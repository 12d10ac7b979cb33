#include "fourcycle/generators.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <set>
#include <sstream>

namespace fourcycle {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw InputError(msg);
}

}  // namespace

NodeId max_node(const std::vector<Edge>& edges) {
  NodeId m = 0;
  for (const Edge& e : edges) m = std::max(m, e.v);
  return m;
}

Generated gen_onion(int k) {
  require(k >= 2, "onion width must be >= 2");
  Generated g = gen_overlap(2, k);
  g.name = "onion:k=" + std::to_string(k);
  return g;
}

Generated gen_overlap(int a, int k, int copies) {
  require(a >= 2 && k >= 2, "overlap needs a, k >= 2");
  require(copies >= 1, "copies must be >= 1");
  Generated g;
  g.name = "overlap:a=" + std::to_string(a) + ",k=" + std::to_string(k);
  if (copies > 1) g.name += ",copies=" + std::to_string(copies);
  const auto block = static_cast<NodeId>(a + k);
  for (int c = 0; c < copies; ++c) {
    const NodeId base = static_cast<NodeId>(c) * block;
    for (int i = 0; i < a; ++i)
      for (int j = 0; j < k; ++j)
        g.edges.push_back(Edge::make(base + static_cast<NodeId>(i), base + static_cast<NodeId>(a + j)));
  }
  g.declared_T = static_cast<Count>(copies) * choose2(static_cast<Count>(a)) * choose2(static_cast<Count>(k));
  return g;
}

Generated gen_heavy_edge(Count T) {
  require(T >= 1, "heavy-edge instance needs T >= 1");
  Generated g;
  g.name = "heavy:T=" + std::to_string(T);
  g.edges.push_back(Edge::make(0, 1));
  for (Count i = 0; i < T; ++i) {
    const auto a = static_cast<NodeId>(2 + 2 * i), b = a + 1;
    g.edges.push_back(Edge::make(0, a));
    g.edges.push_back(Edge::make(a, b));
    g.edges.push_back(Edge::make(b, 1));
  }
  g.declared_T = T;
  g.meta["u"] = 0;
  g.meta["v"] = 1;
  return g;
}

Generated gen_nonmonotone(const NonmonotoneSpec& s) {
  require(s.cycles >= 0 && s.onions >= 0, "counts must be non-negative");
  require(s.onions == 0 || s.width >= 2, "onion width must be >= 2");
  Generated g;
  g.name = "nonmonotone:cycles=" + std::to_string(s.cycles) + ",onions=" + std::to_string(s.onions) +
           ",width=" + std::to_string(s.width);
  NodeId next = 1;
  for (int i = 0; i < s.cycles; ++i) {
    const NodeId a = next++, b = next++, c = next++;
    g.edges.push_back(Edge::make(0, a));
    g.edges.push_back(Edge::make(a, b));
    g.edges.push_back(Edge::make(b, c));
    g.edges.push_back(Edge::make(c, 0));
  }
  for (int j = 0; j < s.onions; ++j) {
    const NodeId hub = next++;
    for (int i = 0; i < s.width; ++i) {
      const NodeId mid = next++;
      g.edges.push_back(Edge::make(0, mid));
      g.edges.push_back(Edge::make(mid, hub));
    }
  }
  g.declared_T = static_cast<Count>(s.cycles) + static_cast<Count>(s.onions) * choose2(static_cast<Count>(s.width));
  g.meta["node"] = 0;
  g.meta["T_param"] = s.T_param;
  g.meta["delta"] = s.delta;
  g.meta["kappa_index_0"] = 0;
  g.meta["kappa_index_1"] = 1;
  g.meta["kappa_index_2"] = 2;
  return g;
}

Generated gen_gnp(int n, double p, std::uint64_t seed) {
  require(n >= 0, "n must be >= 0");
  require(p >= 0 && p <= 1, "p must lie in [0,1]");
  Generated g;
  std::ostringstream name;
  name << "gnp:n=" << n << ",p=" << p << ",seed=" << seed;
  g.name = name.str();
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.edges.push_back(Edge::make(static_cast<NodeId>(u), static_cast<NodeId>(v)));
  if (p == 1.0) {
    const auto nn = static_cast<Count>(n);
    g.declared_T = nn < 4 ? 0 : 3 * (nn * (nn - 1) * (nn - 2) * (nn - 3) / 24);
  }
  if (p == 0.0) g.declared_T = 0;
  return g;
}

Generated gen_random_tree(int n, std::uint64_t seed) {
  require(n >= 1, "tree needs n >= 1");
  Generated g;
  g.name = "tree:n=" + std::to_string(n) + ",seed=" + std::to_string(seed);
  std::mt19937_64 rng(seed);
  for (int v = 1; v < n; ++v) {
    std::uniform_int_distribution<int> parent(0, v - 1);
    g.edges.push_back(Edge::make(static_cast<NodeId>(parent(rng)), static_cast<NodeId>(v)));
  }
  g.declared_T = 0;
  return g;
}

Generated gen_odd_cycle(int n) {
  require(n >= 3 && n % 2 == 1, "odd cycle needs odd n >= 3");
  Generated g;
  g.name = "oddcycle:n=" + std::to_string(n);
  for (int i = 0; i < n; ++i) g.edges.push_back(Edge::make(static_cast<NodeId>(i), static_cast<NodeId>((i + 1) % n)));
  g.declared_T = 0;
  return g;
}

Generated gen_projective_incidence(int q) {
  require(q >= 2, "q must be >= 2");
  for (int d = 2; d * d <= q; ++d) require(q % d != 0, "q must be prime");
  // normalized homogeneous coordinates: first non-zero entry equals 1
  std::vector<std::array<int, 3>> pts;
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) pts.push_back({1, a, b});
  for (int b = 0; b < q; ++b) pts.push_back({0, 1, b});
  pts.push_back({0, 0, 1});
  const auto np = static_cast<NodeId>(pts.size());
  Generated g;
  g.name = "pg:q=" + std::to_string(q);
  for (NodeId i = 0; i < np; ++i)
    for (NodeId j = 0; j < np; ++j) {
      const auto& p = pts[i];
      const auto& l = pts[j];
      if ((p[0] * l[0] + p[1] * l[1] + p[2] * l[2]) % q == 0) g.edges.push_back(Edge::make(i, np + j));
    }
  g.declared_T = 0;
  return g;
}

Generated gen_path(int edges, NodeId first) {
  require(edges >= 0, "path length must be >= 0");
  Generated g;
  g.name = "path:m=" + std::to_string(edges);
  for (int i = 0; i < edges; ++i)
    g.edges.push_back(Edge::make(first + static_cast<NodeId>(i), first + static_cast<NodeId>(i + 1)));
  g.declared_T = 0;
  return g;
}

Generated disjoint_union(const Generated& a, const Generated& b) {
  Generated g;
  g.name = a.name + "+" + b.name;
  g.edges = a.edges;
  const NodeId off = a.edges.empty() ? 0 : max_node(a.edges) + 1;
  for (const Edge& e : b.edges) g.edges.push_back(Edge{e.u + off, e.v + off});
  if (a.declared_T && b.declared_T) g.declared_T = *a.declared_T + *b.declared_T;
  return g;
}

Generated generate(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  const std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (kind == "file") {
    require(!rest.empty(), "file: needs a path");
    EdgeListParse p = read_edge_list(rest);
    Generated g;
    g.name = spec;
    g.edges = std::move(p.edges);
    g.meta["duplicates"] = static_cast<double>(p.duplicates);
    return g;
  }
  std::map<std::string, std::string> kv;
  std::stringstream ss(rest);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    require(eq != std::string::npos, "malformed generator parameter '" + item + "'");
    kv[item.substr(0, eq)] = item.substr(eq + 1);
  }
  std::set<std::string> used;
  auto num = [&](const std::string& key, std::optional<double> fallback = std::nullopt) -> double {
    used.insert(key);
    auto it = kv.find(key);
    if (it == kv.end()) {
      require(fallback.has_value(), "generator '" + kind + "' needs parameter '" + key + "'");
      return *fallback;
    }
    try {
      std::size_t pos = 0;
      const double v = std::stod(it->second, &pos);
      require(pos == it->second.size(), "bad number for '" + key + "'");
      return v;
    } catch (const std::logic_error&) {
      throw InputError("bad number for '" + key + "': " + it->second);
    }
  };
  auto integer = [&](const std::string& key, std::optional<double> fallback = std::nullopt) {
    return static_cast<int>(num(key, fallback));
  };
  Generated g;
  if (kind == "onion") g = gen_onion(integer("k"));
  else if (kind == "overlap") g = gen_overlap(integer("a"), integer("k"), integer("copies", 1));
  else if (kind == "heavy") g = gen_heavy_edge(static_cast<Count>(num("T")));
  else if (kind == "gnp") g = gen_gnp(integer("n"), num("p"), static_cast<std::uint64_t>(num("seed", 1)));
  else if (kind == "nonmonotone") {
    NonmonotoneSpec s;
    s.cycles = integer("cycles", s.cycles);
    s.onions = integer("onions", s.onions);
    s.width = integer("width", s.width);
    g = gen_nonmonotone(s);
  } else if (kind == "tree") g = gen_random_tree(integer("n"), static_cast<std::uint64_t>(num("seed", 1)));
  else if (kind == "oddcycle") g = gen_odd_cycle(integer("n"));
  else if (kind == "pg") g = gen_projective_incidence(integer("q"));
  else if (kind == "path") g = gen_path(integer("m"));
  else throw InputError("unknown generator kind '" + kind + "'");
  for (const auto& [k, _] : kv) require(used.count(k) > 0, "unknown parameter '" + k + "' for generator '" + kind + "'");
  return g;
}

}  // namespace fourcycle
