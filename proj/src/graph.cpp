#include "coalspec/graph.hpp"

#include <algorithm>
#include <bit>
#include <queue>

#include "json.hpp"

namespace coalspec {

Graph::Graph(int n, const std::vector<std::pair<int, int>> &edges) : n_(n) {
  if (n < 0 || n > max_vertices)
    throw error("graph: vertex count out of range");
  adj_.assign(static_cast<std::size_t>(n), 0);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw error("graph: edge endpoint out of range");
    if (u == v)
      throw error("graph: loop rejected");
    if ((adj_[u] >> v) & 1u)
      throw error("graph: duplicate edge rejected");
    adj_[u] |= std::uint64_t(1) << v;
    adj_[v] |= std::uint64_t(1) << u;
    ++m_;
  }
}

int Graph::degree(int v) const {
  return std::popcount(adj_[static_cast<std::size_t>(v)]);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (has_edge(u, v))
        out.emplace_back(u, v);
  return out;
}

CoalescentPair::CoalescentPair(Graph h, std::vector<int> b) : graph(std::move(h)), set(std::move(b)) {
  std::sort(set.begin(), set.end());
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (set[i] < 0 || set[i] >= graph.vertex_count())
      throw error("coalescent pair: set member out of range");
    if (i > 0 && set[i] == set[i - 1])
      throw error("coalescent pair: duplicate set member");
  }
}

Graph parse_graph6(std::string_view line) {
  if (line.empty())
    throw parse_error("graph6: empty record", 0);
  std::size_t pos = 0;
  if (line[0] == '~')
    throw parse_error("graph6: extended vertex counts not supported", 0);
  int byte = static_cast<unsigned char>(line[0]);
  if (byte < 63 || byte > 126)
    throw parse_error("graph6: byte out of range", 0);
  int n = byte - 63;
  ++pos;
  const int bits = n * (n - 1) / 2;
  const std::size_t expect = pos + static_cast<std::size_t>((bits + 5) / 6);
  if (line.size() != expect)
    throw parse_error("graph6: record length mismatch", line.size() < expect ? line.size() : expect);

  std::vector<std::pair<int, int>> edges;
  int bit_index = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++bit_index) {
      std::size_t at = pos + static_cast<std::size_t>(bit_index / 6);
      int b = static_cast<unsigned char>(line[at]);
      if (b < 63 || b > 126)
        throw parse_error("graph6: byte out of range", at);
      int group = b - 63;
      if ((group >> (5 - bit_index % 6)) & 1)
        edges.emplace_back(u, v);
    }
  }
  // Verify the remaining padding bits are zero.
  for (int i = bit_index; i < 6 * ((bits + 5) / 6); ++i) {
    std::size_t at = pos + static_cast<std::size_t>(i / 6);
    int group = static_cast<unsigned char>(line[at]) - 63;
    if (group < 0 || group > 63)
      throw parse_error("graph6: byte out of range", at);
    if ((group >> (5 - i % 6)) & 1)
      throw parse_error("graph6: nonzero padding bit", at);
  }
  return Graph(n, edges);
}

std::string serialize_graph6(const Graph &g) {
  const int n = g.vertex_count();
  std::string out;
  out.push_back(static_cast<char>(63 + n));
  int group = 0, filled = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      group = (group << 1) | (g.has_edge(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + group));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0)
    out.push_back(static_cast<char>(63 + (group << (6 - filled))));
  return out;
}

Graph parse_edge_json(const std::string &text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception &e) {
    throw error(std::string("edge json: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
    throw error("edge json: expected object with integer \"n\"");
  int n = j["n"].get<int>();
  std::vector<std::pair<int, int>> edges;
  if (j.contains("edges")) {
    if (!j["edges"].is_array())
      throw error("edge json: \"edges\" must be an array");
    for (const auto &e : j["edges"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
        throw error("edge json: each edge must be [u, v]");
      edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
  }
  return Graph(n, edges); // Graph constructor rejects loops/dups/range
}

std::string serialize_edge_json(const Graph &g) {
  nlohmann::json j;
  j["n"] = g.vertex_count();
  j["edges"] = nlohmann::json::array();
  for (auto [u, v] : g.edges())
    j["edges"].push_back({u, v});
  return j.dump();
}

CoalesceResult coalesce(const CoalescentPair &pair, const RootedGraph &g) {
  const int nh = pair.graph.vertex_count();
  const int mg = g.graph.vertex_count();
  std::vector<std::pair<int, int>> edges = pair.graph.edges();
  std::vector<std::vector<int>> maps;
  int next = nh;
  for (int b : pair.set) {
    std::vector<int> map(static_cast<std::size_t>(mg), -1);
    map[static_cast<std::size_t>(g.root)] = b;
    for (int v = 0; v < mg; ++v)
      if (v != g.root)
        map[static_cast<std::size_t>(v)] = next++;
    for (auto [u, v] : g.graph.edges())
      edges.emplace_back(map[static_cast<std::size_t>(u)], map[static_cast<std::size_t>(v)]);
    maps.push_back(std::move(map));
  }
  return CoalesceResult{Graph(next, edges), std::move(maps)};
}

std::vector<std::vector<int>> distances(const Graph &g) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> d(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), -1));
  for (int s = 0; s < n; ++s) {
    auto &row = d[static_cast<std::size_t>(s)];
    row[static_cast<std::size_t>(s)] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v = 0; v < n; ++v) {
        if (g.has_edge(u, v) && row[static_cast<std::size_t>(v)] < 0) {
          row[static_cast<std::size_t>(v)] = row[static_cast<std::size_t>(u)] + 1;
          q.push(v);
        }
      }
    }
    for (int v = 0; v < n; ++v)
      if (row[static_cast<std::size_t>(v)] < 0)
        throw error("distances: graph disconnected, no path " + std::to_string(s) + " -> " + std::to_string(v));
  }
  return d;
}

namespace {

void extend_automorphism(const Graph &g, std::vector<int> &perm, std::vector<bool> &used, int at,
                         std::vector<std::vector<int>> &out) {
  const int n = g.vertex_count();
  if (at == n) {
    out.push_back(perm);
    return;
  }
  for (int img = 0; img < n; ++img) {
    if (used[static_cast<std::size_t>(img)] || g.degree(at) != g.degree(img))
      continue;
    bool ok = true;
    for (int j = 0; j < at && ok; ++j)
      ok = g.has_edge(at, j) == g.has_edge(img, perm[static_cast<std::size_t>(j)]);
    if (!ok)
      continue;
    perm[static_cast<std::size_t>(at)] = img;
    used[static_cast<std::size_t>(img)] = true;
    extend_automorphism(g, perm, used, at + 1, out);
    used[static_cast<std::size_t>(img)] = false;
  }
}

} // namespace

std::vector<std::vector<int>> automorphisms(const Graph &g, int limit) {
  if (g.vertex_count() > limit)
    throw error("automorphisms: graph exceeds limit n <= " + std::to_string(limit));
  std::vector<int> perm(static_cast<std::size_t>(g.vertex_count()));
  std::vector<bool> used(static_cast<std::size_t>(g.vertex_count()), false);
  std::vector<std::vector<int>> out;
  extend_automorphism(g, perm, used, 0, out);
  return out;
}

std::vector<SubsetOrbit> subset_orbits(const Graph &g, int k, int automorphism_limit) {
  const int n = g.vertex_count();
  if (k < 0 || k > n)
    throw error("subset_orbits: size out of range");
  auto autos = automorphisms(g, automorphism_limit);

  std::vector<std::uint64_t> subsets;
  std::vector<int> pick;
  auto gen = [&](auto &&self, int start, int left, std::uint64_t mask) -> void {
    if (left == 0) {
      subsets.push_back(mask);
      return;
    }
    for (int v = start; v <= n - left; ++v)
      self(self, v + 1, left - 1, mask | (std::uint64_t(1) << v));
  };
  gen(gen, 0, k, 0);

  auto to_vec = [](std::uint64_t mask) {
    std::vector<int> out;
    for (int v = 0; mask != 0; ++v, mask >>= 1)
      if (mask & 1u)
        out.push_back(v);
    return out;
  };

  std::vector<bool> seen(subsets.size(), false);
  std::vector<SubsetOrbit> orbits;
  // subsets are generated in lexicographic order of their sorted id lists,
  // so the first unseen subset is its orbit's representative.
  for (std::size_t idx = 0; idx < subsets.size(); ++idx) {
    if (seen[idx])
      continue;
    SubsetOrbit orbit;
    orbit.representative = to_vec(subsets[idx]);
    for (const auto &perm : autos) {
      std::uint64_t image = 0;
      for (int v = 0; v < n; ++v)
        if ((subsets[idx] >> v) & 1u)
          image |= std::uint64_t(1) << perm[static_cast<std::size_t>(v)];
      auto it = std::lower_bound(subsets.begin(), subsets.end(), image,
                                 [&to_vec](std::uint64_t a, std::uint64_t b) { return to_vec(a) < to_vec(b); });
      std::size_t pos = static_cast<std::size_t>(it - subsets.begin());
      if (!seen[pos]) {
        seen[pos] = true;
        orbit.members.push_back(to_vec(image));
      }
    }
    std::sort(orbit.members.begin(), orbit.members.end());
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

Graph induced_subgraph(const Graph &g, const std::vector<int> &vertices) {
  std::vector<int> index(static_cast<std::size_t>(g.vertex_count()), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    int v = vertices[i];
    if (v < 0 || v >= g.vertex_count())
      throw error("induced_subgraph: vertex out of range");
    index[static_cast<std::size_t>(v)] = static_cast<int>(i);
  }
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edges())
    if (index[static_cast<std::size_t>(u)] >= 0 && index[static_cast<std::size_t>(v)] >= 0)
      edges.emplace_back(index[static_cast<std::size_t>(u)], index[static_cast<std::size_t>(v)]);
  return Graph(static_cast<int>(vertices.size()), edges);
}

Graph disjoint_union(const Graph &a, const Graph &b) {
  std::vector<std::pair<int, int>> edges = a.edges();
  for (auto [u, v] : b.edges())
    edges.emplace_back(u + a.vertex_count(), v + a.vertex_count());
  return Graph(a.vertex_count() + b.vertex_count(), edges);
}

std::vector<int> complement_set(int n, const std::vector<int> &set) {
  std::vector<bool> in(static_cast<std::size_t>(n), false);
  for (int v : set)
    in[static_cast<std::size_t>(v)] = true;
  std::vector<int> out;
  for (int v = 0; v < n; ++v)
    if (!in[static_cast<std::size_t>(v)])
      out.push_back(v);
  return out;
}

bool is_tree(const Graph &g) {
  if (g.vertex_count() == 0)
    return false;
  if (g.edge_count() != g.vertex_count() - 1)
    return false;
  try {
    distances(g);
  } catch (const error &) {
    return false;
  }
  return true;
}

Graph path_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v + 1 < n; ++v)
    edges.emplace_back(v, v + 1);
  return Graph(n, edges);
}

Graph cycle_graph(int n) {
  if (n < 3)
    throw error("cycle_graph: need n >= 3");
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < n; ++v)
    edges.emplace_back(std::min(v, (v + 1) % n), std::max(v, (v + 1) % n));
  return Graph(n, edges);
}

Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      edges.emplace_back(u, v);
  return Graph(n, edges);
}

Graph star_graph(int leaves) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v <= leaves; ++v)
    edges.emplace_back(0, v);
  return Graph(leaves + 1, edges);
}

Graph complete_bipartite(int a, int b) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < a; ++u)
    for (int v = a; v < a + b; ++v)
      edges.emplace_back(u, v);
  return Graph(a + b, edges);
}

} // namespace coalspec
