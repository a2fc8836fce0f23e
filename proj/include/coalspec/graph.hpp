#ifndef COALSPEC_GRAPH_HPP
#define COALSPEC_GRAPH_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "coalspec/error.hpp"

namespace coalspec {

// Simple undirected graph on vertices 0..n-1. No loops, no multi-edges.
// Immutable after construction; adjacency kept as per-vertex bitmasks,
// which caps n at 62 (plenty: everything downstream works on n <= ~40).
class Graph {
public:
  static constexpr int max_vertices = 62;

  Graph() = default;
  Graph(int n, const std::vector<std::pair<int, int>> &edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return m_; }
  bool has_edge(int u, int v) const { return u != v && (adj_[u] >> v) & 1u; }
  int degree(int v) const;
  std::uint64_t neighbors(int v) const { return adj_[v]; }
  // Sorted list of (u, v) with u < v.
  std::vector<std::pair<int, int>> edges() const;

  friend bool operator==(const Graph &a, const Graph &b) { return a.n_ == b.n_ && a.adj_ == b.adj_; }

private:
  int n_ = 0;
  int m_ = 0;
  std::vector<std::uint64_t> adj_;
};

struct RootedGraph {
  Graph graph;
  int root = 0;
  RootedGraph() = default;
  RootedGraph(Graph g, int r) : graph(std::move(g)), root(r) {
    if (root < 0 || root >= graph.vertex_count())
      throw error("rooted graph: root out of range");
  }
};

// A graph H together with the attachment set B (sorted, duplicate-free).
// B may be empty or all of V(H).
struct CoalescentPair {
  Graph graph;
  std::vector<int> set;
  CoalescentPair() = default;
  CoalescentPair(Graph h, std::vector<int> b);
};

// graph6, standard >=63 offset encoding, one record per line, no nauty
// ">>graph6<<" header support.
Graph parse_graph6(std::string_view line);
std::string serialize_graph6(const Graph &g);

// Edge-list JSON: {"n": int, "edges": [[u,v],...]}. Rejects loops,
// duplicates and out-of-range endpoints.
Graph parse_edge_json(const std::string &text);
std::string serialize_edge_json(const Graph &g);

// Result of coalescing: H keeps its vertex ids; the non-root vertices of
// each copy of G are appended in ascending original order, copies ordered
// by sorted B. copy_maps[c][v] is the new id of G's vertex v in copy c
// (the root maps to the attachment vertex).
struct CoalesceResult {
  Graph graph;
  std::vector<std::vector<int>> copy_maps;
};

CoalesceResult coalesce(const CoalescentPair &pair, const RootedGraph &g);

// All-pairs hop counts; requires a connected graph (the error names an
// unreachable pair).
std::vector<std::vector<int>> distances(const Graph &g);

// Every adjacency-preserving vertex permutation, found by brute force with
// degree pruning. Guarded by `limit` since the list can be factorial.
std::vector<std::vector<int>> automorphisms(const Graph &g, int limit = 10);

// Equivalence classes of k-subsets under the automorphism group. Each class
// lists its member subsets sorted; the first member is the lexicographically
// least representative.
struct SubsetOrbit {
  std::vector<int> representative;
  std::vector<std::vector<int>> members;
};
std::vector<SubsetOrbit> subset_orbits(const Graph &g, int k, int automorphism_limit = 10);

Graph induced_subgraph(const Graph &g, const std::vector<int> &vertices);
Graph disjoint_union(const Graph &a, const Graph &b);
std::vector<int> complement_set(int n, const std::vector<int> &set);
bool is_tree(const Graph &g);

// Small named families used by probes and demos.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph star_graph(int leaves);               // K_{1,leaves}, center 0
Graph complete_bipartite(int a, int b);

} // namespace coalspec

#endif
