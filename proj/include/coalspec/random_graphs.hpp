#ifndef COALSPEC_RANDOM_GRAPHS_HPP
#define COALSPEC_RANDOM_GRAPHS_HPP

#include <random>

#include "coalspec/graph.hpp"

namespace coalspec {

// Seeded graph sampling with a pinned bit-for-bit derivation: results depend
// only on the mt19937_64 stream, never on std::uniform_int_distribution,
// whose output is implementation-defined. Reports built from these samples
// are byte-identical across platforms for a fixed seed.

// Uniform integer in [lo, hi] via modulo on the raw stream.
inline int draw_int(std::mt19937_64 &rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

// Each of the n(n-1)/2 possible edges present with probability 1/2, one
// stream bit per pair in row order (0,1), (0,2), ..., (n-2,n-1).
inline Graph random_graph(std::mt19937_64 &rng, int n) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng() & 1u)
        edges.emplace_back(u, v);
  return Graph(n, edges);
}

// Rejection sampling: redraw the whole graph until connected.
inline Graph random_connected_graph(std::mt19937_64 &rng, int n) {
  for (;;) {
    Graph g = random_graph(rng, n);
    try {
      distances(g);
      return g;
    } catch (const error &) {
    }
  }
}

inline RootedGraph random_rooted_graph(std::mt19937_64 &rng, int n_min, int n_max) {
  int n = draw_int(rng, n_min, n_max);
  Graph g = random_graph(rng, n);
  return RootedGraph(std::move(g), draw_int(rng, 0, n - 1));
}

} // namespace coalspec

#endif
