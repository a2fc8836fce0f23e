// Regenerates the bundled graph6 corpora: one file per order n holding one
// canonical representative of every isomorphism class of simple graphs on n
// vertices, sorted by edge count then graph6 bytes. Usage:
//   make_corpus <max_n> <output_dir>
// Enumeration is by augmentation: every graph on n vertices arises from some
// graph on n-1 vertices plus a neighborhood for the new vertex, so canonical
// deduplication of the augmented candidates is complete.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numeric>
#include <set>
#include <vector>

#include "coalspec/graph.hpp"

using coalspec::Graph;

namespace {

// Known isomorphism-class counts (1-indexed by n) used as a self-check.
const std::vector<std::size_t> expected_counts = {0, 1, 2, 4, 11, 34, 156, 1044};

std::string canonical_graph6(const Graph &g) {
  const int n = g.vertex_count();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  do {
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges())
      edges.emplace_back(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    std::string s = serialize_graph6(Graph(n, edges));
    if (best.empty() || s < best)
      best = std::move(s);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

} // namespace

int main(int argc, char **argv) {
  if (argc != 3) {
    std::cerr << "usage: make_corpus <max_n> <output_dir>\n";
    return 64;
  }
  const int max_n = std::atoi(argv[1]);
  const std::string out_dir = argv[2];
  if (max_n < 1 || max_n > 7) {
    std::cerr << "make_corpus: max_n must be 1..7\n";
    return 64;
  }

  std::vector<std::string> current = {canonical_graph6(Graph(1, {}))};
  for (int n = 1; n <= max_n; ++n) {
    if (n > 1) {
      std::set<std::string> next;
      for (const auto &line : current) {
        const Graph base = coalspec::parse_graph6(line);
        for (unsigned nbrs = 0; nbrs < (1u << (n - 1)); ++nbrs) {
          auto edges = base.edges();
          for (int v = 0; v < n - 1; ++v)
            if ((nbrs >> v) & 1u)
              edges.emplace_back(v, n - 1);
          next.insert(canonical_graph6(Graph(n, edges)));
        }
      }
      current.assign(next.begin(), next.end());
    }
    if (static_cast<std::size_t>(n) < expected_counts.size() && current.size() != expected_counts[static_cast<std::size_t>(n)]) {
      std::cerr << "make_corpus: n=" << n << " produced " << current.size() << " classes, expected "
                << expected_counts[static_cast<std::size_t>(n)] << "\n";
      return 1;
    }
    std::vector<std::string> sorted = current;
    std::sort(sorted.begin(), sorted.end(), [](const std::string &a, const std::string &b) {
      auto edges = [](const std::string &s) { return coalspec::parse_graph6(s).edge_count(); };
      int ea = edges(a), eb = edges(b);
      return ea != eb ? ea < eb : a < b;
    });
    const std::string path = out_dir + "/graphs_n" + std::to_string(n) + ".g6";
    std::ofstream out(path);
    if (!out) {
      std::cerr << "make_corpus: cannot write " << path << "\n";
      return 1;
    }
    for (const auto &line : sorted)
      out << line << "\n";
    std::cout << path << ": " << sorted.size() << " graphs\n";
  }
  return 0;
}
