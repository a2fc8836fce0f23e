#ifndef COALSPEC_TESTS_SUPPORT_HPP
#define COALSPEC_TESTS_SUPPORT_HPP

#include <fstream>
#include <string>
#include <vector>

#include "coalspec/graph.hpp"
#include "coalspec/polynomial.hpp"

namespace testsupport {

using coalspec::Graph;
using coalspec::Polynomial;
using coalspec::Rational;

// Integer-coefficient polynomial, lowest power first: poly({0,-2,0,1}) is x^3 - 2x.
inline Polynomial poly(std::vector<long> coeffs) {
  std::vector<Rational> r(coeffs.begin(), coeffs.end());
  return Polynomial(std::move(r));
}

inline std::vector<std::string> read_lines(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("cannot open " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r')
      line.pop_back();
    if (!line.empty())
      lines.push_back(line);
  }
  return lines;
}

inline std::string fixture(const std::string &name) {
  return std::string(TESTS_DATA_DIR) + "/" + name;
}

// All bundled isomorphism-class representatives with <= max_n vertices.
inline std::vector<Graph> fixture_graphs(int max_n) {
  std::vector<Graph> graphs;
  for (int n = 1; n <= max_n; ++n)
    for (const auto &line : read_lines(fixture("graphs_n" + std::to_string(n) + ".g6")))
      graphs.push_back(coalspec::parse_graph6(line));
  return graphs;
}

} // namespace testsupport

#endif
