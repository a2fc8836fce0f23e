#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "coalspec/random_graphs.hpp"
#include "coalspec/spectral.hpp"

#include "support.hpp"

using namespace coalspec;
using testsupport::fixture_graphs;
using testsupport::poly;

namespace {

// Test-only third route: cofactor expansion of det(xI - m) over polynomial
// entries. Exponential, for cross-checking small matrices only.
Polynomial char_poly_cofactor(const RationalMatrix &m) {
  const std::size_t n = m.rows;
  std::vector<std::vector<Polynomial>> a(n, std::vector<Polynomial>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      a[i][j] = Polynomial({-m.at(i, j)});
      if (i == j)
        a[i][j] = a[i][j] + Polynomial::x();
    }
  auto det = [&](auto &&self, std::vector<std::size_t> rows, std::vector<std::size_t> cols) -> Polynomial {
    if (rows.empty())
      return Polynomial::one();
    Polynomial acc;
    for (std::size_t c = 0; c < cols.size(); ++c) {
      std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
      std::vector<std::size_t> sub_cols = cols;
      sub_cols.erase(sub_cols.begin() + static_cast<long>(c));
      Polynomial term = a[rows[0]][cols[c]] * self(self, sub_rows, sub_cols);
      acc = (c % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
  };
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i)
    idx[i] = i;
  return det(det, idx, idx);
}

std::vector<Rational> test_q_values() {
  return {Rational(0), Rational(1), Rational(-1), Rational(1, 2)};
}

} // namespace

TEST_CASE("lq_matrix layout") {
  RationalMatrix k2 = lq_matrix(path_graph(2), Rational(1, 2));
  CHECK(k2.at(0, 0) == Rational(1, 2));
  CHECK(k2.at(1, 1) == Rational(1, 2));
  CHECK(k2.at(0, 1) == Rational(1));
  CHECK(k2.at(1, 0) == Rational(1));

  RationalMatrix k1 = lq_matrix(Graph(1, {}), Rational(7));
  CHECK(k1.at(0, 0) == Rational(0));

  RationalMatrix star = lq_matrix(star_graph(3), Rational(1));
  CHECK(star.at(0, 0) == Rational(3));
  for (std::size_t v = 1; v <= 3; ++v) {
    CHECK(star.at(v, v) == Rational(1));
    CHECK(star.at(0, v) == Rational(1));
  }
}

TEST_CASE("char_poly of the 2x2 L_q block is x^2 - 2qx + q^2 - 1") {
  for (const auto &q : test_q_values()) {
    Polynomial expected({q * q - Rational(1), Rational(-2) * q, Rational(1)});
    CHECK(char_poly(lq_matrix(path_graph(2), q)) == expected);
  }
}

TEST_CASE("char_poly conventions") {
  CHECK(char_poly(RationalMatrix(0, 0)) == Polynomial::one());
  CHECK(char_poly(lq_matrix(Graph(1, {}), Rational(5))) == Polynomial::x());
  // L_1 of K_{1,3} = x(x-1)^2(x-4)
  CHECK(char_poly(lq_matrix(star_graph(3), Rational(1))) == poly({0, -4, 9, -6, 1}));
  CHECK_THROWS_AS(char_poly(RationalMatrix(2, 3)), error);
}

TEST_CASE("char_poly agrees with cofactor and interpolation routes") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = rng() % 5;
    RationalMatrix m(n, n);
    for (auto &e : m.entries)
      e = Rational(static_cast<long>(rng() % 13) - 6, 1 + static_cast<long>(rng() % 3));
    Polynomial p = char_poly(m);
    CHECK(p == char_poly_cofactor(m));
    CHECK(p == char_poly_by_interpolation(m));
  }
}

TEST_CASE("Berkowitz and interpolation agree on larger L_q matrices") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 10; ++trial) {
    Graph g = random_graph(rng, draw_int(rng, 8, 12));
    for (const Rational &q : {Rational(1), Rational(-1), Rational(1, 2)}) {
      RationalMatrix m = lq_matrix(g, q);
      CHECK(char_poly(m) == char_poly_by_interpolation(m));
    }
  }
}

TEST_CASE("deleted_char_poly keeps full-graph degrees on the diagonal") {
  // P3, delete the center: two isolated rows, but degrees from the path
  CHECK(deleted_char_poly(path_graph(3), Rational(0), {1}) == poly({0, 0, 1}));
  CHECK(deleted_char_poly(path_graph(3), Rational(1), {1}) == poly({1, -2, 1})); // (x-1)^2
  CHECK(deleted_char_poly(path_graph(3), Rational(0), {0, 1, 2}) == Polynomial::one());
  CHECK(deleted_char_poly(path_graph(3), Rational(0), {}) == poly({0, -2, 0, 1}));
  CHECK_THROWS_AS(deleted_char_poly(path_graph(3), Rational(0), {3}), error);
  CHECK_THROWS_AS(deleted_char_poly(path_graph(3), Rational(0), {1, 1}), error);
}

TEST_CASE("cycle oracle worked examples") {
  CHECK(char_poly_cycle_oracle(path_graph(3), Rational(0), {}) == poly({0, -2, 0, 1}));
  CHECK(char_poly_cycle_oracle(complete_graph(3), Rational(0), {}) == poly({-2, -3, 0, 1}));
  CHECK(char_poly_cycle_oracle(Graph(1, {}), Rational(1, 2), {}) == Polynomial::x());
  CHECK_THROWS_AS(char_poly_cycle_oracle(complete_graph(11), Rational(0), {}), error);
}

TEST_CASE("cycle oracle equals deleted_char_poly on all graphs n <= 4, every S") {
  for (const auto &g : fixture_graphs(4)) {
    const int n = g.vertex_count();
    for (const auto &q : test_q_values())
      for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
        std::vector<int> s;
        for (int v = 0; v < n; ++v)
          if ((mask >> v) & 1u)
            s.push_back(v);
        CHECK(char_poly_cycle_oracle(g, q, s) == deleted_char_poly(g, q, s));
      }
  }
}

TEST_CASE("char_poly of a disjoint union is the product of the parts") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 25; ++trial) {
    Graph a = random_graph(rng, draw_int(rng, 1, 5));
    Graph b = random_graph(rng, draw_int(rng, 1, 5));
    for (const auto &q : test_q_values())
      CHECK(char_poly(lq_matrix(disjoint_union(a, b), q)) ==
            char_poly(lq_matrix(a, q)) * char_poly(lq_matrix(b, q)));
  }
}

TEST_CASE("deleted_char_poly is invariant under automorphism images of S") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 15; ++trial) {
    Graph g = random_graph(rng, 5);
    auto autos = automorphisms(g);
    std::vector<int> s;
    for (int v = 0; v < 5; ++v)
      if (rng() & 1u)
        s.push_back(v);
    const Polynomial base = deleted_char_poly(g, Rational(1), s);
    for (const auto &perm : autos) {
      std::vector<int> image;
      for (int v : s)
        image.push_back(perm[static_cast<std::size_t>(v)]);
      CHECK(deleted_char_poly(g, Rational(1), image) == base);
    }
  }
}

TEST_CASE("char_poly evaluated at q matches det(qI - L_q)") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 25; ++trial) {
    Graph g = random_graph(rng, draw_int(rng, 1, 6));
    for (const auto &q : test_q_values()) {
      RationalMatrix m = lq_matrix(g, q);
      RationalMatrix shifted(m.rows, m.cols);
      for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j)
          shifted.at(i, j) = (i == j ? q : Rational(0)) - m.at(i, j);
      CHECK(char_poly(m).eval(q) == determinant(shifted));
    }
  }
}

TEST_CASE("distance char poly examples") {
  CHECK(distance_char_poly(path_graph(2)) == poly({-1, 0, 1}));
  CHECK(distance_char_poly(path_graph(3)) == poly({-4, -6, 0, 1}));
  CHECK(distance_char_poly(Graph(1, {})) == Polynomial::x());
  CHECK_THROWS_AS(distance_char_poly(disjoint_union(path_graph(2), Graph(1, {}))), error);
}

TEST_CASE("normalized char poly examples") {
  CHECK(normalized_char_poly(path_graph(2)) == poly({-1, 0, 1}));
  CHECK(normalized_char_poly(star_graph(3)) == poly({0, 0, -1, 0, 1}));
  CHECK(normalized_char_poly(complete_bipartite(2, 2)) == poly({0, 0, -1, 0, 1}));
  CHECK_THROWS_AS(normalized_char_poly(disjoint_union(path_graph(2), Graph(1, {}))), error);
}

TEST_CASE("cospectral comparisons") {
  CHECK(cospectral(poly({-1, 0, 1}), poly({-1, 0, 1})));
  CHECK(!cospectral(poly({0, 0, 1}), poly({-1, 0, 1})));
  // the four-vertex signless Laplacian pair: K_{1,3} and K3 + K1
  Graph k3_k1 = disjoint_union(complete_graph(3), Graph(1, {}));
  CHECK(cospectral(char_poly(lq_matrix(star_graph(3), Rational(1))),
                   char_poly(lq_matrix(k3_k1, Rational(1)))));
}

TEST_CASE("char_poly_for dispatches on the matrix kind") {
  Graph p3 = path_graph(3);
  CHECK(char_poly_for(p3, lq_kind{Rational(0)}) == poly({0, -2, 0, 1}));
  CHECK(char_poly_for(p3, distance_kind{}) == poly({-4, -6, 0, 1}));
  CHECK(char_poly_for(p3, normalized_kind{}) == normalized_char_poly(p3));
}
