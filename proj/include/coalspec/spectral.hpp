#ifndef COALSPEC_SPECTRAL_HPP
#define COALSPEC_SPECTRAL_HPP

#include <cstdint>
#include <functional>
#include <variant>
#include <vector>

#include "coalspec/graph.hpp"
#include "coalspec/matrix.hpp"
#include "coalspec/polynomial.hpp"

namespace coalspec {

// Which matrix of a graph to take the spectrum of.
struct lq_kind {
  Rational q; // qD + A: q = 0 adjacency, 1 signless Laplacian, -1 negated Laplacian
};
struct distance_kind {};
struct normalized_kind {};
using MatrixKind = std::variant<lq_kind, distance_kind, normalized_kind>;

// qD + A.
RationalMatrix lq_matrix(const Graph &g, const Rational &q);

// det(xI - m), monic of degree = dimension, via the division-free Berkowitz
// scheme (exact over the rationals, O(n^4)). The 0x0 matrix gives 1.
Polynomial char_poly(const RationalMatrix &m);

// Same polynomial by a second route: exact determinants det(tI - m) at
// t = 0..n and Lagrange interpolation. Kept deliberately independent of
// char_poly for cross-checking.
Polynomial char_poly_by_interpolation(const RationalMatrix &m);

// p_{H,S}: characteristic polynomial of L_q(g) with the rows/columns of s
// removed. The diagonal keeps degrees from the full graph, which is not the
// characteristic polynomial of the deleted subgraph once q != 0.
Polynomial deleted_char_poly(const Graph &g, const Rational &q, const std::vector<int> &s);

// Brute-force oracle for deleted_char_poly: sums weights over all
// vertex-disjoint collections of loops, edges and longer cycles among
// V(g) \ s. Exponential; guarded to n - |s| <= 10.
Polynomial char_poly_cycle_oracle(const Graph &g, const Rational &q, const std::vector<int> &s);

RationalMatrix distance_matrix(const Graph &g);
Polynomial distance_char_poly(const Graph &g);

// Characteristic polynomial of D^{-1}A, which is similar to the normalized
// adjacency D^{-1/2}AD^{-1/2} and so has the same spectrum while staying
// rational. Requires minimum degree >= 1.
Polynomial normalized_char_poly(const Graph &g);

Polynomial char_poly_for(const Graph &g, const MatrixKind &kind);

inline bool cospectral(const Polynomial &p, const Polynomial &r) { return p == r; }

// Cycle-decomposition enumerator shared with the complement-weight oracle.
// Calls visit(scalar, used_mask) once per decomposition among the vertices
// of allowed_mask, where scalar carries the 2-power, the sign and the loop
// factors q*deg_g(v) (degrees in the full graph), and used_mask marks the
// vertices covered by cycles. The x-power is left to the caller.
void for_each_cycle_decomposition(const Graph &g, const Rational &q, std::uint64_t allowed_mask,
                                  const std::function<void(const Rational &, std::uint64_t)> &visit);

} // namespace coalspec

#endif
