#ifndef COALSPEC_COALESCING_HPP
#define COALSPEC_COALESCING_HPP

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "coalspec/graph.hpp"
#include "coalspec/spectral.hpp"

namespace coalspec {

// Memoized deleted characteristic polynomials of one graph at one q, keyed
// by the vertex bitmask of the deleted set. Subsets reappear across k and
// across two-set tables, so the cache earns its keep. Confine an instance
// to one worker; results are identical to uncached evaluation.
class SubsetPolyCache {
public:
  SubsetPolyCache(const Graph &g, Rational q) : g_(&g), q_(std::move(q)) {}
  const Polynomial &get(std::uint64_t deleted_mask);
  const Graph &graph() const { return *g_; }
  const Rational &q() const { return q_; }

private:
  const Graph *g_;
  Rational q_;
  std::unordered_map<std::uint64_t, Polynomial> memo_;
};

// The polynomials f_k for k = 0..|B| at a fixed q: f_k is the sum of the
// deleted polynomials over all k-subsets of B. f_0 is the plain
// characteristic polynomial; f_k is a sum of binomial(|B|, k) monic
// polynomials of degree n - k.
struct FamilyTable {
  int n = 0;
  int set_size = 0;
  Rational q;
  std::vector<Polynomial> polys; // f_0 .. f_{set_size}

  friend bool operator==(const FamilyTable &a, const FamilyTable &b) {
    return a.n == b.n && a.set_size == b.set_size && a.q == b.q && a.polys == b.polys;
  }
};

FamilyTable family(const Graph &h, const std::vector<int> &b, const Rational &q);
FamilyTable family(SubsetPolyCache &cache, const std::vector<int> &b);

// Characteristic polynomial (rows/columns of t removed) of the coalescence
// of (H, B) with rooted G, assembled from H and G contributions alone:
//   sum_k (p_{G,r})^{|B|-k} (p_G - x p_{G,r})^k  sum_{S in B, |S|=k} p_{H,S u T}.
// Requires t within V(H) and disjoint from B.
Polynomial coalesced_char_poly_formula(const CoalescentPair &pair, const RootedGraph &g, const Rational &q,
                                       const std::vector<int> &t = {});

// The single-vertex case: p_{G,r} p_H + (p_G - x p_{G,r}) p_{H,v}.
Polynomial schwenk_single(const Graph &h, int v, const RootedGraph &g, const Rational &q);

// Closed forms for the star K_{1,ell} rooted at its center:
// p_{G,r} = (x-q)^ell and p_G - x p_{G,r} = ell (x-q)^{ell-1} (q^2 - qx - 1).
std::pair<Polynomial, Polynomial> star_factors(int ell, const Rational &q);

// Equal family tables decide cospectrality of the coalescences for every
// rooted G, in both directions. Tables must share q.
bool coalescing_cospectral(const FamilyTable &a, const FamilyTable &b);

// Sums of p_{H, S u T} over S in B with |S| = k and T in B' with |T| = l,
// for coalescing two different rooted graphs onto two disjoint sets.
struct TwoSetTable {
  int n = 0;
  Rational q;
  int size_b = 0;
  int size_b2 = 0;
  std::vector<std::vector<Polynomial>> polys; // [k][l]

  friend bool operator==(const TwoSetTable &a, const TwoSetTable &b) {
    return a.n == b.n && a.q == b.q && a.size_b == b.size_b && a.size_b2 == b.size_b2 && a.polys == b.polys;
  }
};

TwoSetTable two_set_family(const Graph &h, const std::vector<int> &b, const std::vector<int> &b2,
                           const Rational &q);

struct TwoStepOptions {
  int probe_count = 20;
  std::uint64_t seed = 20220913;
  int probe_max_vertices = 4; // order of each sampled rooted graph
};

struct TwoStepReport {
  bool sets_cospectral = false;     // (H1,B1) ~ (H2,B2)
  bool vertices_cospectral = false; // (H1,{v1}) ~ (H2,{v2})
  bool union_cospectral = false;    // (H1,B1 u {v1}) ~ (H2,B2 u {v2})
  bool hypotheses_hold() const { return sets_cospectral && vertices_cospectral && union_cospectral; }
  int probes_run = 0;
  int probes_passed = 0;
  bool all_probes_cospectral() const { return probes_run > 0 && probes_passed == probes_run; }
};

// Checks the three two-set hypotheses, and when all hold, double-coalesces
// a seeded sample of rooted pairs (G, G-hat) onto (B_i, v_i) and confirms
// the results are cospectral by direct computation.
TwoStepReport twostep_check(const Graph &h1, const std::vector<int> &b1, int v1, const Graph &h2,
                            const std::vector<int> &b2, int v2, const Rational &q,
                            const TwoStepOptions &options = {});

} // namespace coalspec

#endif
