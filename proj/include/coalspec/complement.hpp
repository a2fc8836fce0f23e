#ifndef COALSPEC_COMPLEMENT_HPP
#define COALSPEC_COMPLEMENT_HPP

#include <string>
#include <vector>

#include "coalspec/coalescing.hpp"
#include "coalspec/matrix.hpp"

namespace coalspec {

// Coefficients c_{k,l} of x^{n-l} in x^k f_k(x). The x^k premultiplication
// matches the cycle-decomposition convention in which unused vertices are
// counted in all of H: p_{H,S} counts them only within H minus S, and the
// two differ by exactly x^{|S|}. With that alignment
//   c_{k,l} = sum_i binomial(|B|-i, k) omega_{i,l-i}
// holds verbatim.
struct CoeffArray {
  int n = 0;
  int set_size = 0;
  std::vector<std::vector<Rational>> c; // c[k][l], 0 <= k <= set_size, 0 <= l <= n
};

CoeffArray extract_coefficients(const FamilyTable &t);

// The constants omega_{i,j}: total scalar weight of the cycle decompositions
// covering i vertices of B and j vertices of its complement (the x-power is
// always n - i - j). omega_{0,0} = 1, the empty decomposition.
struct WeightTable {
  int n = 0;
  int set_size = 0;
  std::vector<std::vector<Rational>> omega; // [i][j], 0 <= i <= set_size, 0 <= j <= n - set_size

  friend bool operator==(const WeightTable &a, const WeightTable &b) {
    return a.n == b.n && a.set_size == b.set_size && a.omega == b.omega;
  }
};

// System matrix for a fixed l: entries binomial(|B|-i, k). For l < |B| the
// unknowns are omega_{0,l}..omega_{l,0} in that column order (determinant
// +-1); for l >= |B| the columns are ordered i = |B|..0, making the matrix
// unit triangular with determinant exactly 1.
RationalMatrix weight_system_matrix(int set_size, int ell);

// Recovers the omega table from the coefficients by solving the per-l
// binomial systems. Unknowns whose j index falls outside 0..n-|B| are solved
// for and then required to be exactly zero; anything else means the input
// was not a genuine family.
WeightTable solve_weights(const CoeffArray &c);

// Direct enumeration oracle for the weight table. Guarded to n <= 10.
WeightTable weights_cycle_oracle(const Graph &h, const std::vector<int> &b, const Rational &q);

// Reconstructs the family of (H, V\B) from the family of (H, B) alone:
//   g'_k(x) = sum_{i,j} binomial(n-|B|-j, k) omega_{i,j} x^{n-i-j},
// then f'_k = g'_k / x^k (exact; anything inexact signals corrupted input).
FamilyTable complement_family(const FamilyTable &t);

struct MainTheoremReport {
  bool families_equal = false;
  bool complement_families_equal = false;
  // The theorem: the two equalities stand or fall together.
  bool holds() const { return families_equal == complement_families_equal; }
};

// Checks both directions of the complement theorem on a concrete pair,
// computing the complement families directly from deletions.
MainTheoremReport verify_main_theorem(const CoalescentPair &p1, const CoalescentPair &p2, const Rational &q);

std::string weight_table_json(const WeightTable &w);

} // namespace coalspec

#endif
