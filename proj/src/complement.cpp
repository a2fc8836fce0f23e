#include "coalspec/complement.hpp"

#include <bit>

#include "json.hpp"

namespace coalspec {

CoeffArray extract_coefficients(const FamilyTable &t) {
  CoeffArray out;
  out.n = t.n;
  out.set_size = t.set_size;
  out.c.assign(static_cast<std::size_t>(t.set_size) + 1,
               std::vector<Rational>(static_cast<std::size_t>(t.n) + 1));
  for (int k = 0; k <= t.set_size; ++k) {
    const Polynomial shifted = t.polys[static_cast<std::size_t>(k)].shifted_up(static_cast<std::size_t>(k));
    for (int l = 0; l <= t.n; ++l)
      out.c[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)] =
          shifted.coeff(static_cast<std::size_t>(t.n - l));
  }
  return out;
}

RationalMatrix weight_system_matrix(int set_size, int ell) {
  const int dim = (ell < set_size ? ell : set_size) + 1;
  RationalMatrix m(static_cast<std::size_t>(dim), static_cast<std::size_t>(dim));
  for (int k = 0; k < dim; ++k)
    for (int col = 0; col < dim; ++col) {
      // l < |B|: columns follow the unknown order omega_{0,l}..omega_{l,0};
      // l >= |B|: columns run i = |B| down to 0, unit triangular.
      int i = ell < set_size ? col : set_size - col;
      m.at(static_cast<std::size_t>(k), static_cast<std::size_t>(col)) = Rational(binomial(set_size - i, k));
    }
  return m;
}

WeightTable solve_weights(const CoeffArray &c) {
  const int n = c.n, size_b = c.set_size;
  WeightTable w;
  w.n = n;
  w.set_size = size_b;
  w.omega.assign(static_cast<std::size_t>(size_b) + 1,
                 std::vector<Rational>(static_cast<std::size_t>(n - size_b) + 1));
  for (int ell = 0; ell <= n; ++ell) {
    const int dim = (ell < size_b ? ell : size_b) + 1;
    RationalMatrix m = weight_system_matrix(size_b, ell);
    std::vector<Rational> rhs(static_cast<std::size_t>(dim));
    for (int k = 0; k < dim; ++k)
      rhs[static_cast<std::size_t>(k)] = c.c[static_cast<std::size_t>(k)][static_cast<std::size_t>(ell)];
    std::vector<Rational> sol = solve_linear(m, rhs); // singular would contradict the +-1 determinants
    for (int col = 0; col < dim; ++col) {
      const int i = ell < size_b ? col : size_b - col;
      const int j = ell - i;
      if (j < 0 || j > n - size_b) {
        if (!sol[static_cast<std::size_t>(col)].is_zero())
          throw error("solve_weights: nonzero out-of-range omega(" + std::to_string(i) + "," +
                      std::to_string(j) + "); input is not a genuine family");
        continue;
      }
      w.omega[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = sol[static_cast<std::size_t>(col)];
    }
  }
  return w;
}

WeightTable weights_cycle_oracle(const Graph &h, const std::vector<int> &b, const Rational &q) {
  const int n = h.vertex_count();
  if (n > 10)
    throw error("weights_cycle_oracle: more than 10 vertices");
  std::uint64_t bmask = 0;
  for (int v : b) {
    if (v < 0 || v >= n)
      throw error("weights_cycle_oracle: set member out of range");
    bmask |= std::uint64_t(1) << v;
  }
  WeightTable w;
  w.n = n;
  w.set_size = static_cast<int>(b.size());
  w.omega.assign(static_cast<std::size_t>(w.set_size) + 1,
                 std::vector<Rational>(static_cast<std::size_t>(n - w.set_size) + 1));
  const std::uint64_t all = n == 0 ? 0 : (~std::uint64_t(0) >> (64 - n));
  for_each_cycle_decomposition(h, q, all, [&](const Rational &scalar, std::uint64_t used) {
    const int i = std::popcount(used & bmask);
    const int j = std::popcount(used & ~bmask);
    w.omega[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] += scalar;
  });
  return w;
}

FamilyTable complement_family(const FamilyTable &t) {
  const int n = t.n, size_b = t.set_size;
  const WeightTable w = solve_weights(extract_coefficients(t));
  FamilyTable out;
  out.n = n;
  out.set_size = n - size_b;
  out.q = t.q;
  for (int k = 0; k <= out.set_size; ++k) {
    std::vector<Rational> coeffs(static_cast<std::size_t>(n) + 1); // g'_k, ascending powers
    for (int i = 0; i <= size_b; ++i)
      for (int j = 0; j <= n - size_b; ++j) {
        const Rational &om = w.omega[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        if (om.is_zero())
          continue;
        coeffs[static_cast<std::size_t>(n - i - j)] += Rational(binomial(n - size_b - j, k)) * om;
      }
    out.polys.push_back(Polynomial(std::move(coeffs)).divided_by_power(static_cast<std::size_t>(k)));
  }
  return out;
}

MainTheoremReport verify_main_theorem(const CoalescentPair &p1, const CoalescentPair &p2, const Rational &q) {
  SubsetPolyCache cache1(p1.graph, q), cache2(p2.graph, q);
  MainTheoremReport report;
  report.families_equal = coalescing_cospectral(family(cache1, p1.set), family(cache2, p2.set));
  report.complement_families_equal =
      coalescing_cospectral(family(cache1, complement_set(p1.graph.vertex_count(), p1.set)),
                            family(cache2, complement_set(p2.graph.vertex_count(), p2.set)));
  return report;
}

std::string weight_table_json(const WeightTable &w) {
  nlohmann::json j;
  j["n"] = w.n;
  j["set_size"] = w.set_size;
  auto rows = nlohmann::json::array();
  for (const auto &row : w.omega) {
    auto r = nlohmann::json::array();
    for (const auto &value : row)
      r.push_back(value.str());
    rows.push_back(std::move(r));
  }
  j["omega"] = std::move(rows);
  return j.dump();
}

} // namespace coalspec
