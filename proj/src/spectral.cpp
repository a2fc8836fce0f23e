#include "coalspec/spectral.hpp"

#include <algorithm>
#include <bit>

namespace coalspec {

RationalMatrix lq_matrix(const Graph &g, const Rational &q) {
  const int n = g.vertex_count();
  RationalMatrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v)
    m.at(static_cast<std::size_t>(v), static_cast<std::size_t>(v)) = q * Rational(g.degree(v));
  for (auto [u, v] : g.edges()) {
    m.at(static_cast<std::size_t>(u), static_cast<std::size_t>(v)) = Rational(1);
    m.at(static_cast<std::size_t>(v), static_cast<std::size_t>(u)) = Rational(1);
  }
  return m;
}

Polynomial char_poly(const RationalMatrix &m) {
  if (m.rows != m.cols)
    throw error("char_poly: matrix not square");
  const std::size_t n = m.rows;
  // Berkowitz: grow one principal submatrix at a time; vec holds the
  // current characteristic polynomial, highest power first.
  std::vector<Rational> vec{Rational(1)};
  for (std::size_t r = 1; r <= n; ++r) {
    std::vector<Rational> t(r + 1);
    t[0] = Rational(1);
    t[1] = -m.at(r - 1, r - 1);
    if (r >= 2) {
      // t[i+2] = -(row . M^i . col) for the bordering row/column.
      std::vector<Rational> v(r - 1);
      for (std::size_t i = 0; i < r - 1; ++i)
        v[i] = m.at(i, r - 1);
      for (std::size_t i = 0; i + 2 <= r; ++i) {
        Rational s(0);
        for (std::size_t j = 0; j < r - 1; ++j)
          s += m.at(r - 1, j) * v[j];
        t[i + 2] = -s;
        if (i + 3 <= r) {
          std::vector<Rational> next(r - 1);
          for (std::size_t a = 0; a < r - 1; ++a) {
            Rational acc(0);
            for (std::size_t b = 0; b < r - 1; ++b)
              acc += m.at(a, b) * v[b];
            next[a] = acc;
          }
          v = std::move(next);
        }
      }
    }
    std::vector<Rational> out(r + 1);
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (t[i].is_zero())
        continue;
      for (std::size_t j = 0; j < vec.size() && i + j <= r; ++j)
        out[i + j] += t[i] * vec[j];
    }
    vec = std::move(out);
  }
  std::vector<Rational> ascending(n + 1);
  for (std::size_t i = 0; i <= n; ++i)
    ascending[n - i] = vec[i];
  return Polynomial(std::move(ascending));
}

Polynomial char_poly_by_interpolation(const RationalMatrix &m) {
  if (m.rows != m.cols)
    throw error("char_poly_by_interpolation: matrix not square");
  const std::size_t n = m.rows;
  std::vector<Rational> ys(n + 1);
  for (std::size_t t = 0; t <= n; ++t) {
    RationalMatrix shifted = m;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j)
        shifted.at(i, j) = -m.at(i, j);
      shifted.at(i, i) += Rational(static_cast<long>(t));
    }
    ys[t] = determinant(shifted);
  }
  Polynomial acc;
  for (std::size_t t = 0; t <= n; ++t) {
    Polynomial basis = Polynomial::one();
    Rational denom(1);
    for (std::size_t s = 0; s <= n; ++s) {
      if (s == t)
        continue;
      basis = basis * Polynomial({Rational(-static_cast<long>(s)), Rational(1)});
      denom *= Rational(static_cast<long>(t)) - Rational(static_cast<long>(s));
    }
    acc = acc + (ys[t] / denom) * basis;
  }
  return acc;
}

Polynomial deleted_char_poly(const Graph &g, const Rational &q, const std::vector<int> &s) {
  std::vector<int> sorted = s;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] < 0 || sorted[i] >= g.vertex_count())
      throw error("deleted_char_poly: vertex out of range");
    if (i > 0 && sorted[i] == sorted[i - 1])
      throw error("deleted_char_poly: duplicate vertex");
  }
  return char_poly(lq_matrix(g, q).without_indices(sorted));
}

namespace {

// Enumerate simple cycles of length >= 3 through `anchor` whose other
// vertices lie in `avail`; each undirected cycle is visited once by forcing
// the first step below the closing step.
void find_cycles(const Graph &g, int anchor, std::uint64_t avail, int current, std::uint64_t path_mask,
                 int first_step, const std::function<void(std::uint64_t)> &emit) {
  for (int next = 0; next < g.vertex_count(); ++next) {
    if (!g.has_edge(current, next))
      continue;
    if (next == anchor) {
      if (std::popcount(path_mask) >= 2 && first_step < current)
        emit(path_mask);
      continue;
    }
    if (!((avail >> next) & 1u) || ((path_mask >> next) & 1u))
      continue;
    find_cycles(g, anchor, avail, next, path_mask | (std::uint64_t(1) << next), first_step, emit);
  }
}

void enumerate_decompositions(const Graph &g, const Rational &q, std::uint64_t remaining, std::uint64_t used,
                              const Rational &scalar,
                              const std::function<void(const Rational &, std::uint64_t)> &visit) {
  if (remaining == 0) {
    visit(scalar, used);
    return;
  }
  const int v = std::countr_zero(remaining);
  const std::uint64_t vbit = std::uint64_t(1) << v;

  // v unused by any cycle
  enumerate_decompositions(g, q, remaining & ~vbit, used, scalar, visit);

  // loop at v: weight q*deg(v), one more cycle
  Rational loop = q * Rational(g.degree(v));
  if (!loop.is_zero())
    enumerate_decompositions(g, q, remaining & ~vbit, used | vbit, -(scalar * loop), visit);

  // single edge v-u
  for (int u = v + 1; u < g.vertex_count(); ++u) {
    const std::uint64_t ubit = std::uint64_t(1) << u;
    if (((remaining >> u) & 1u) && g.has_edge(v, u))
      enumerate_decompositions(g, q, remaining & ~vbit & ~ubit, used | vbit | ubit, -scalar, visit);
  }

  // cycle of length >= 3 through v: factor 2 for the two orientations
  const std::uint64_t avail = remaining & ~vbit;
  for (int w = 0; w < g.vertex_count(); ++w) {
    if (!((avail >> w) & 1u) || !g.has_edge(v, w))
      continue;
    find_cycles(g, v, avail, w, std::uint64_t(1) << w, w, [&](std::uint64_t cycle_mask) {
      std::uint64_t full = cycle_mask | vbit;
      enumerate_decompositions(g, q, remaining & ~full, used | full, Rational(-2) * scalar, visit);
    });
  }
}

} // namespace

void for_each_cycle_decomposition(const Graph &g, const Rational &q, std::uint64_t allowed_mask,
                                  const std::function<void(const Rational &, std::uint64_t)> &visit) {
  enumerate_decompositions(g, q, allowed_mask, 0, Rational(1), visit);
}

Polynomial char_poly_cycle_oracle(const Graph &g, const Rational &q, const std::vector<int> &s) {
  std::uint64_t smask = 0;
  for (int v : s) {
    if (v < 0 || v >= g.vertex_count())
      throw error("char_poly_cycle_oracle: vertex out of range");
    smask |= std::uint64_t(1) << v;
  }
  const int avail = g.vertex_count() - std::popcount(smask);
  if (avail > 10)
    throw error("char_poly_cycle_oracle: more than 10 available vertices");
  std::uint64_t allowed = 0;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!((smask >> v) & 1u))
      allowed |= std::uint64_t(1) << v;

  std::vector<Rational> coeffs(static_cast<std::size_t>(avail) + 1);
  for_each_cycle_decomposition(g, q, allowed, [&](const Rational &scalar, std::uint64_t used) {
    // unused vertices counted within V(g) \ s
    coeffs[static_cast<std::size_t>(avail - std::popcount(used))] += scalar;
  });
  return Polynomial(std::move(coeffs));
}

RationalMatrix distance_matrix(const Graph &g) {
  auto d = distances(g);
  const std::size_t n = d.size();
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m.at(i, j) = Rational(d[i][j]);
  return m;
}

Polynomial distance_char_poly(const Graph &g) {
  return char_poly(distance_matrix(g));
}

Polynomial normalized_char_poly(const Graph &g) {
  const int n = g.vertex_count();
  for (int v = 0; v < n; ++v)
    if (g.degree(v) == 0)
      throw error("normalized_char_poly: isolated vertex " + std::to_string(v));
  RationalMatrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (g.has_edge(u, v))
        m.at(static_cast<std::size_t>(u), static_cast<std::size_t>(v)) = Rational(1, g.degree(u));
  return char_poly(m);
}

Polynomial char_poly_for(const Graph &g, const MatrixKind &kind) {
  if (const auto *lq = std::get_if<lq_kind>(&kind))
    return char_poly(lq_matrix(g, lq->q));
  if (std::holds_alternative<distance_kind>(kind))
    return distance_char_poly(g);
  return normalized_char_poly(g);
}

} // namespace coalspec
