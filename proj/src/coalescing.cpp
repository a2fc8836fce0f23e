#include "coalspec/coalescing.hpp"

#include <algorithm>
#include <bit>

#include "coalspec/random_graphs.hpp"

namespace coalspec {

namespace {

std::uint64_t mask_of(const std::vector<int> &set) {
  std::uint64_t m = 0;
  for (int v : set)
    m |= std::uint64_t(1) << v;
  return m;
}

std::vector<int> vec_of(std::uint64_t mask) {
  std::vector<int> out;
  for (int v = 0; mask != 0; ++v, mask >>= 1)
    if (mask & 1u)
      out.push_back(v);
  return out;
}

// All size-k submasks of `mask`, ascending order of k-combination.
void for_each_submask_of_size(std::uint64_t mask, int k, const std::function<void(std::uint64_t)> &fn) {
  std::vector<int> bits = vec_of(mask);
  const int n = static_cast<int>(bits.size());
  std::vector<int> idx(static_cast<std::size_t>(k));
  auto rec = [&](auto &&self, int start, int depth, std::uint64_t acc) -> void {
    if (depth == k) {
      fn(acc);
      return;
    }
    for (int i = start; i <= n - (k - depth); ++i)
      self(self, i + 1, depth + 1, acc | (std::uint64_t(1) << bits[static_cast<std::size_t>(i)]));
  };
  if (k >= 0 && k <= n)
    rec(rec, 0, 0, 0);
}

} // namespace

const Polynomial &SubsetPolyCache::get(std::uint64_t deleted_mask) {
  auto it = memo_.find(deleted_mask);
  if (it != memo_.end())
    return it->second;
  auto poly = deleted_char_poly(*g_, q_, vec_of(deleted_mask));
  return memo_.emplace(deleted_mask, std::move(poly)).first->second;
}

FamilyTable family(SubsetPolyCache &cache, const std::vector<int> &b) {
  for (int v : b)
    if (v < 0 || v >= cache.graph().vertex_count())
      throw error("family: set member out of range");
  FamilyTable t;
  t.n = cache.graph().vertex_count();
  t.set_size = static_cast<int>(b.size());
  t.q = cache.q();
  const std::uint64_t bmask = mask_of(b);
  if (std::popcount(bmask) != t.set_size)
    throw error("family: duplicate set member");
  for (int k = 0; k <= t.set_size; ++k) {
    Polynomial f_k;
    for_each_submask_of_size(bmask, k, [&](std::uint64_t sub) { f_k = f_k + cache.get(sub); });
    t.polys.push_back(std::move(f_k));
  }
  return t;
}

FamilyTable family(const Graph &h, const std::vector<int> &b, const Rational &q) {
  SubsetPolyCache cache(h, q);
  return family(cache, b);
}

Polynomial coalesced_char_poly_formula(const CoalescentPair &pair, const RootedGraph &g, const Rational &q,
                                       const std::vector<int> &t) {
  const std::uint64_t bmask = mask_of(pair.set);
  std::uint64_t tmask = 0;
  for (int v : t) {
    if (v < 0 || v >= pair.graph.vertex_count())
      throw error("coalesced_char_poly_formula: t member out of range");
    tmask |= std::uint64_t(1) << v;
  }
  if ((tmask & bmask) != 0)
    throw error("coalesced_char_poly_formula: t must be disjoint from B");

  const Polynomial p_g_root = deleted_char_poly(g.graph, q, {g.root});
  const Polynomial p_g = deleted_char_poly(g.graph, q, {});
  const Polynomial mixed = p_g - p_g_root.shifted_up(1); // p_G - x p_{G,r}

  SubsetPolyCache cache(pair.graph, q);
  const int size_b = static_cast<int>(pair.set.size());
  Polynomial acc;
  for (int k = 0; k <= size_b; ++k) {
    Polynomial inner;
    for_each_submask_of_size(bmask, k, [&](std::uint64_t sub) { inner = inner + cache.get(sub | tmask); });
    acc = acc + p_g_root.pow(static_cast<unsigned>(size_b - k)) * mixed.pow(static_cast<unsigned>(k)) * inner;
  }
  return acc;
}

Polynomial schwenk_single(const Graph &h, int v, const RootedGraph &g, const Rational &q) {
  if (v < 0 || v >= h.vertex_count())
    throw error("schwenk_single: vertex out of range");
  const Polynomial p_g_root = deleted_char_poly(g.graph, q, {g.root});
  const Polynomial p_g = deleted_char_poly(g.graph, q, {});
  return p_g_root * deleted_char_poly(h, q, {}) +
         (p_g - p_g_root.shifted_up(1)) * deleted_char_poly(h, q, {v});
}

std::pair<Polynomial, Polynomial> star_factors(int ell, const Rational &q) {
  if (ell < 1)
    throw error("star_factors: need ell >= 1");
  const Polynomial x_minus_q({-q, Rational(1)});
  const Polynomial root_deleted = x_minus_q.pow(static_cast<unsigned>(ell));
  const Polynomial tail({q * q - Rational(1), -q}); // q^2 - qx - 1
  return {root_deleted, Rational(ell) * x_minus_q.pow(static_cast<unsigned>(ell - 1)) * tail};
}

bool coalescing_cospectral(const FamilyTable &a, const FamilyTable &b) {
  if (a.q != b.q)
    throw error("coalescing_cospectral: mismatched q");
  return a.n == b.n && a.set_size == b.set_size && a.polys == b.polys;
}

TwoSetTable two_set_family(const Graph &h, const std::vector<int> &b, const std::vector<int> &b2,
                           const Rational &q) {
  const std::uint64_t bm = mask_of(b), bm2 = mask_of(b2);
  if ((bm & bm2) != 0)
    throw error("two_set_family: sets overlap");
  SubsetPolyCache cache(h, q);
  TwoSetTable t;
  t.n = h.vertex_count();
  t.q = q;
  t.size_b = static_cast<int>(b.size());
  t.size_b2 = static_cast<int>(b2.size());
  t.polys.assign(static_cast<std::size_t>(t.size_b) + 1,
                 std::vector<Polynomial>(static_cast<std::size_t>(t.size_b2) + 1));
  for (int k = 0; k <= t.size_b; ++k)
    for (int l = 0; l <= t.size_b2; ++l)
      for_each_submask_of_size(bm, k, [&](std::uint64_t s) {
        for_each_submask_of_size(bm2, l, [&](std::uint64_t s2) {
          auto &cell = t.polys[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)];
          cell = cell + cache.get(s | s2);
        });
      });
  return t;
}

TwoStepReport twostep_check(const Graph &h1, const std::vector<int> &b1, int v1, const Graph &h2,
                            const std::vector<int> &b2, int v2, const Rational &q,
                            const TwoStepOptions &options) {
  auto contains = [](const std::vector<int> &set, int v) {
    return std::find(set.begin(), set.end(), v) != set.end();
  };
  if (contains(b1, v1) || contains(b2, v2))
    throw error("twostep_check: vertex must lie outside its set");

  SubsetPolyCache cache1(h1, q), cache2(h2, q);
  TwoStepReport report;
  report.sets_cospectral = coalescing_cospectral(family(cache1, b1), family(cache2, b2));
  report.vertices_cospectral = coalescing_cospectral(family(cache1, {v1}), family(cache2, {v2}));

  auto with_vertex = [](std::vector<int> set, int v) {
    set.push_back(v);
    std::sort(set.begin(), set.end());
    return set;
  };
  report.union_cospectral =
      coalescing_cospectral(family(cache1, with_vertex(b1, v1)), family(cache2, with_vertex(b2, v2)));

  if (!report.hypotheses_hold())
    return report;

  std::mt19937_64 rng(options.seed);
  for (int probe = 0; probe < options.probe_count; ++probe) {
    RootedGraph g = random_rooted_graph(rng, 1, options.probe_max_vertices);
    RootedGraph g_hat = random_rooted_graph(rng, 1, options.probe_max_vertices);
    auto build = [&](const Graph &h, const std::vector<int> &b, int v) {
      Graph first = coalesce(CoalescentPair(h, b), g).graph; // h keeps its ids
      return coalesce(CoalescentPair(first, {v}), g_hat).graph;
    };
    Polynomial p1 = char_poly(lq_matrix(build(h1, b1, v1), q));
    Polynomial p2 = char_poly(lq_matrix(build(h2, b2, v2), q));
    ++report.probes_run;
    if (p1 == p2)
      ++report.probes_passed;
  }
  return report;
}

} // namespace coalspec
