#include "coalspec/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>
#include <thread>
#include <tuple>

#include "json.hpp"

#include "coalspec/random_graphs.hpp"

namespace coalspec {

namespace {

std::vector<int> vec_of(std::uint64_t mask) {
  std::vector<int> out;
  for (int v = 0; mask != 0; ++v, mask >>= 1)
    if (mask & 1u)
      out.push_back(v);
  return out;
}

std::uint64_t mask_of(const std::vector<int> &set) {
  std::uint64_t m = 0;
  for (int v : set)
    m |= std::uint64_t(1) << v;
  return m;
}

std::string side_notation(const std::vector<int> &set, char base) {
  if (set.empty())
    return "-";
  std::string s;
  for (int v : set)
    s.push_back(static_cast<char>(base + v));
  return s;
}

std::string class_notation(const std::vector<int> &b1, const std::vector<int> &b2) {
  return side_notation(b1, '0') + ":" + side_notation(b2, 'a');
}

std::string poly_key(const Polynomial &p) {
  std::string key;
  for (const auto &c : p.coeff_strings()) {
    key += c;
    key += ',';
  }
  return key;
}

} // namespace

Corpus load_corpus_text(const std::string &text, const std::string &name, int max_n) {
  Corpus corpus;
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '[') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception &e) {
      throw error(std::string("corpus: ") + name + ": " + e.what());
    }
    int index = 0;
    for (const auto &item : j) {
      ++index;
      try {
        Graph g = parse_edge_json(item.dump());
        if (g.vertex_count() > max_n)
          throw error("graph exceeds n <= " + std::to_string(max_n));
        corpus.entries.push_back({std::move(g), name, index});
      } catch (const error &e) {
        corpus.skipped.push_back(name + ":" + std::to_string(index) + ": " + e.what());
      }
    }
    return corpus;
  }
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r')
      line.pop_back();
    if (line.empty())
      continue;
    try {
      Graph g = parse_graph6(line);
      if (g.vertex_count() > max_n)
        throw error("graph exceeds n <= " + std::to_string(max_n));
      corpus.entries.push_back({std::move(g), name, lineno});
    } catch (const error &e) {
      corpus.skipped.push_back(name + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  return corpus;
}

Corpus load_corpus_file(const std::string &path, int max_n) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw error("corpus: cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string name = path;
  if (std::size_t slash = path.find_last_of('/'); slash != std::string::npos)
    name = path.substr(slash + 1);
  return load_corpus_text(buf.str(), name, max_n);
}

std::vector<Polynomial> subset_table(const Graph &g, const Rational &q) {
  const int n = g.vertex_count();
  if (n > 10)
    throw error("subset_table: more than 10 vertices");
  std::vector<Polynomial> table(std::size_t(1) << n);
  for (std::uint64_t mask = 0; mask < table.size(); ++mask)
    table[mask] = deleted_char_poly(g, q, vec_of(mask));
  return table;
}

namespace {

// Precomputed per-graph data reused across all candidate pairs involving it.
struct EntryData {
  const Graph *graph = nullptr;
  std::vector<Polynomial> subtable;
  std::vector<std::vector<int>> autos;
  // reps_by_size[k]: orbit representatives with orbit sizes, lex order
  std::vector<std::vector<std::pair<std::vector<int>, long>>> reps_by_size;

  FamilyTable family_of(const std::vector<int> &set, const Rational &q) const {
    FamilyTable t;
    t.n = graph->vertex_count();
    t.set_size = static_cast<int>(set.size());
    t.q = q;
    const std::uint64_t bmask = mask_of(set);
    t.polys.assign(static_cast<std::size_t>(t.set_size) + 1, Polynomial());
    // iterate all submasks of bmask, bucket by size
    std::uint64_t sub = bmask;
    for (;;) {
      t.polys[static_cast<std::size_t>(std::popcount(sub))] =
          t.polys[static_cast<std::size_t>(std::popcount(sub))] + subtable[sub];
      if (sub == 0)
        break;
      sub = (sub - 1) & bmask;
    }
    return t;
  }

  std::vector<int> orbit_representative(const std::vector<int> &set) const {
    std::vector<int> best;
    bool have = false;
    for (const auto &perm : autos) {
      std::vector<int> image;
      image.reserve(set.size());
      for (int v : set)
        image.push_back(perm[static_cast<std::size_t>(v)]);
      std::sort(image.begin(), image.end());
      if (!have || image < best) {
        best = std::move(image);
        have = true;
      }
    }
    return best;
  }
};

EntryData build_entry_data(const Graph &g, const Rational &q) {
  EntryData d;
  d.graph = &g;
  d.subtable = subset_table(g, q);
  d.autos = automorphisms(g);
  const int n = g.vertex_count();
  d.reps_by_size.resize(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k)
    for (const auto &orbit : subset_orbits(g, k))
      d.reps_by_size[static_cast<std::size_t>(k)].emplace_back(orbit.representative,
                                                               static_cast<long>(orbit.members.size()));
  return d;
}

PairReport process_candidate_pair(const Corpus &corpus, int i, int j, const EntryData &d1, const EntryData &d2,
                                  const Rational &q) {
  PairReport report;
  report.index1 = i;
  report.index2 = j;
  report.g1_id = corpus.entries[static_cast<std::size_t>(i)].id();
  report.g2_id = corpus.entries[static_cast<std::size_t>(j)].id();
  report.g1_graph6 = serialize_graph6(*d1.graph);
  report.g2_graph6 = serialize_graph6(*d2.graph);
  report.q = q;
  report.complement_verified = true;

  const int n = d1.graph->vertex_count();
  for (int k = 0; 2 * k <= n; ++k) {
    for (const auto &[rep1, size1] : d1.reps_by_size[static_cast<std::size_t>(k)]) {
      const FamilyTable t1 = d1.family_of(rep1, q);
      for (const auto &[rep2, size2] : d2.reps_by_size[static_cast<std::size_t>(k)]) {
        if (!(t1 == d2.family_of(rep2, q)))
          continue;
        const auto comp1 = d1.orbit_representative(complement_set(n, rep1));
        const auto comp2 = d2.orbit_representative(complement_set(n, rep2));
        if (2 * k == n) {
          // complement class has the same size; keep the lexicographically
          // smaller of the two mirrored classes
          if (std::make_pair(comp1, comp2) < std::make_pair(rep1, rep2))
            continue;
        }
        PairClass cls;
        cls.b1 = rep1;
        cls.b2 = rep2;
        cls.notation = class_notation(rep1, rep2);
        cls.orbit_size_1 = size1;
        cls.orbit_size_2 = size2;
        cls.complement_notation = class_notation(comp1, comp2);
        report.classes.push_back(std::move(cls));
        const auto mt = verify_main_theorem(CoalescentPair(*d1.graph, rep1), CoalescentPair(*d2.graph, rep2), q);
        if (!mt.families_equal || !mt.holds())
          report.complement_verified = false;
      }
    }
  }
  return report;
}

} // namespace

std::vector<PairReport> find_pairs(const Corpus &corpus, const Rational &q, const SearchOptions &options) {
  for (const auto &entry : corpus.entries)
    if (entry.graph.vertex_count() > options.max_n)
      throw error("find_pairs: corpus entry " + entry.id() + " exceeds n <= " + std::to_string(options.max_n));

  // plain cospectrality (the B = empty-set necessary condition) prunes the
  // quadratic pair scan down to the rare cospectral pairs
  std::vector<Polynomial> p0(corpus.entries.size());
  for (std::size_t e = 0; e < corpus.entries.size(); ++e)
    p0[e] = char_poly(lq_matrix(corpus.entries[e].graph, q));

  std::vector<std::pair<int, int>> candidates;
  for (std::size_t i = 0; i < corpus.entries.size(); ++i)
    for (std::size_t j = i + 1; j < corpus.entries.size(); ++j)
      if (corpus.entries[i].graph.vertex_count() == corpus.entries[j].graph.vertex_count() && p0[i] == p0[j])
        candidates.emplace_back(static_cast<int>(i), static_cast<int>(j));

  std::map<int, EntryData> data;
  for (const auto &[i, j] : candidates) {
    if (!data.count(i))
      data.emplace(i, build_entry_data(corpus.entries[static_cast<std::size_t>(i)].graph, q));
    if (!data.count(j))
      data.emplace(j, build_entry_data(corpus.entries[static_cast<std::size_t>(j)].graph, q));
  }

  std::vector<PairReport> results(candidates.size());
  const int workers = std::max(1, options.workers);
  if (workers == 1 || candidates.size() <= 1) {
    for (std::size_t c = 0; c < candidates.size(); ++c)
      results[c] = process_candidate_pair(corpus, candidates[c].first, candidates[c].second,
                                          data.at(candidates[c].first), data.at(candidates[c].second), q);
  } else {
    // candidate tasks are independent; canonical order is restored by the
    // indexed result slots, so scheduling cannot leak into the output
    std::vector<std::thread> pool;
    std::atomic<std::size_t> next{0};
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (;;) {
          std::size_t c = next.fetch_add(1);
          if (c >= candidates.size())
            return;
          results[c] = process_candidate_pair(corpus, candidates[c].first, candidates[c].second,
                                              data.at(candidates[c].first), data.at(candidates[c].second), q);
        }
      });
    for (auto &t : pool)
      t.join();
  }
  return results;
}

std::string pair_reports_json(const std::vector<PairReport> &reports, const std::vector<std::string> &skipped) {
  nlohmann::json out;
  out["pairs"] = nlohmann::json::array();
  for (const auto &r : reports) {
    nlohmann::json p;
    p["g1"] = r.g1_id;
    p["g2"] = r.g2_id;
    p["g1_graph6"] = r.g1_graph6;
    p["g2_graph6"] = r.g2_graph6;
    p["q"] = r.q.str();
    p["classes"] = nlohmann::json::array();
    for (const auto &c : r.classes) {
      nlohmann::json jc;
      jc["b1"] = c.b1;
      jc["b2"] = c.b2;
      jc["notation"] = c.notation;
      jc["orbit_size_1"] = c.orbit_size_1;
      jc["orbit_size_2"] = c.orbit_size_2;
      jc["complement"] = c.complement_notation;
      p["classes"].push_back(std::move(jc));
    }
    p["complement_verified"] = r.complement_verified;
    out["pairs"].push_back(std::move(p));
  }
  out["warnings"] = skipped;
  return out.dump(2);
}

std::string pair_reports_text(const std::vector<PairReport> &reports, const std::vector<std::string> &skipped) {
  std::ostringstream out;
  for (const auto &w : skipped)
    out << "warning: skipped " << w << "\n";
  if (reports.empty()) {
    out << "no cospectral pairs\n";
    return out.str();
  }
  for (const auto &r : reports) {
    out << "pair " << r.g1_id << " (" << r.g1_graph6 << ") ~ " << r.g2_id << " (" << r.g2_graph6
        << ")  q=" << r.q.str() << "\n";
    out << "  classes up to symmetry and complements:\n";
    for (const auto &c : r.classes)
      out << "    " << c.notation << "  orbits " << c.orbit_size_1 << "x" << c.orbit_size_2
          << "  complement " << c.complement_notation << "\n";
    out << "  complement closure verified: " << (r.complement_verified ? "yes" : "NO") << "\n";
  }
  return out.str();
}

bool induced_check(const Graph &h1, const std::vector<int> &b1, const Graph &h2, const std::vector<int> &b2) {
  auto adj_poly = [](const Graph &g, const std::vector<int> &s) {
    return char_poly(lq_matrix(induced_subgraph(g, s), Rational(0)));
  };
  return adj_poly(h1, b1) == adj_poly(h2, b2) &&
         adj_poly(h1, complement_set(h1.vertex_count(), b1)) ==
             adj_poly(h2, complement_set(h2.vertex_count(), b2));
}

UnionProbeReport union_probe(const Graph &h1, const std::vector<int> &a1, const std::vector<int> &b1,
                             const Graph &h2, const std::vector<int> &a2, const std::vector<int> &b2,
                             const Rational &q) {
  if ((mask_of(a1) & mask_of(b1)) != 0 || (mask_of(a2) & mask_of(b2)) != 0)
    throw error("union_probe: sets overlap");
  auto unite = [](const std::vector<int> &a, const std::vector<int> &b) {
    std::vector<int> u = a;
    u.insert(u.end(), b.begin(), b.end());
    std::sort(u.begin(), u.end());
    return u;
  };
  SubsetPolyCache cache1(h1, q), cache2(h2, q);
  UnionProbeReport report;
  report.a_cospectral = coalescing_cospectral(family(cache1, a1), family(cache2, a2));
  report.b_cospectral = coalescing_cospectral(family(cache1, b1), family(cache2, b2));
  report.union_cospectral = coalescing_cospectral(family(cache1, unite(a1, b1)), family(cache2, unite(a2, b2)));
  return report;
}

NormalizedDemoReport normalized_demo() {
  NormalizedDemoReport r;
  const Graph g1 = star_graph(3);          // K_{1,3}
  const Graph g2 = complete_bipartite(2, 2);
  r.g1_graph6 = serialize_graph6(g1);
  r.g2_graph6 = serialize_graph6(g2);
  r.normalized_before_1 = normalized_char_poly(g1);
  r.normalized_before_2 = normalized_char_poly(g2);
  r.normalized_before_equal = r.normalized_before_1 == r.normalized_before_2;

  const RootedGraph pendant(path_graph(2), 0);
  auto everywhere = [&](const Graph &g) {
    std::vector<int> all(static_cast<std::size_t>(g.vertex_count()));
    std::iota(all.begin(), all.end(), 0);
    return coalesce(CoalescentPair(g, all), pendant).graph;
  };
  const Graph c1 = everywhere(g1), c2 = everywhere(g2);
  r.normalized_after_1 = normalized_char_poly(c1);
  r.normalized_after_2 = normalized_char_poly(c2);
  r.normalized_after_equal = r.normalized_after_1 == r.normalized_after_2;
  r.adjacency_after_1 = char_poly(lq_matrix(c1, Rational(0)));
  r.adjacency_after_2 = char_poly(lq_matrix(c2, Rational(0)));
  r.adjacency_after_equal = r.adjacency_after_1 == r.adjacency_after_2;
  return r;
}

std::string NormalizedDemoReport::to_text() const {
  std::ostringstream out;
  out << "normalized-adjacency demo: " << g1_graph6 << " vs " << g2_graph6 << "\n";
  out << "  before coalescing: " << normalized_before_1.str() << "  |  " << normalized_before_2.str()
      << "  equal: " << (normalized_before_equal ? "yes" : "no") << "\n";
  out << "  pendant edge coalesced at every vertex:\n";
  out << "    normalized: " << normalized_after_1.str() << "  |  " << normalized_after_2.str()
      << "  equal: " << (normalized_after_equal ? "yes" : "no") << "\n";
  out << "    adjacency control: equal: " << (adjacency_after_equal ? "yes" : "no") << "\n";
  return out.str();
}

std::string NormalizedDemoReport::to_json() const {
  nlohmann::json j;
  j["g1_graph6"] = g1_graph6;
  j["g2_graph6"] = g2_graph6;
  j["normalized_before"] = {normalized_before_1.coeff_strings(), normalized_before_2.coeff_strings()};
  j["normalized_before_equal"] = normalized_before_equal;
  j["normalized_after"] = {normalized_after_1.coeff_strings(), normalized_after_2.coeff_strings()};
  j["normalized_after_equal"] = normalized_after_equal;
  j["adjacency_after_equal"] = adjacency_after_equal;
  return j.dump(2);
}

namespace {

struct DistanceProbe {
  const char *name;
  RootedGraph rooted;
};

const std::vector<DistanceProbe> &distance_battery() {
  static const std::vector<DistanceProbe> battery = {
      {"K2", RootedGraph(path_graph(2), 0)},
      {"K1,2", RootedGraph(star_graph(2), 0)},
      {"K1,3", RootedGraph(star_graph(3), 0)},
      {"P3-end", RootedGraph(path_graph(3), 0)},
  };
  return battery;
}

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

DistanceFuzzReport distance_fuzz(const DistanceFuzzOptions &options) {
  if (options.n_min < 1 || options.n_max < options.n_min || options.n_max > 10)
    throw error("distance_fuzz: need 1 <= n_min <= n_max <= 10");
  DistanceFuzzReport report;
  report.options = options;

  std::mt19937_64 rng(options.seed);
  std::vector<Graph> graphs;
  std::vector<Polynomial> polys;
  graphs.reserve(static_cast<std::size_t>(options.count));
  for (int s = 0; s < options.count; ++s) {
    const int n = draw_int(rng, options.n_min, options.n_max);
    Graph g = random_connected_graph(rng, n);
    report.samples.push_back(serialize_graph6(g));
    Polynomial direct = distance_char_poly(g);
    ++report.oracle_checked;
    if (!(direct == char_poly_by_interpolation(distance_matrix(g))))
      report.oracle_all_match = false;
    polys.push_back(std::move(direct));
    graphs.push_back(std::move(g));
  }

  // group sample indices by distance char poly, ordered by first appearance
  std::map<std::string, std::vector<int>> by_poly;
  std::vector<std::string> group_order;
  for (int s = 0; s < options.count; ++s) {
    std::string key = poly_key(polys[static_cast<std::size_t>(s)]);
    auto [it, fresh] = by_poly.try_emplace(key);
    if (fresh)
      group_order.push_back(key);
    it->second.push_back(s);
  }

  for (const auto &key : group_order) {
    const auto &members = by_poly.at(key);
    if (members.size() < 2)
      continue;
    DistanceFuzzGroup group;
    group.sample_indices = members;
    group.poly = polys[static_cast<std::size_t>(members.front())].str();

    // collapse to isomorphism classes; keep the first sampled labeling of
    // each class as the probe representative
    std::vector<std::string> canon;
    std::vector<int> class_rep;       // sample index
    std::vector<int> class_count;
    for (int s : members) {
      std::string c = canonical_graph6(graphs[static_cast<std::size_t>(s)]);
      auto it = std::find(canon.begin(), canon.end(), c);
      if (it == canon.end()) {
        canon.push_back(std::move(c));
        class_rep.push_back(s);
        class_count.push_back(1);
      } else {
        ++class_count[static_cast<std::size_t>(it - canon.begin())];
      }
    }
    group.iso_classes = canon;
    report.groups.push_back(group);

    const int n = graphs[static_cast<std::size_t>(members.front())].vertex_count();

    // candidate sides repeat across pair combinations; memoize the coalesced
    // distance polynomial per (class, probe, set)
    std::map<std::tuple<std::size_t, std::size_t, std::uint64_t>, Polynomial> side_memo;
    auto side_poly = [&](std::size_t c, std::size_t probe, const std::vector<int> &b) -> const Polynomial & {
      const auto key = std::make_tuple(c, probe, mask_of(b));
      auto it = side_memo.find(key);
      if (it == side_memo.end()) {
        const Graph &g = graphs[static_cast<std::size_t>(class_rep[c])];
        it = side_memo
                 .emplace(key, distance_char_poly(
                                   coalesce(CoalescentPair(g, b), distance_battery()[probe].rooted).graph))
                 .first;
      }
      return it->second;
    };
    auto run_battery = [&](std::size_t ca, const std::vector<int> &ba, std::size_t cb,
                           const std::vector<int> &bb) -> const char * {
      for (std::size_t p = 0; p < distance_battery().size(); ++p)
        if (!(side_poly(ca, p, ba) == side_poly(cb, p, bb)))
          return distance_battery()[p].name;
      return nullptr;
    };
    auto probe_candidate = [&](std::size_t ca, const std::vector<int> &ba, std::size_t cb,
                               const std::vector<int> &bb) {
      ++report.candidates_tested;
      DistanceProbeRecord rec;
      rec.g1_graph6 = serialize_graph6(graphs[static_cast<std::size_t>(class_rep[ca])]);
      rec.g2_graph6 = serialize_graph6(graphs[static_cast<std::size_t>(class_rep[cb])]);
      rec.b1 = ba;
      rec.b2 = bb;
      const char *failed = run_battery(ca, ba, cb, bb);
      if (failed != nullptr) {
        rec.failed_probe = failed;
        return; // failures are only counted, not listed
      }
      rec.passed_battery = true;
      ++report.batteries_passed;
      rec.complement_checked = true;
      const char *comp_failed = run_battery(ca, complement_set(n, ba), cb, complement_set(n, bb));
      rec.complement_passed = comp_failed == nullptr;
      if (rec.complement_passed)
        report.passing.push_back(std::move(rec));
      else
        report.counterexamples.push_back(std::move(rec));
    };

    // orbit representatives per size for each class representative
    std::vector<std::vector<std::vector<int>>> reps(class_rep.size());
    for (std::size_t c = 0; c < class_rep.size(); ++c) {
      const Graph &g = graphs[static_cast<std::size_t>(class_rep[c])];
      for (int k = 0; k <= n; ++k)
        for (const auto &orbit : subset_orbits(g, k))
          reps[c].push_back(orbit.representative);
    }

    // within one graph: distinct same-size representatives, only when the
    // class actually recurred in the sample
    for (std::size_t c = 0; c < class_rep.size(); ++c) {
      if (class_count[c] < 2)
        continue;
      for (std::size_t x = 0; x < reps[c].size(); ++x)
        for (std::size_t y = x + 1; y < reps[c].size(); ++y)
          if (reps[c][x].size() == reps[c][y].size())
            probe_candidate(c, reps[c][x], c, reps[c][y]);
    }

    // across non-isomorphic classes in the group
    for (std::size_t a = 0; a < class_rep.size(); ++a)
      for (std::size_t b = a + 1; b < class_rep.size(); ++b)
        for (const auto &ra : reps[a])
          for (const auto &rb : reps[b])
            if (ra.size() == rb.size())
              probe_candidate(a, ra, b, rb);
  }
  return report;
}

std::string DistanceFuzzReport::to_text() const {
  std::ostringstream out;
  out << "distance-fuzz seed=" << options.seed << " count=" << options.count << " n=[" << options.n_min << ","
      << options.n_max << "]\n";
  out << "samples: " << samples.size() << "  oracle recomputation: " << oracle_checked << " checked, "
      << (oracle_all_match ? "all match" : "MISMATCH") << "\n";
  out << "groups with shared distance char poly: " << groups.size() << "\n";
  for (std::size_t i = 0; i < groups.size(); ++i) {
    const auto &g = groups[i];
    out << "  group " << i + 1 << ": " << g.sample_indices.size() << " samples, " << g.iso_classes.size()
        << " iso class" << (g.iso_classes.size() == 1 ? "" : "es") << " [";
    for (std::size_t c = 0; c < g.iso_classes.size(); ++c)
      out << (c ? " " : "") << g.iso_classes[c];
    out << "]  poly " << g.poly << "\n";
  }
  out << "candidates tested: " << candidates_tested << ", passed battery: " << batteries_passed << "\n";
  for (const auto &rec : passing)
    out << "  passed battery: " << rec.g1_graph6 << " B1=" << side_notation(rec.b1, '0') << " ~ "
        << rec.g2_graph6 << " B2=" << side_notation(rec.b2, '0') << "  complement: ok\n";
  if (counterexamples.empty()) {
    out << "conjecture counterexample candidates: none\n";
  } else {
    for (const auto &rec : counterexamples)
      out << "CONJECTURE COUNTEREXAMPLE CANDIDATE: " << rec.g1_graph6 << " B1=" << side_notation(rec.b1, '0')
          << " ~ " << rec.g2_graph6 << " B2=" << side_notation(rec.b2, '0')
          << "  (battery passed on the sets, failed on the complements)\n";
  }
  return out.str();
}

std::string DistanceFuzzReport::to_json() const {
  nlohmann::json j;
  j["seed"] = options.seed;
  j["count"] = options.count;
  j["n_min"] = options.n_min;
  j["n_max"] = options.n_max;
  j["samples"] = samples;
  j["oracle_checked"] = oracle_checked;
  j["oracle_all_match"] = oracle_all_match;
  j["groups"] = nlohmann::json::array();
  for (const auto &g : groups) {
    nlohmann::json jg;
    jg["samples"] = g.sample_indices;
    jg["iso_classes"] = g.iso_classes;
    jg["poly"] = g.poly;
    j["groups"].push_back(std::move(jg));
  }
  j["candidates_tested"] = candidates_tested;
  j["batteries_passed"] = batteries_passed;
  auto dump_record = [](const DistanceProbeRecord &rec) {
    nlohmann::json r;
    r["g1_graph6"] = rec.g1_graph6;
    r["g2_graph6"] = rec.g2_graph6;
    r["b1"] = rec.b1;
    r["b2"] = rec.b2;
    r["complement_passed"] = rec.complement_passed;
    return r;
  };
  j["passing"] = nlohmann::json::array();
  for (const auto &rec : passing)
    j["passing"].push_back(dump_record(rec));
  j["counterexample_candidates"] = nlohmann::json::array();
  for (const auto &rec : counterexamples)
    j["counterexample_candidates"].push_back(dump_record(rec));
  return j.dump(2);
}

} // namespace coalspec
