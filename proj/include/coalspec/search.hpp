#ifndef COALSPEC_SEARCH_HPP
#define COALSPEC_SEARCH_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "coalspec/coalescing.hpp"
#include "coalspec/complement.hpp"

namespace coalspec {

struct CorpusEntry {
  Graph graph;
  std::string source; // file name (or label) the record came from
  int line = 0;       // 1-based line / array index
  std::string id() const { return source + ":" + std::to_string(line); }
};

// Ordered graphs with provenance. Unreadable or oversized records are
// skipped and noted rather than aborting the load.
struct Corpus {
  std::vector<CorpusEntry> entries;
  std::vector<std::string> skipped;
};

Corpus load_corpus_text(const std::string &text, const std::string &name, int max_n = 10);
Corpus load_corpus_file(const std::string &path, int max_n = 10);

// Every p_{H,S} of one graph, indexed by the bitmask of S. 2^n polynomials;
// guarded to n <= 10.
std::vector<Polynomial> subset_table(const Graph &g, const Rational &q);

// One matched class of coalescing-cospectral sets between two graphs, up to
// automorphisms on each side. The complement class is implied rather than
// re-listed.
struct PairClass {
  std::vector<int> b1, b2;    // orbit representatives, lexicographically least
  std::string notation;       // compact "12:bd" form; "-" for an empty side
  long orbit_size_1 = 1;      // subsets automorphic to b1
  long orbit_size_2 = 1;
  std::string complement_notation; // class implied via complementation
};

struct PairReport {
  int index1 = 0, index2 = 0; // corpus positions
  std::string g1_id, g2_id;
  std::string g1_graph6, g2_graph6;
  Rational q;
  std::vector<PairClass> classes;
  bool complement_verified = false; // every class passed verify_main_theorem
};

struct SearchOptions {
  int max_n = 10;
  int workers = 1; // candidate pairs may be processed by a pool; output order is canonical
};

// Finds all coalescing-cospectral set classes between equal-order,
// plain-cospectral corpus graphs. Classes are deduplicated by automorphism
// orbits on each side and by complementation (only the smaller-size half is
// listed). Output is deterministic: corpus order, then size, then
// lexicographic sets.
std::vector<PairReport> find_pairs(const Corpus &corpus, const Rational &q, const SearchOptions &options = {});

std::string pair_reports_json(const std::vector<PairReport> &reports, const std::vector<std::string> &skipped);
std::string pair_reports_text(const std::vector<PairReport> &reports, const std::vector<std::string> &skipped);

// Adjacency-only structural consequence: for a q = 0 coalescing-cospectral
// pair, the induced subgraphs on the sets are cospectral, as are those on
// the complements. A false return is an internal alarm, not a test of the
// inputs.
bool induced_check(const Graph &h1, const std::vector<int> &b1, const Graph &h2, const std::vector<int> &b2);

struct UnionProbeReport {
  bool a_cospectral = false;     // (A1 : A2)
  bool b_cospectral = false;     // (B1 : B2)
  bool union_cospectral = false; // (A1 u B1 : A2 u B2)
};

// No implication is asserted between the three verdicts; all combinations
// occur.
UnionProbeReport union_probe(const Graph &h1, const std::vector<int> &a1, const std::vector<int> &b1,
                             const Graph &h2, const std::vector<int> &a2, const std::vector<int> &b2,
                             const Rational &q);

struct NormalizedDemoReport {
  std::string g1_graph6, g2_graph6;
  Polynomial normalized_before_1, normalized_before_2;
  Polynomial normalized_after_1, normalized_after_2;
  Polynomial adjacency_after_1, adjacency_after_2; // L_0 control, informational
  bool normalized_before_equal = false;
  bool normalized_after_equal = false;
  bool adjacency_after_equal = false;
  std::string to_text() const;
  std::string to_json() const;
};

// Two equal-order complete bipartite graphs share the normalized spectrum;
// after coalescing a pendant edge at every vertex they no longer do. The
// complement machinery therefore has no normalized-adjacency analogue.
NormalizedDemoReport normalized_demo();

struct DistanceFuzzOptions {
  std::uint64_t seed = 1;
  int count = 1000;
  int n_min = 4;
  int n_max = 7;
};

// One candidate set pair tested between two (possibly equal) graphs of a
// distance-cospectral group.
struct DistanceProbeRecord {
  std::string g1_graph6, g2_graph6;
  std::vector<int> b1, b2;
  bool passed_battery = false;
  std::string failed_probe;        // name of the first failing probe, if any
  bool complement_checked = false;
  bool complement_passed = false;  // meaningful when passed_battery
};

struct DistanceFuzzGroup {
  std::vector<int> sample_indices;       // samples sharing the distance char poly
  std::vector<std::string> iso_classes;  // canonical graph6 per isomorphism class
  std::string poly;
};

struct DistanceFuzzReport {
  DistanceFuzzOptions options;
  std::vector<std::string> samples;     // graph6, in generation order
  int oracle_checked = 0;
  bool oracle_all_match = true;
  std::vector<DistanceFuzzGroup> groups;
  int candidates_tested = 0;
  int batteries_passed = 0;
  std::vector<DistanceProbeRecord> passing;        // battery passed (complement verdict inside)
  std::vector<DistanceProbeRecord> counterexamples; // battery passed, complement failed
  bool counterexample_found() const { return !counterexamples.empty(); }
  std::string to_text() const;
  std::string to_json() const;
};

// Seeded, reproducible hunt for counterexamples to the distance-matrix
// complement conjecture. Samples random connected graphs, groups them by
// distance characteristic polynomial, and probes candidate (B1, B2) pairs
// by direct coalescing with the battery rooted K2, K_{1,2}, K_{1,3} and
// P3-at-an-end; the battery is a finite surrogate, so results are reported
// as "passed battery", never as proven. Pairs passing every probe are then
// probed on the complement sets; a complement failure is the counterexample
// candidate. Every sampled distance polynomial is recomputed through the
// interpolation route as an internal oracle.
DistanceFuzzReport distance_fuzz(const DistanceFuzzOptions &options);

} // namespace coalspec

#endif
