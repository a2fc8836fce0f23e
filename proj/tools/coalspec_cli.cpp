// Command-line surface over the library: characteristic polynomials,
// coalescing families, complement reconstruction, corpus search, the
// distance-matrix fuzzer and the normalized-adjacency demo.
//
// Exit codes: 0 ok, 2 fuzzer found a counterexample candidate, 64 usage
// error, 65 data error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "coalspec/coalescing.hpp"
#include "coalspec/complement.hpp"
#include "coalspec/search.hpp"

using namespace coalspec;

namespace {

constexpr int exit_usage = 64;
constexpr int exit_data = 65;
constexpr int exit_counterexample = 2;

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// One graph from an inline graph6 record or a file (graph6 line or
// edge-list JSON object).
Graph load_graph(const std::string &graph6, const std::string &path) {
  if (!graph6.empty() && !path.empty())
    throw error("give either an inline graph6 record or an input file, not both");
  if (!graph6.empty())
    return parse_graph6(graph6);
  if (path.empty())
    throw error("no input graph given");
  std::string text = read_file(path);
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos)
    throw error(path + ": empty input");
  if (text[first] == '{')
    return parse_edge_json(text);
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r')
      line.pop_back();
    if (!line.empty())
      return parse_graph6(line);
  }
  throw error(path + ": no graph record found");
}

std::vector<std::pair<std::string, Graph>> load_graph_list(const std::string &graph6, const std::string &path) {
  std::vector<std::pair<std::string, Graph>> out;
  if (!graph6.empty()) {
    out.emplace_back(graph6, parse_graph6(graph6));
    return out;
  }
  if (path.empty())
    throw error("no input graph given");
  std::string text = read_file(path);
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    out.emplace_back(path, parse_edge_json(text));
    return out;
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
    out.emplace_back(path + ":" + std::to_string(lineno), parse_graph6(line));
  }
  if (out.empty())
    throw error(path + ": no graph records found");
  return out;
}

std::vector<int> parse_set(const std::string &text) {
  std::vector<int> out;
  if (text.empty())
    return out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      throw error("malformed vertex set \"" + text + "\"");
    out.push_back(std::stoi(item));
  }
  for (std::size_t i = 1; i < out.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (out[i] == out[j])
        throw error("duplicate vertex " + std::to_string(out[i]) + " in set");
  std::sort(out.begin(), out.end());
  return out;
}

nlohmann::json family_json(const FamilyTable &t) {
  nlohmann::json j;
  j["n"] = t.n;
  j["set_size"] = t.set_size;
  j["q"] = t.q.str();
  j["polys"] = nlohmann::json::array();
  for (const auto &p : t.polys)
    j["polys"].push_back(p.coeff_strings());
  return j;
}

void print_family_text(std::ostream &out, const FamilyTable &t) {
  for (std::size_t k = 0; k < t.polys.size(); ++k)
    out << "f_" << k << " = " << t.polys[k].str() << "\n";
}

int default_workers() {
  if (const char *env = std::getenv("COALSPEC_WORKERS")) {
    int n = std::atoi(env);
    if (n >= 1)
      return n;
  }
  return 1;
}

struct CliOptions {
  std::string graph6, input;
  std::string graph6_b, input_b;
  std::string matrix = "lq";
  std::string q_text;
  std::string set_text, set_text_b, attach_set;
  std::string format = "text";
  std::string attach_graph6;
  int root = 0;
  int v1 = -1, v2 = -1;
  int probes = 20;
  std::uint64_t seed = 1;
  int count = 1000;
  int n_min = 4, n_max = 7;
  int max_n = 10;
  bool dump_weights = false;
  std::vector<std::string> corpus_paths;
};

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"exact characteristic polynomials and coalescing cospectrality for qD + A"};
  app.require_subcommand(1);
  CliOptions opt;

  auto add_input = [&](CLI::App *cmd) {
    cmd->add_option("--graph6", opt.graph6, "inline graph6 record");
    cmd->add_option("--input", opt.input, "input file (graph6 lines or edge-list JSON)");
  };
  auto add_format = [&](CLI::App *cmd) {
    cmd->add_option("--format", opt.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  };
  auto add_q = [&](CLI::App *cmd, bool required) {
    auto *o = cmd->add_option("--q", opt.q_text, "rational q of L_q = qD + A (e.g. 1, -1, 1/2)");
    if (required)
      o->required();
  };

  auto *cmd_charpoly = app.add_subcommand("charpoly", "characteristic polynomial of a graph matrix");
  add_input(cmd_charpoly);
  add_format(cmd_charpoly);
  cmd_charpoly->add_option("--matrix", opt.matrix, "lq, distance or normalized")
      ->check(CLI::IsMember({"lq", "distance", "normalized"}));
  add_q(cmd_charpoly, false);

  auto *cmd_families = app.add_subcommand("families", "the family polynomials f_0..f_{|B|} of (H, B)");
  add_input(cmd_families);
  add_format(cmd_families);
  add_q(cmd_families, true);
  cmd_families->add_option("--set", opt.set_text, "comma-separated vertex ids of B");

  auto *cmd_coalesce = app.add_subcommand("coalesce", "attach a rooted graph at every vertex of B");
  add_input(cmd_coalesce);
  add_format(cmd_coalesce);
  cmd_coalesce->add_option("--set", opt.set_text, "comma-separated vertex ids of B");
  cmd_coalesce->add_option("--attach", opt.attach_graph6, "graph6 of the rooted graph G")->required();
  cmd_coalesce->add_option("--root", opt.root, "root vertex of G");

  auto *cmd_check = app.add_subcommand("check-pair", "decide coalescing cospectrality of (H1,B1), (H2,B2)");
  cmd_check->add_option("--graph6-1", opt.graph6, "graph6 of H1")->required();
  cmd_check->add_option("--graph6-2", opt.graph6_b, "graph6 of H2")->required();
  cmd_check->add_option("--set1", opt.set_text, "vertex ids of B1");
  cmd_check->add_option("--set2", opt.set_text_b, "vertex ids of B2");
  add_format(cmd_check);
  add_q(cmd_check, true);

  auto *cmd_complement = app.add_subcommand("complement", "reconstruct the family of (H, V\\B) from (H, B)");
  add_input(cmd_complement);
  add_format(cmd_complement);
  add_q(cmd_complement, true);
  cmd_complement->add_option("--set", opt.set_text, "comma-separated vertex ids of B");
  cmd_complement->add_flag("--dump-weights", opt.dump_weights, "emit the omega weight table as JSON");

  auto *cmd_twostep = app.add_subcommand("twostep", "two-set coalescing check with probe battery");
  cmd_twostep->add_option("--graph6-1", opt.graph6, "graph6 of H1")->required();
  cmd_twostep->add_option("--graph6-2", opt.graph6_b, "graph6 of H2")->required();
  cmd_twostep->add_option("--set1", opt.set_text, "vertex ids of B1");
  cmd_twostep->add_option("--set2", opt.set_text_b, "vertex ids of B2");
  cmd_twostep->add_option("--v1", opt.v1, "extra vertex of H1")->required();
  cmd_twostep->add_option("--v2", opt.v2, "extra vertex of H2")->required();
  cmd_twostep->add_option("--probes", opt.probes, "number of sampled (G, G-hat) pairs");
  cmd_twostep->add_option("--seed", opt.seed, "probe sampling seed");
  add_format(cmd_twostep);
  add_q(cmd_twostep, true);

  auto *cmd_search = app.add_subcommand(
      "search", "find coalescing cospectral pairs across a corpus (COALSPEC_WORKERS sets the pool size)");
  cmd_search->add_option("corpus", opt.corpus_paths, "graph6 or edge-list JSON corpus files")->required();
  add_format(cmd_search);
  add_q(cmd_search, true);
  cmd_search->add_option("--max-n", opt.max_n, "reject corpus graphs above this order");

  auto *cmd_fuzz = app.add_subcommand("fuzz-distance", "seeded hunt for distance-matrix conjecture counterexamples");
  cmd_fuzz->add_option("--seed", opt.seed, "generator seed");
  cmd_fuzz->add_option("--count", opt.count, "number of sampled graphs");
  cmd_fuzz->add_option("--n-min", opt.n_min, "minimum order");
  cmd_fuzz->add_option("--n-max", opt.n_max, "maximum order");
  add_format(cmd_fuzz);

  auto *cmd_demo = app.add_subcommand("demo-normalized", "normalized-adjacency counterexample demo");
  add_format(cmd_demo);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? 0 : exit_usage;
  }

  const bool json_out = opt.format == "json";
  try {
    if (cmd_charpoly->parsed()) {
      if ((opt.matrix == "lq") != !opt.q_text.empty()) {
        std::cerr << "charpoly: --q is required for --matrix lq and rejected otherwise\n";
        return exit_usage;
      }
      MatrixKind kind = distance_kind{};
      if (opt.matrix == "lq")
        kind = lq_kind{Rational::parse(opt.q_text)};
      else if (opt.matrix == "normalized")
        kind = normalized_kind{};
      auto graphs = load_graph_list(opt.graph6, opt.input);
      nlohmann::json results = nlohmann::json::array();
      for (const auto &[id, g] : graphs) {
        Polynomial p = char_poly_for(g, kind);
        if (json_out) {
          nlohmann::json r;
          r["graph"] = id;
          r["charpoly"] = p.coeff_strings();
          results.push_back(std::move(r));
        } else if (graphs.size() == 1) {
          std::cout << p.str() << "\n";
        } else {
          std::cout << id << "  " << p.str() << "\n";
        }
      }
      if (json_out)
        std::cout << results.dump(2) << "\n";
      return 0;
    }

    if (cmd_families->parsed()) {
      const Graph h = load_graph(opt.graph6, opt.input);
      const FamilyTable t = family(h, parse_set(opt.set_text), Rational::parse(opt.q_text));
      if (json_out)
        std::cout << family_json(t).dump(2) << "\n";
      else
        print_family_text(std::cout, t);
      return 0;
    }

    if (cmd_coalesce->parsed()) {
      const Graph h = load_graph(opt.graph6, opt.input);
      const RootedGraph g(parse_graph6(opt.attach_graph6), opt.root);
      const CoalesceResult result = coalesce(CoalescentPair(h, parse_set(opt.set_text)), g);
      if (json_out) {
        nlohmann::json j;
        j["graph6"] = serialize_graph6(result.graph);
        j["n"] = result.graph.vertex_count();
        j["edges"] = nlohmann::json::parse(serialize_edge_json(result.graph))["edges"];
        j["copy_maps"] = result.copy_maps;
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << serialize_graph6(result.graph) << "\n";
        for (std::size_t c = 0; c < result.copy_maps.size(); ++c) {
          std::cout << "copy " << c << ":";
          for (std::size_t v = 0; v < result.copy_maps[c].size(); ++v)
            std::cout << " " << v << "->" << result.copy_maps[c][v];
          std::cout << "\n";
        }
      }
      return 0;
    }

    if (cmd_check->parsed()) {
      const Graph h1 = parse_graph6(opt.graph6), h2 = parse_graph6(opt.graph6_b);
      const auto b1 = parse_set(opt.set_text), b2 = parse_set(opt.set_text_b);
      const Rational q = Rational::parse(opt.q_text);
      const FamilyTable t1 = family(h1, b1, q), t2 = family(h2, b2, q);
      const bool equal = coalescing_cospectral(t1, t2);
      const auto mt = verify_main_theorem(CoalescentPair(h1, b1), CoalescentPair(h2, b2), q);
      if (json_out) {
        nlohmann::json j;
        j["coalescing_cospectral"] = equal;
        j["family_1"] = family_json(t1);
        j["family_2"] = family_json(t2);
        j["complement_families_equal"] = mt.complement_families_equal;
        j["main_theorem_holds"] = mt.holds();
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "coalescing cospectral: " << (equal ? "yes" : "no") << "\n";
        std::cout << "complement families equal: " << (mt.complement_families_equal ? "yes" : "no") << "\n";
        std::cout << "main theorem holds on this pair: " << (mt.holds() ? "yes" : "NO") << "\n";
      }
      return 0;
    }

    if (cmd_complement->parsed()) {
      const Graph h = load_graph(opt.graph6, opt.input);
      const auto b = parse_set(opt.set_text);
      const Rational q = Rational::parse(opt.q_text);
      const FamilyTable t = family(h, b, q);
      const FamilyTable comp = complement_family(t);
      const auto comp_set = complement_set(h.vertex_count(), b);
      if (json_out) {
        nlohmann::json j;
        j["complement_set"] = comp_set;
        j["family"] = family_json(comp);
        if (opt.dump_weights)
          j["weights"] = nlohmann::json::parse(weight_table_json(solve_weights(extract_coefficients(t))));
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "complement set:";
        for (int v : comp_set)
          std::cout << " " << v;
        std::cout << "\n";
        print_family_text(std::cout, comp);
        if (opt.dump_weights)
          std::cout << weight_table_json(solve_weights(extract_coefficients(t))) << "\n";
      }
      return 0;
    }

    if (cmd_twostep->parsed()) {
      const Graph h1 = parse_graph6(opt.graph6), h2 = parse_graph6(opt.graph6_b);
      TwoStepOptions two;
      two.probe_count = opt.probes;
      two.seed = opt.seed;
      const TwoStepReport r = twostep_check(h1, parse_set(opt.set_text), opt.v1, h2,
                                            parse_set(opt.set_text_b), opt.v2,
                                            Rational::parse(opt.q_text), two);
      if (json_out) {
        nlohmann::json j;
        j["sets_cospectral"] = r.sets_cospectral;
        j["vertices_cospectral"] = r.vertices_cospectral;
        j["union_cospectral"] = r.union_cospectral;
        j["hypotheses_hold"] = r.hypotheses_hold();
        j["probes_run"] = r.probes_run;
        j["probes_passed"] = r.probes_passed;
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "(H1,B1) ~ (H2,B2): " << (r.sets_cospectral ? "yes" : "no") << "\n";
        std::cout << "(H1,{v1}) ~ (H2,{v2}): " << (r.vertices_cospectral ? "yes" : "no") << "\n";
        std::cout << "(H1,B1+v1) ~ (H2,B2+v2): " << (r.union_cospectral ? "yes" : "no") << "\n";
        if (r.hypotheses_hold())
          std::cout << "probes: " << r.probes_passed << "/" << r.probes_run << " cospectral\n";
        else
          std::cout << "probes: skipped (hypotheses do not hold)\n";
      }
      return 0;
    }

    if (cmd_search->parsed()) {
      Corpus corpus;
      for (const auto &path : opt.corpus_paths) {
        Corpus part = load_corpus_file(path, opt.max_n);
        corpus.entries.insert(corpus.entries.end(), part.entries.begin(), part.entries.end());
        corpus.skipped.insert(corpus.skipped.end(), part.skipped.begin(), part.skipped.end());
      }
      SearchOptions options;
      options.max_n = opt.max_n;
      options.workers = default_workers();
      const auto reports = find_pairs(corpus, Rational::parse(opt.q_text), options);
      std::cout << (json_out ? pair_reports_json(reports, corpus.skipped)
                             : pair_reports_text(reports, corpus.skipped));
      if (json_out)
        std::cout << "\n";
      return 0;
    }

    if (cmd_fuzz->parsed()) {
      DistanceFuzzOptions options;
      options.seed = opt.seed;
      options.count = opt.count;
      options.n_min = opt.n_min;
      options.n_max = opt.n_max;
      const DistanceFuzzReport report = distance_fuzz(options);
      std::cout << (json_out ? report.to_json() + "\n" : report.to_text());
      return report.counterexample_found() ? exit_counterexample : 0;
    }

    if (cmd_demo->parsed()) {
      const NormalizedDemoReport report = normalized_demo();
      std::cout << (json_out ? report.to_json() + "\n" : report.to_text());
      return 0;
    }
  } catch (const error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_data;
  }
  return 0;
}
