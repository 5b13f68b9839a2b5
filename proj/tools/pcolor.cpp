// Command-line front end for the packing-coloring toolkit.
//
// One binary, subcommand style. Graph input comes uniformly from --g6,
// --g6-file, --edges, or --family; subcommands that need a graph and get no
// source flag read a single graph6 line from standard input, which makes
//   pcolor gen --family H3 | pcolor classify
// work. Exit status: 0 success, 1 theorem mismatch, 2 usage/input error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pcolor/pcolor.hpp"

namespace {

struct InputFlags {
  std::string g6;
  std::string g6_file;
  std::string edges_file;
  std::string family;
};

void add_input_flags(CLI::App* cmd, InputFlags& in) {
  auto* a = cmd->add_option("--g6", in.g6, "graph6 string");
  auto* b = cmd->add_option("--g6-file", in.g6_file,
                            "file with a graph6 line (first graph is used)");
  auto* c = cmd->add_option("--edges", in.edges_file,
                            "edge-list file: optional 'n <order>' header, "
                            "then 'u v' lines, '#' comments");
  auto* d = cmd->add_option("--family", in.family,
                            "family id, e.g. K4, H7, C(9), F1(l=5), "
                            "F5(l=2,a=P4,b=C4)");
  a->excludes(b)->excludes(c)->excludes(d);
  b->excludes(c)->excludes(d);
  c->excludes(d);
}

std::string read_stdin_graph6() {
  std::string line;
  while (std::getline(std::cin, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    return line;
  }
  throw pcolor::error("no graph6 line on standard input");
}

pcolor::Graph load_graph(const InputFlags& in) {
  if (!in.g6.empty()) return pcolor::parse_graph6(in.g6);
  if (!in.g6_file.empty()) {
    std::vector<pcolor::Graph> graphs = pcolor::load_graph6_corpus(in.g6_file);
    if (graphs.empty())
      throw pcolor::error("no graphs in '" + in.g6_file + "'");
    return graphs.front();
  }
  if (!in.edges_file.empty()) {
    std::ifstream f(in.edges_file);
    if (!f) throw pcolor::error("cannot open '" + in.edges_file + "'");
    std::stringstream buffer;
    buffer << f.rdbuf();
    return pcolor::parse_edge_list(buffer.str());
  }
  if (!in.family.empty())
    return pcolor::generate(pcolor::FamilyId::parse(in.family));
  return pcolor::parse_graph6(read_stdin_graph6());
}

pcolor::Universe parse_universe(const std::string& name) {
  if (name == "vertex" || name == "vertex_critical")
    return pcolor::Universe::vertex_critical;
  if (name == "subgraph" || name == "subgraph_critical" || name == "critical")
    return pcolor::Universe::critical;
  throw pcolor::error("unknown universe '" + name +
                      "' (expected vertex or subgraph)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"packing-coloring toolkit: exact chi_rho, criticality, "
               "family classification, chi_rho=3 certificates, and "
               "exhaustive theorem verification"};
  app.require_subcommand(1);

  InputFlags in;
  int k = 0;
  std::string universe = "vertex";
  int max_n = 7;
  std::string theorem;
  std::string corpus;
  int jobs = 1;
  if (const char* env = std::getenv("PCOLOR_JOBS")) jobs = std::atoi(env);

  CLI::App* chi = app.add_subcommand("chi", "chi_rho with a witness coloring");
  add_input_flags(chi, in);

  CLI::App* color =
      app.add_subcommand("color", "a k-packing coloring, or NONE");
  add_input_flags(color, in);
  color->add_option("--k", k, "number of colors")->required();

  CLI::App* critical =
      app.add_subcommand("critical", "full criticality report");
  add_input_flags(critical, in);

  CLI::App* classify = app.add_subcommand(
      "classify", "family ids isomorphic to the input, or NONE");
  add_input_flags(classify, in);
  classify->add_option("--universe", universe, "vertex | subgraph");

  CLI::App* g3 = app.add_subcommand(
      "g3", "chi_rho=3 structure certificate, or NOT-3");
  add_input_flags(g3, in);

  CLI::App* gen = app.add_subcommand("gen", "emit a family member as graph6");
  gen->add_option("--family", in.family, "family id")->required();

  CLI::App* list =
      app.add_subcommand("list", "all universe members up to --max-n");
  list->add_option("--universe", universe, "vertex | subgraph");
  list->add_option("--max-n", max_n, "largest order to list");

  CLI::App* verify =
      app.add_subcommand("verify", "exhaustive theorem verification");
  verify->add_option("--theorem", theorem, "vc4 | c4 | g3 | formulas")
      ->required();
  verify->add_option("--max-n", max_n, "largest order to sweep");
  verify->add_option("--corpus", corpus,
                     "graph6 file replacing in-process enumeration");
  verify->add_option("--jobs", jobs, "worker threads")
      ->envname("PCOLOR_JOBS");

  CLI::App* render = app.add_subcommand("render", "emit DOT");
  add_input_flags(render, in);
  render->add_option("--k", k, "also color with k colors when possible");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (chi->parsed()) {
      pcolor::ChiRhoResult r = pcolor::chi_rho(load_graph(in));
      std::cout << "chi_rho = " << r.value << "\n" << r.witness.to_text();
    } else if (color->parsed()) {
      pcolor::Graph g = load_graph(in);
      std::optional<pcolor::PackingColoring> c =
          pcolor::find_k_packing_coloring(g, k);
      if (c)
        std::cout << c->to_text();
      else
        std::cout << "NONE\n";
    } else if (critical->parsed()) {
      std::cout << pcolor::analyze_criticality(load_graph(in)).to_text();
    } else if (classify->parsed()) {
      pcolor::ClassificationResult r =
          pcolor::classify(load_graph(in), parse_universe(universe));
      if (r.matches.empty()) std::cout << "NONE\n";
      for (const auto& [id, map] : r.matches)
        std::cout << id.to_string() << "\n";
    } else if (g3->parsed()) {
      std::optional<pcolor::G3Certificate> cert =
          pcolor::recognize_g3(load_graph(in));
      if (cert)
        std::cout << cert->to_text();
      else
        std::cout << "NOT-3\n";
    } else if (gen->parsed()) {
      std::cout << pcolor::to_graph6(
                       pcolor::generate(pcolor::FamilyId::parse(in.family)))
                << "\n";
    } else if (list->parsed()) {
      for (const auto& [id, g] :
           pcolor::list_members(parse_universe(universe), max_n))
        std::cout << pcolor::to_graph6(g) << " # " << id.to_string() << "\n";
    } else if (verify->parsed()) {
      pcolor::VerifyOptions options;
      options.max_n = max_n;
      options.jobs = jobs;
      options.corpus = corpus;
      pcolor::TheoremReport report;
      if (theorem == "vc4")
        report = pcolor::verify_vertex_critical_theorem(options);
      else if (theorem == "c4")
        report = pcolor::verify_critical_theorem(options);
      else if (theorem == "g3")
        report = pcolor::verify_g3_recognizer(options);
      else if (theorem == "formulas")
        report = pcolor::verify_formula_tables();
      else
        throw pcolor::error("unknown theorem '" + theorem +
                            "' (expected vc4, c4, g3, or formulas)");
      std::cout << report.to_text();
      return report.ok() ? 0 : 1;
    } else if (render->parsed()) {
      pcolor::Graph g = load_graph(in);
      if (k > 0) {
        std::optional<pcolor::PackingColoring> c =
            pcolor::find_k_packing_coloring(g, k);
        std::map<pcolor::Vertex, int> colors;
        if (c) colors = c->assignment;
        std::cout << pcolor::to_dot(g, c ? &colors : nullptr);
      } else {
        std::cout << pcolor::to_dot(g);
      }
    }
  } catch (const pcolor::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
