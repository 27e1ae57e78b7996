#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ahg/bounds.hpp"
#include "ahg/coloring.hpp"
#include "ahg/density.hpp"
#include "ahg/errors.hpp"
#include "ahg/experiment.hpp"
#include "ahg/formats.hpp"
#include "ahg/generators.hpp"
#include "ahg/sat_reduction.hpp"
#include "ahg/version.hpp"

namespace {

using namespace ahg;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;    // I/O or parse failure
constexpr int kExitPrecond = 2;  // precondition violation

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot open " << path << '\n';
    std::exit(kExitInput);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!(out << content)) {
    std::cerr << "error: cannot write " << path << '\n';
    std::exit(kExitInput);
  }
}

Graph load_graph(const std::string& path) { return parse_graph_text(read_input(path)); }

int classify(errc code) {
  switch (code) {
    case errc::parse_error:
    case errc::count_mismatch:
    case errc::not_three_cnf:
    case errc::self_loop:
    case errc::duplicate_edge:
      return kExitInput;
    default:
      return kExitPrecond;
  }
}

void print_vertices(std::ostream& out, const std::vector<int>& vs) {
  for (size_t i = 0; i < vs.size(); ++i) out << (i ? " " : "") << vs[i];
  out << '\n';
}

int cmd_mad(const std::string& path) {
  DensestResult r = densest_subgraph(load_graph(path));
  std::cout << "mad " << r.mad << '\n';
  std::cout << "density " << r.density << '\n';
  std::cout << "densest ";
  print_vertices(std::cout, r.subgraph_vertices);
  return kExitOk;
}

int cmd_check_ah(const std::string& path) {
  AhVerdict v = is_average_hereditary(load_graph(path));
  if (v.is_ah) {
    std::cout << "average-hereditary yes\n";
  } else {
    std::cout << "average-hereditary no\n";
    std::cout << "witness_density " << v.witness->density << '\n';
    std::cout << "witness ";
    print_vertices(std::cout, v.witness->subgraph_vertices);
  }
  return kExitOk;
}

int cmd_bounds(const std::string& path, bool exact, int limit, bool json, bool csv) {
  BoundsReport r = bounds_report(load_graph(path), exact, limit);
  ReportFormat fmt = json ? ReportFormat::json
                          : (csv ? ReportFormat::csv_row : ReportFormat::table);
  std::cout << serialize_report(r, fmt);
  return kExitOk;
}

int cmd_color(const std::string& path, bool exact, int limit) {
  Graph g = load_graph(path);
  DegeneracyOrder order = degeneracy_order(g);
  Coloring c = greedy_color(g, order.order);
  std::cout << "degeneracy " << order.degeneracy << '\n';
  std::cout << "greedy_colors " << c.num_colors << '\n';
  std::cout << "coloring ";
  print_vertices(std::cout, c.colors);
  if (exact) std::cout << "exact_chromatic " << exact_chromatic(g, limit) << '\n';
  return kExitOk;
}

int cmd_reduce(const std::string& cnf_path, const std::string& out_path) {
  CnfFormula f = parse_cnf(read_input(cnf_path));
  KarpGraph kg = karp_graph(f);
  long long C = static_cast<long long>(f.clauses.size());
  long long L = 2LL * f.num_vars;
  PredictedStats pred = predicted_stats(C, L);
  AhVerdict verdict = is_average_hereditary(kg.graph);

  std::ostringstream meta;
  meta << "{\n";
  meta << "  \"num_vars\": " << f.num_vars << ",\n";
  meta << "  \"num_clauses\": " << C << ",\n";
  meta << "  \"L\": " << L << ",\n";
  meta << "  \"vertices\": " << kg.graph.vertex_count() << ",\n";
  meta << "  \"edges\": " << kg.graph.edge_count() << ",\n";
  meta << "  \"predicted_vertices\": " << pred.vertices << ",\n";
  meta << "  \"predicted_edges_times_2\": " << pred.edges_times_2 << ",\n";
  meta << "  \"avg_degree\": \"" << average_degree(kg.graph) << "\",\n";
  meta << "  \"predicted_density\": \"" << pred.density << "\",\n";
  meta << "  \"is_ah\": " << (verdict.is_ah ? "true" : "false") << "\n";
  meta << "}\n";

  if (out_path.empty()) {
    std::cout << write_dimacs_graph(kg.graph);
    std::cerr << meta.str();
  } else {
    write_output(out_path, write_dimacs_graph(kg.graph));
    write_output(out_path + ".meta.json", meta.str());
  }
  return kExitOk;
}

int cmd_gen(const std::string& family, int n, int k, double p, int a, int b,
            std::uint64_t seed, const std::string& out_path) {
  Graph g;
  if (family == "tree")
    g = gen_random_tree(n, seed);
  else if (family == "regular")
    g = gen_random_regular(n, k, seed);
  else if (family == "gnp")
    g = gen_gnp(n, p, seed);
  else if (family == "clique-path")
    g = gen_clique_plus_path(a, b);
  else
    fail(errc::bad_params, "unknown family " + family);
  write_output(out_path, write_dimacs_graph(g));
  return kExitOk;
}

int cmd_compare(const CompareSpec& spec, int trials, std::uint64_t seed,
                const std::string& out_path) {
  std::string csv = rows_to_csv(run_compare(spec, trials, seed));
  write_output(out_path, csv);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"average-hereditary graph analysis"};
  app.require_subcommand(1);
  std::ostringstream version;
  version << kToolName << ' ' << kToolVersion << " (format " << kFormatVersion << ")";
  app.set_version_flag("--version", version.str());

  std::string graph_path, cnf_path, out_path, family;
  bool exact = false, json = false, csv = false;
  int limit = 30, n = 0, k = 0, a = 0, b = 0, trials = 0;
  double p = 0.0;
  std::uint64_t seed = 0;

  auto* mad_cmd = app.add_subcommand("mad", "maximum average degree and densest subgraph");
  mad_cmd->add_option("graph", graph_path, "graph file, or - for stdin")->required();

  auto* ah_cmd = app.add_subcommand("check-ah", "decide the average-hereditary property");
  ah_cmd->add_option("graph", graph_path, "graph file, or - for stdin")->required();

  auto* bounds_cmd = app.add_subcommand("bounds", "chromatic bound report");
  bounds_cmd->add_option("graph", graph_path, "graph file, or - for stdin")->required();
  bounds_cmd->add_flag("--exact", exact, "also run the exact chromatic oracle");
  bounds_cmd->add_option("--limit", limit, "exact oracle size limit");
  auto* json_flag = bounds_cmd->add_flag("--json", json, "JSON output");
  bounds_cmd->add_flag("--csv", csv, "CSV output")->excludes(json_flag);

  auto* color_cmd = app.add_subcommand("color", "degeneracy-order greedy coloring");
  color_cmd->add_option("graph", graph_path, "graph file, or - for stdin")->required();
  color_cmd->add_flag("--exact", exact, "also compute the exact chromatic number");
  color_cmd->add_option("--limit", limit, "exact oracle size limit");

  auto* reduce_cmd = app.add_subcommand("reduce", "3-CNF to 3-coloring instance");
  reduce_cmd->add_option("cnf", cnf_path, "DIMACS CNF file, or - for stdin")->required();
  reduce_cmd->add_option("-o,--output", out_path, "graph output path (metadata sidecar: <path>.meta.json)");

  auto* gen_cmd = app.add_subcommand("gen", "generate a graph family instance");
  gen_cmd->add_option("family", family, "tree | regular | gnp | clique-path")->required();
  gen_cmd->add_option("--n", n, "vertex count");
  gen_cmd->add_option("--k", k, "degree (regular)");
  gen_cmd->add_option("--p", p, "edge probability (gnp)");
  gen_cmd->add_option("--a", a, "clique size (clique-path)");
  gen_cmd->add_option("--b", b, "path length (clique-path)");
  gen_cmd->add_option("--seed", seed, "random seed");
  gen_cmd->add_option("-o,--output", out_path, "output path (default stdout)");

  auto* compare_cmd = app.add_subcommand("compare", "bound comparison over seeded trials");
  compare_cmd->add_option("family", family, "tree | regular | gnp | clique-path")->required();
  compare_cmd->add_option("--trials", trials, "number of trials")->required();
  compare_cmd->add_option("--seed", seed, "random seed")->required();
  compare_cmd->add_option("--n", n, "vertex count");
  compare_cmd->add_option("--k", k, "degree (regular)");
  compare_cmd->add_option("--p", p, "edge probability (gnp)");
  compare_cmd->add_option("--a", a, "clique size (clique-path)");
  compare_cmd->add_option("--b", b, "path length of the first trial (clique-path)");
  compare_cmd->add_flag("--exact", exact, "also run the exact chromatic oracle");
  compare_cmd->add_option("--limit", limit, "exact oracle size limit");
  compare_cmd->add_option("-o,--output", out_path, "CSV output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitPrecond;
  }

  try {
    if (mad_cmd->parsed()) return cmd_mad(graph_path);
    if (ah_cmd->parsed()) return cmd_check_ah(graph_path);
    if (bounds_cmd->parsed()) return cmd_bounds(graph_path, exact, limit, json, csv);
    if (color_cmd->parsed()) return cmd_color(graph_path, exact, limit);
    if (reduce_cmd->parsed()) return cmd_reduce(cnf_path, out_path);
    if (gen_cmd->parsed()) return cmd_gen(family, n, k, p, a, b, seed, out_path);
    if (compare_cmd->parsed()) {
      CompareSpec spec;
      spec.family = family;
      spec.n = n;
      spec.k = k;
      spec.p = p;
      spec.a = a;
      spec.b = b;
      spec.run_exact = exact;
      spec.exact_limit = limit;
      return cmd_compare(spec, trials, seed, out_path);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return classify(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitPrecond;
  }
  return kExitOk;
}
