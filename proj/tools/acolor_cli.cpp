// acolor: command line front end for the acyclic edge coloring library.
//
// Exit codes: 0 ok, 1 usage or malformed input, 2 improper coloring,
// 3 bichromatic cycle, 4 incomplete coloring, 5 planarity refuted,
// 6 search budget exhausted.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "acyclic.hpp"
#include "acyclic/formats.hpp"

namespace {

using namespace acyclic;

enum Exit { kOk = 0, kUsage = 1, kImproper = 2, kCycle = 3, kIncomplete = 4, kNotPlanar = 5, kBudget = 6 };

std::string read_text(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
  return {std::istreambuf_iterator<char>(in), {}};
}

void write_text(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

struct ColorArgs {
  std::string in = "-";
  std::string out = "-";
  std::string trace;
  std::string max_tier = "T4";
  std::string format = "json";
  int palette = 0;
  std::uint64_t budget = 50'000'000;
};

int run_color(const ColorArgs& a) {
  const Graph g = parse_edge_list(read_text(a.in));
  ColorerOptions opt;
  opt.max_tier = parse_tier(a.max_tier);
  opt.palette = a.palette;
  opt.exhaustive_budget = a.budget;
  const ColoringResult r = acolor(g, opt);
  if (a.format == "dot") {
    write_text(a.out, coloring_to_dot(g, r.coloring));
  } else if (a.format == "plain") {
    write_text(a.out, coloring_to_plain(g, r.coloring));
  } else {
    write_text(a.out, dump(coloring_to_json(g, r.coloring)));
  }
  if (!a.trace.empty()) write_text(a.trace, dump(trace_to_json(r.trace)));
  return kOk;
}

int run_verify(const std::string& in) {
  const LoadedColoring c = parse_coloring(read_text(in));
  const AcyclicityReport r = validate_acyclic(c.graph, c.coloring);
  std::cout << dump(report_to_json(r, !c.out_of_palette));
  if (c.out_of_palette) return kImproper;
  return exit_code(r);
}

int run_chi(const std::string& in, std::optional<int> k, std::uint64_t budget) {
  const Graph g = parse_edge_list(read_text(in));
  SearchBudget b;
  b.max_nodes = budget;
  if (k) {
    const Decision d = is_acyclically_k_colorable(g, *k, b);
    if (d.verdict == Verdict::Exhausted) {
      std::cout << "exhausted\n";
      return kBudget;
    }
    std::cout << (d.verdict == Verdict::Yes ? "true" : "false") << "\n";
    return kOk;
  }
  const ExactChi r = exact_chi_a(g, b);
  if (r.exhausted) {
    std::cout << "exhausted\n";
    return kBudget;
  }
  std::cout << r.value << "\n";
  return kOk;
}

int run_find_config(const std::string& in) {
  const Graph g = parse_edge_list(read_text(in));
  json out = configuration_to_json(find_configuration(g));
  out["schema"] = kConfigSchema;
  std::cout << dump(out);
  return kOk;
}

int run_audit(const std::string& in, const std::string& rotation) {
  const Graph g = parse_edge_list(read_text(in));
  std::istringstream rs(read_text(rotation));
  const RotationSystem rot = read_rotation(rs);
  std::cout << dump(audit_to_json(audit_triangulation(g, rot)));
  return kOk;
}

struct GenArgs {
  std::optional<int> apollonian, cycle, wheel, star, path, random_tree;
  std::string grid, platonic;
  std::uint64_t seed = 1;
  std::string out = "-";
  std::string rotation_out;
};

PlatonicSolid parse_solid(const std::string& name) {
  for (PlatonicSolid s : {PlatonicSolid::Tetrahedron, PlatonicSolid::Cube, PlatonicSolid::Octahedron,
                          PlatonicSolid::Dodecahedron, PlatonicSolid::Icosahedron}) {
    if (name == to_string(s)) return s;
  }
  throw ArgumentError("unknown platonic solid '" + name + "'");
}

int run_gen(const GenArgs& a) {
  std::optional<Embedded> e;
  if (a.apollonian) e = generate_apollonian(*a.apollonian, a.seed);
  else if (a.cycle) e = cycle_graph(*a.cycle);
  else if (a.wheel) e = wheel_graph(*a.wheel);
  else if (a.star) e = star_graph(*a.star);
  else if (a.path) e = path_graph(*a.path);
  else if (a.random_tree) e = embed_forest(random_tree(*a.random_tree, a.seed));
  else if (!a.platonic.empty()) e = platonic(parse_solid(a.platonic));
  else if (!a.grid.empty()) {
    int rows = 0, cols = 0;
    char x = 0;
    std::istringstream gs(a.grid);
    if (!(gs >> rows >> x >> cols) || (x != 'x' && x != 'X')) throw ArgumentError("--grid expects RxC");
    e = grid_graph(rows, cols);
  } else {
    throw ArgumentError("gen needs one of --apollonian, --cycle, --wheel, --grid, --star, --path, --platonic, --random-tree");
  }
  write_text(a.out, format_edge_list(e->graph));
  if (!a.rotation_out.empty()) {
    std::ostringstream rs;
    write_rotation(rs, e->rotation);
    write_text(a.rotation_out, rs.str());
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acyclic edge coloring of planar graphs"};
  app.require_subcommand(1);

  ColorArgs color;
  auto* c = app.add_subcommand("color", "Color an edge list with at most Delta+10 colors");
  c->add_option("--in", color.in, "Edge list, - for stdin");
  c->add_option("--out", color.out, "Output path, - for stdout");
  c->add_option("--trace", color.trace, "Write the reduction trace as JSON");
  c->add_option("--max-tier", color.max_tier, "Highest extension tier allowed (T1..T4)");
  c->add_option("--format", color.format, "Output format")->check(CLI::IsMember({"json", "dot", "plain"}));
  c->add_option("--k", color.palette, "Palette size (default Delta+10)")->check(CLI::NonNegativeNumber);
  c->add_option("--budget", color.budget, "Node budget of the exhaustive tier");

  std::string verify_in = "-";
  auto* v = app.add_subcommand("verify", "Check a coloring JSON for acyclicity");
  v->add_option("--in", verify_in, "Coloring JSON, - for stdin");

  std::string chi_in = "-";
  std::optional<int> chi_k;
  std::uint64_t chi_budget = 200'000'000;
  auto* x = app.add_subcommand("chi-a", "Exact acyclic chromatic index by exhaustive search");
  x->add_option("--in", chi_in, "Edge list, - for stdin");
  x->add_option("--k", chi_k, "Only decide colorability with k colors")->check(CLI::PositiveNumber);
  x->add_option("--budget", chi_budget, "Maximum search nodes");

  std::string config_in = "-";
  auto* f = app.add_subcommand("find-config", "Report an unavoidable configuration");
  f->add_option("--in", config_in, "Edge list, - for stdin");

  std::string audit_in = "-";
  std::string audit_rot;
  auto* d = app.add_subcommand("audit", "Audit the discharging argument on a triangulation");
  d->add_option("--in", audit_in, "Edge list, - for stdin");
  d->add_option("--rotation", audit_rot, "Rotation system file")->required();

  GenArgs gen;
  auto* g = app.add_subcommand("gen", "Generate a planar test graph");
  g->add_option("--apollonian", gen.apollonian, "Apollonian triangulation on N vertices");
  g->add_option("--cycle", gen.cycle, "Cycle C_N");
  g->add_option("--wheel", gen.wheel, "Wheel on N vertices");
  g->add_option("--grid", gen.grid, "Grid RxC");
  g->add_option("--star", gen.star, "Star with N leaves");
  g->add_option("--path", gen.path, "Path on N vertices");
  g->add_option("--platonic", gen.platonic, "tetrahedron, cube, octahedron, dodecahedron or icosahedron");
  g->add_option("--random-tree", gen.random_tree, "Uniform random labeled tree on N vertices");
  g->add_option("--seed", gen.seed, "Random seed");
  g->add_option("--out", gen.out, "Edge list output, - for stdout");
  g->add_option("--rotation-out", gen.rotation_out, "Write the rotation system here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (*c) return run_color(color);
    if (*v) return run_verify(verify_in);
    if (*x) return run_chi(chi_in, chi_k, chi_budget);
    if (*f) return run_find_config(config_in);
    if (*d) return run_audit(audit_in, audit_rot);
    if (*g) return run_gen(gen);
  } catch (const NotPlanarEvidence& e) {
    std::cerr << "acolor: " << e.what() << "\n";
    return kNotPlanar;
  } catch (const BudgetExhausted& e) {
    std::cerr << "acolor: " << e.what() << "\n";
    return kBudget;
  } catch (const std::exception& e) {
    std::cerr << "acolor: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
