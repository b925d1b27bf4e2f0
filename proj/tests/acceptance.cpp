// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any fails.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>
#include <unistd.h>

#include "acyclic.hpp"
#include "acyclic/formats.hpp"
#include "support/corpus.hpp"
#include "support/cycle_oracle.hpp"
#include "support/graph_enum.hpp"
#include "support/patch.hpp"

namespace {

using namespace acyclic;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Check {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

const std::vector<support::CorpusEntry>& corpus() {
  static const std::vector<support::CorpusEntry> c = support::planar_corpus();
  return c;
}

Graph complete(int n) {
  std::vector<Edge> edges;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) edges.push_back({a, b});
  return Graph(n, edges);
}

Check bound_on_corpus() {
  Check c;
  const auto start = Clock::now();
  for (const auto& e : corpus()) {
    try {
      const ColoringResult r = acolor(e.graph);
      const AcyclicityReport rep = validate_acyclic(e.graph, r.coloring);
      if (!rep.acyclic()) c.fail(e.name + ": coloring rejected");
      if (rep.max_color > e.graph.max_degree() + 10) c.fail(e.name + ": too many colors");
    } catch (const std::exception& ex) {
      c.fail(e.name + ": " + ex.what());
    }
  }
  const double t = seconds_since(start);
  if (t >= 60) c.fail("took " + std::to_string(t) + " s");
  if (c.ok) c.detail = std::to_string(corpus().size()) + " graphs in " + std::to_string(t) + " s";
  return c;
}

Check oracle_values() {
  Check c;
  int cases = 0;
  auto expect = [&](const std::string& name, const Graph& g, int want) {
    ++cases;
    const auto start = Clock::now();
    const ExactChi r = exact_chi_a(g);
    const double t = seconds_since(start);
    if (r.exhausted || r.value != want) c.fail(name + ": got " + std::to_string(r.value));
    if (t >= 5) c.fail(name + ": took " + std::to_string(t) + " s");
  };
  for (int n = 3; n <= 8; ++n) expect("C" + std::to_string(n), cycle_graph(n).graph, 3);
  expect("K4", complete(4), 5);
  for (int n = 1; n <= 11; ++n)
    for (const Graph& t : all_free_trees(n)) expect("tree" + std::to_string(n), t, t.max_degree());
  for (int n = 1; n <= 8; ++n) expect("K1," + std::to_string(n), star_graph(n).graph, n);
  if (c.ok) c.detail = std::to_string(cases) + " graphs";
  return c;
}

Check sandwich() {
  Check c;
  const OracleOptions second{EdgeOrder::EdgeIdAscending, false};
  int checked = 0;
  for (const auto& e : corpus()) {
    const Graph& g = e.graph;
    if (g.edge_count() > 10) continue;
    const ExactChi chi = exact_chi_a(g);
    if (chi.exhausted) {
      c.fail(e.name + ": oracle exhausted");
      continue;
    }
    const ColoringResult r = acolor(g);
    const auto colors = r.coloring.colors();
    const int used = static_cast<int>(std::set<Color>(colors.begin(), colors.end()).size());
    const int delta = g.max_degree();
    if (!(delta <= chi.value && chi.value <= used && used <= delta + 10 && r.coloring.max_color() <= delta + 10)) {
      c.fail(e.name + ": " + std::to_string(delta) + " <= " + std::to_string(chi.value) + " <= " + std::to_string(used));
    }
    if (chi.value > 1 && chi.value - 1 >= delta &&
        is_acyclically_k_colorable(g, chi.value - 1, {}, second).verdict != Verdict::No) {
      c.fail(e.name + ": second enumeration order disagrees");
    }
    ++checked;
  }
  if (c.ok) c.detail = std::to_string(checked) + " graphs";
  return c;
}

Check configurations() {
  Check c;
  for (const auto& e : corpus()) {
    if (e.graph.edge_count() == 0) continue;
    try {
      find_configuration(e.graph);
    } catch (const std::exception& ex) {
      c.fail(e.name + ": " + ex.what());
    }
  }
  const Graph big = generate_apollonian(2000, 1).graph;
  const auto start = Clock::now();
  const Configuration found = find_configuration(big);
  const double ms = seconds_since(start) * 1000;
  if (ms >= 50) c.fail("n=2000 took " + std::to_string(ms) + " ms");
  if (c.ok) c.detail = std::string(to_string(found.kind)) + " at n=2000 in " + std::to_string(ms) + " ms";
  return c;
}

Check discharging() {
  Check c;
  int conserved = 0;
  for (const auto& e : corpus()) {
    if (connected_components(e.graph).count != 1) continue;
    const FaceSet f = trace_faces(e.graph, e.rotation);
    const ChargeLedger init = initial_charges(e.graph, f);
    if (init.total() != Rational(-12)) c.fail(e.name + ": total " + init.total().to_string());
    try {
      if (apply_discharging(e.graph, f, init).total() != init.total()) c.fail(e.name + ": total changed");
      ++conserved;
    } catch (const ConfigurationPresent&) {
    }
  }
  for (PlatonicSolid s : {PlatonicSolid::Octahedron, PlatonicSolid::Icosahedron}) {
    const Embedded k = kleetope(platonic(s));
    const FaceSet f = trace_faces(k.graph, k.rotation);
    const ChargeLedger init = initial_charges(k.graph, f);
    if (apply_discharging(k.graph, f, init).total() != Rational(-12)) c.fail("kleetope: total changed");
    ++conserved;
  }
  struct Identity {
    std::vector<int> rim;
    Rule rule;
  };
  const Identity ids[] = {{{8, 9, 8, 10}, Rule::R2a},          {{5, 8, 9, 8}, Rule::R2b},
                          {{7, 7, 8, 9, 7}, Rule::R3_1},       {{6, 8, 8, 9, 8}, Rule::R3_2},
                          {{6, 7, 9, 9, 10}, Rule::R3_3Adjacent}, {{6, 9, 7, 9, 10}, Rule::R3_3Split}};
  for (const Identity& id : ids) {
    const support::Patch p = support::make_patch(id.rim);
    const Graph& g = p.embedded.graph;
    const FaceSet f = trace_faces(g, p.embedded.rotation);
    if (classify_rule(g, f, p.center).rule != id.rule) c.fail(std::string(to_string(id.rule)) + ": wrong rule");
    // Rim vertices carry pendant leaves and are not discharged; only the
    // center's balance is checked.
    Rational left = 2 * g.degree(p.center) - 6;
    for (const Transfer& t : vertex_transfers(g, f, p.center)) left -= t.amount;
    if (!left.is_zero()) c.fail(std::string(to_string(id.rule)) + ": center keeps " + left.to_string());
  }
  if (c.ok) c.detail = std::to_string(conserved) + " discharged graphs, 6 identities";
  return c;
}

Check kernel_agreement() {
  Check c;
  std::uint64_t compared = 0;
  auto compare = [&](const Graph& g, const std::vector<std::vector<EdgeId>>& cycles, const std::vector<int>& colors,
                     int k) {
    PartialEdgeColoring phi(g, k);
    for (EdgeId e = 0; e < g.edge_count(); ++e) phi.assign(g, e, colors[e]);
    const bool proper = support::proper_by_definition(g, colors);
    if (proper != phi.is_proper()) {
      c.fail("properness disagrees");
      return;
    }
    ++compared;
    if (!proper) {
      try {
        find_bichromatic_cycle(g, phi);
        c.fail("improper coloring accepted");
      } catch (const StructuralError&) {
      }
      return;
    }
    if (find_bichromatic_cycle(g, phi).has_value() != support::has_two_colored_cycle(cycles, colors))
      c.fail("cycle verdict disagrees");
  };

  for (const auto& layer : support::graphs_by_edge_count(8)) {
    for (const support::SmallGraph& s : layer) {
      const Graph g = s.to_graph();
      const auto cycles = support::all_simple_cycles(g);
      const int m = g.edge_count();
      for (int k = 1; k <= 3; ++k) {
        std::vector<int> colors(m, 1);
        while (true) {
          compare(g, cycles, colors, k);
          int i = 0;
          while (i < m && colors[i] == k) colors[i++] = 1;
          if (i == m) break;
          ++colors[i];
        }
      }
    }
  }
  const std::uint64_t exhaustive = compared;

  std::mt19937_64 rng(2024);
  std::vector<const support::CorpusEntry*> pool;
  for (const auto& e : corpus())
    if (e.graph.edge_count() >= 3 && e.graph.edge_count() <= 24) pool.push_back(&e);
  for (int trial = 0; trial < 10'000; ++trial) {
    const Graph& g = pool[rng() % pool.size()]->graph;
    const int k = 2 + static_cast<int>(rng() % 4);
    std::vector<int> colors(g.edge_count());
    // Mostly proper colorings, so that the cycle verdict is exercised.
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      const Edge& ed = g.edge(e);
      std::vector<int> open;
      for (int x = 1; x <= k; ++x) {
        bool used = false;
        for (EdgeId f : g.incident_edges(ed.u)) used = used || (f < e && colors[f] == x);
        for (EdgeId f : g.incident_edges(ed.v)) used = used || (f < e && colors[f] == x);
        if (!used) open.push_back(x);
      }
      colors[e] = !open.empty() && rng() % 8 != 0 ? open[rng() % open.size()] : 1 + static_cast<int>(rng() % k);
    }
    compare(g, support::all_simple_cycles(g), colors, k);
  }
  if (c.ok) {
    c.detail = std::to_string(exhaustive) + " exhaustive and " + std::to_string(compared - exhaustive) +
               " random colorings";
  }
  return c;
}

/// Random proper coloring with k colors; edges with no free color stay
/// uncolored.
PartialEdgeColoring random_proper(const Graph& g, int k, std::mt19937_64& rng) {
  PartialEdgeColoring phi(g, k);
  std::vector<EdgeId> order(g.edge_count());
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  for (EdgeId e : order) {
    const Edge& ed = g.edge(e);
    std::vector<Color> open;
    for (Color x = 1; x <= k; ++x)
      if (!phi.has_color_at(ed.u, x) && !phi.has_color_at(ed.v, x)) open.push_back(x);
    if (!open.empty()) phi.assign(g, e, open[rng() % open.size()]);
  }
  return phi;
}

/// Vertex sets of the components of the subgraph on colors a and b.
std::vector<int> two_color_components(const Graph& g, const PartialEdgeColoring& phi, Color a, Color b) {
  std::vector<int> parent(g.vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (phi.color(e) == a || phi.color(e) == b) parent[find(g.edge(e).u)] = find(g.edge(e).v);
  }
  std::vector<int> root(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) root[v] = find(v);
  return root;
}

Check fact_one() {
  Check c;
  std::mt19937_64 rng(7);
  std::vector<const support::CorpusEntry*> pool;
  for (const auto& e : corpus())
    if (e.graph.edge_count() >= 2 && e.graph.vertex_count() <= 60) pool.push_back(&e);
  std::uint64_t paths = 0, pairs = 0;
  for (int trial = 0; trial < 1000 && c.ok; ++trial) {
    const Graph& g = pool[rng() % pool.size()]->graph;
    const int k = g.max_degree() + static_cast<int>(rng() % 3);
    const PartialEdgeColoring phi = random_proper(g, k, rng);
    std::set<Color> present(phi.colors().begin(), phi.colors().end());
    present.erase(kNoColor);
    for (Color a : present) {
      for (Color b : present) {
        if (a >= b) continue;
        const std::vector<int> comp = two_color_components(g, phi, a, b);
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
          const auto p = maximal_bichromatic_path(g, phi, v, a, b);
          if (!p) continue;
          ++paths;
          // The path through v is exactly v's two-colored component, and every
          // vertex on it reports the same path.
          std::set<VertexId> on(p->vertices.begin(), p->vertices.end());
          std::set<VertexId> want;
          for (VertexId x = 0; x < g.vertex_count(); ++x)
            if (comp[x] == comp[v]) want.insert(x);
          if (on != want) c.fail("path through " + std::to_string(v) + " is not its component");
          for (VertexId w : p->vertices) {
            const auto q = maximal_bichromatic_path(g, phi, w, a, b);
            if (!q || std::set<VertexId>(q->vertices.begin(), q->vertices.end()) != on)
              c.fail("vertex " + std::to_string(w) + " lies on two maximal paths");
          }
        }
        const int n = g.vertex_count();
        const int samples = n <= 20 ? n * n : 400;
        for (int s = 0; s < samples; ++s) {
          const VertexId u = n <= 20 ? s / n : static_cast<VertexId>(rng() % n);
          const VertexId v = n <= 20 ? s % n : static_cast<VertexId>(rng() % n);
          if (u == v) continue;
          ++pairs;
          for (auto [x, y] : {std::pair{a, b}, std::pair{b, a}}) {
            if (exists_critical_path(g, phi, x, y, u, v) != exists_critical_path(g, phi, x, y, v, u))
              c.fail("critical path asymmetry");
          }
        }
      }
    }
  }
  if (c.ok) c.detail = std::to_string(paths) + " paths, " + std::to_string(pairs) + " vertex pairs";
  return c;
}

struct Run {
  std::string out;
  int status = -1;
};

Run shell(const std::string& cmd) {
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), got);
  const int st = pclose(p);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

Check determinism() {
  Check c;
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / ("acyclic-acceptance-" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const std::string exe = ACOLOR_EXE;
  const std::string d = dir.string();
  std::ostringstream k4;
  write_edge_list(k4, complete(4));
  {
    std::ofstream(dir / "k4.edges") << k4.str();
  }
  shell(exe + " gen --platonic icosahedron --out " + d + "/ico.edges --rotation-out " + d + "/ico.rot");
  const std::vector<std::pair<std::string, int>> pipelines{
      {exe + " gen --apollonian 50 --seed 1 | " + exe + " color | " + exe + " verify", 0},
      {exe + " gen --apollonian 300 --seed 4 | " + exe + " color --trace -", 0},
      {exe + " gen --grid 4x5 | " + exe + " color --format dot", 0},
      {exe + " gen --random-tree 40 --seed 9 | " + exe + " color --format plain --k 6", 0},
      {exe + " gen --wheel 9 | " + exe + " color --k 9 --max-tier T4", 0},
      {exe + " chi-a --in " + d + "/k4.edges", 0},
      {exe + " chi-a --in " + d + "/k4.edges --k 4", 0},
      {exe + " find-config --in " + d + "/ico.edges", 0},
      {exe + " audit --in " + d + "/ico.edges --rotation " + d + "/ico.rot", 0},
      {exe + " gen --platonic dodecahedron | " + exe + " find-config", 0},
  };
  for (const auto& [cmd, want] : pipelines) {
    const Run a = shell(cmd);
    const Run b = shell(cmd);
    if (a.status != want) c.fail("exit " + std::to_string(a.status) + ": " + cmd);
    if (a.out != b.out || a.out.empty()) c.fail("outputs differ: " + cmd);
  }
  const Run chi = shell(exe + " chi-a --in " + d + "/k4.edges");
  if (chi.out != "5\n") c.fail("chi-a K4 printed " + chi.out);
  fs::remove_all(dir);

  int replayed = 0;
  for (const auto& e : corpus()) {
    const ColoringResult r = acolor(e.graph);
    const ReductionTrace t = trace_from_json(json::parse(trace_to_json(r.trace).dump()));
    const ColoringResult again = replay(e.graph, t);
    if (!std::ranges::equal(r.coloring.colors(), again.coloring.colors()) || again.trace != r.trace)
      c.fail(e.name + ": replay differs");
    ++replayed;
  }
  if (c.ok) c.detail = std::to_string(pipelines.size()) + " pipelines, " + std::to_string(replayed) + " replays";
  return c;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Check()>>> criteria{
      {"Delta+10 colorings of the planar corpus", bound_on_corpus},
      {"exact oracle values", oracle_values},
      {"oracle sandwich on small corpus graphs", sandwich},
      {"unavoidable configurations", configurations},
      {"charge arithmetic", discharging},
      {"cycle detection against enumeration", kernel_agreement},
      {"unique maximal paths and critical path symmetry", fact_one},
      {"determinism and trace replay", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    const auto start = Clock::now();
    try {
      c = criteria[i].second();
    } catch (const std::exception& ex) {
      c.fail(std::string("exception: ") + ex.what());
    }
    failed += !c.ok;
    std::printf("criterion %zu: %s  %s (%s) [%.2f s]\n", i + 1, c.ok ? "PASS" : "FAIL", criteria[i].first,
                c.detail.c_str(), seconds_since(start));
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
