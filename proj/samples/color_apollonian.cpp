// Colors a random Apollonian triangulation and prints per-tier statistics.
//
//   color_apollonian [n] [seed]

#include <cstdlib>
#include <iostream>

#include "acyclic.hpp"

int main(int argc, char** argv) {
  const int n = argc > 1 ? std::atoi(argv[1]) : 500;
  const unsigned long seed = argc > 2 ? std::strtoul(argv[2], nullptr, 10) : 1;

  const acyclic::Embedded tri = acyclic::generate_apollonian(n, seed);
  const acyclic::Graph& g = tri.graph;
  const acyclic::ColoringResult r = acyclic::acolor(g);
  const acyclic::AcyclicityReport report = acyclic::validate_acyclic(g, r.coloring);

  std::cout << "n=" << g.vertex_count() << " m=" << g.edge_count() << " Delta=" << g.max_degree()
            << " palette=" << r.trace.palette << " used=" << report.max_color
            << " acyclic=" << (report.acyclic() ? "yes" : "no") << "\n";
  for (auto t : {acyclic::Tier::T1, acyclic::Tier::T2, acyclic::Tier::T3, acyclic::Tier::T4})
    std::cout << acyclic::to_string(t) << ": " << r.stats.count(t) << "\n";
  return report.acyclic() ? 0 : 1;
}
