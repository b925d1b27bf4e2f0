#include <gtest/gtest.h>

#include "acyclic/generators.hpp"
#include "acyclic/oracle.hpp"
#include "support/cycle_oracle.hpp"

using namespace acyclic;

namespace {

Graph complete(int n) {
  std::vector<Edge> edges;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) edges.push_back({a, b});
  return Graph(n, edges);
}

void expect_witness(const Graph& g, const Decision& d, int k) {
  ASSERT_EQ(d.verdict, Verdict::Yes);
  ASSERT_EQ(static_cast<int>(d.witness.size()), g.edge_count());
  for (int c : d.witness) {
    EXPECT_GE(c, 1);
    EXPECT_LE(c, k);
  }
  EXPECT_TRUE(support::proper_by_definition(g, d.witness));
  EXPECT_FALSE(support::has_two_colored_cycle(support::all_simple_cycles(g), d.witness));
}

}  // namespace

TEST(Oracle, FourCycle) {
  const Graph c4 = cycle_graph(4).graph;
  EXPECT_EQ(is_acyclically_k_colorable(c4, 2).verdict, Verdict::No);
  expect_witness(c4, is_acyclically_k_colorable(c4, 3), 3);
}

TEST(Oracle, K4NeedsFive) {
  const Graph k4 = complete(4);
  EXPECT_EQ(is_acyclically_k_colorable(k4, 4).verdict, Verdict::No);
  expect_witness(k4, is_acyclically_k_colorable(k4, 5), 5);
  EXPECT_EQ(exact_chi_a(k4).value, 5);
}

TEST(Oracle, CyclesNeedThree) {
  for (int n = 3; n <= 10; ++n) EXPECT_EQ(exact_chi_a(cycle_graph(n).graph).value, 3) << "C" << n;
}

TEST(Oracle, TreesNeedDelta) {
  for (int n = 2; n <= 9; ++n)
    for (const Graph& t : all_free_trees(n)) EXPECT_EQ(exact_chi_a(t).value, t.max_degree());
}

// In a proper Delta-coloring of a Delta-regular graph any two color classes
// form a union of even cycles, so regular graphs need at least Delta + 1.
TEST(Oracle, RegularGraphsNeedDeltaPlusOne) {
  for (const Graph& g : {platonic(PlatonicSolid::Cube).graph, platonic(PlatonicSolid::Octahedron).graph,
                         complete(4), cycle_graph(7).graph}) {
    EXPECT_EQ(is_acyclically_k_colorable(g, g.max_degree()).verdict, Verdict::No);
    EXPECT_GE(exact_chi_a(g).value, g.max_degree() + 1);
  }
}

TEST(Oracle, EdgelessAndTrivialInputs) {
  EXPECT_EQ(exact_chi_a(Graph(4)).value, 0);
  EXPECT_EQ(exact_chi_a(Graph(2, {{0, 1}})).value, 1);
  EXPECT_THROW(is_acyclically_k_colorable(Graph(2, {{0, 1}}), 0), ArgumentError);
  EXPECT_EQ(is_acyclically_k_colorable(star_graph(5).graph, 4).verdict, Verdict::No);
}

TEST(Oracle, MonotoneInK) {
  for (const Graph& g : {complete(4), wheel_graph(5).graph, grid_graph(2, 4).graph}) {
    const int chi = exact_chi_a(g).value;
    for (int k = 1; k <= chi + 2; ++k) {
      const Verdict v = is_acyclically_k_colorable(g, k).verdict;
      EXPECT_EQ(v, k >= chi ? Verdict::Yes : Verdict::No) << "k=" << k;
    }
  }
}

TEST(Oracle, EnumerationOrderAndSymmetryDoNotMatter) {
  const OracleOptions plain{EdgeOrder::EdgeIdAscending, false};
  const OracleOptions ordered{EdgeOrder::EdgeIdAscending, true};
  for (const Graph& g : {complete(4), wheel_graph(6).graph, platonic(PlatonicSolid::Octahedron).graph,
                         grid_graph(3, 3).graph}) {
    const int chi = exact_chi_a(g).value;
    EXPECT_EQ(exact_chi_a(g, {}, ordered).value, chi);
    EXPECT_EQ(exact_chi_a(g, {}, plain).value, chi);
  }
}

TEST(Oracle, TinyBudgetIsExhausted) {
  SearchBudget b;
  b.max_nodes = 3;
  const Decision d = is_acyclically_k_colorable(platonic(PlatonicSolid::Icosahedron).graph, 6, b);
  EXPECT_EQ(d.verdict, Verdict::Exhausted);
  EXPECT_TRUE(exact_chi_a(platonic(PlatonicSolid::Icosahedron).graph, b).exhausted);
}
