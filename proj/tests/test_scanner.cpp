#include <gtest/gtest.h>

#include "acyclic/generators.hpp"
#include "acyclic/scanner.hpp"

using namespace acyclic;

namespace {

Graph complete(int n) {
  std::vector<Edge> edges;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) edges.push_back({a, b});
  return Graph(n, edges);
}

}  // namespace

TEST(ClassifyVertex, Examples) {
  const Graph c6 = cycle_graph(6).graph;
  for (VertexId v = 0; v < 6; ++v) EXPECT_EQ(classify_vertex(c6, v)->kind, ConfigKind::A1);
  const Graph k4 = complete(4);
  for (VertexId v = 0; v < 4; ++v) EXPECT_EQ(classify_vertex(k4, v)->kind, ConfigKind::A2);
  const Graph ico = platonic(PlatonicSolid::Icosahedron).graph;
  for (VertexId v = 0; v < 12; ++v) EXPECT_EQ(classify_vertex(ico, v)->kind, ConfigKind::A4);
}

TEST(ClassifyVertex, SortsNeighborsByDegreeThenId) {
  const Graph w = wheel_graph(7).graph;
  const auto c = classify_vertex(w, 1);
  ASSERT_TRUE(c);
  EXPECT_EQ(c->kind, ConfigKind::A2);
  ASSERT_EQ(c->neighbors.size(), 3u);
  EXPECT_EQ(c->neighbors[0], (NeighborDegree{2, 3}));
  EXPECT_EQ(c->neighbors[1], (NeighborDegree{6, 3}));
  EXPECT_EQ(c->neighbors[2], (NeighborDegree{0, 6}));
  EXPECT_FALSE(classify_vertex(w, 0));
}

TEST(ClassifyVertex, Thresholds) {
  const int ok2[] = {11};
  const int no2[] = {12};
  EXPECT_EQ(match_configuration(3, ok2), ConfigKind::A2);
  EXPECT_FALSE(match_configuration(3, no2));
  const int ok3[] = {7, 9, 20, 20};
  const int no3[] = {7, 10, 10, 10};
  EXPECT_EQ(match_configuration(4, ok3), ConfigKind::A3);
  EXPECT_FALSE(match_configuration(4, no3));
  const int ok4[] = {6, 7, 8, 30, 30};
  const int no4a[] = {7, 7, 8, 8, 8};
  const int no4b[] = {6, 8, 8, 8, 8};
  const int no4c[] = {6, 7, 9, 9, 9};
  EXPECT_EQ(match_configuration(5, ok4), ConfigKind::A4);
  EXPECT_FALSE(match_configuration(5, no4a));
  EXPECT_FALSE(match_configuration(5, no4b));
  EXPECT_FALSE(match_configuration(5, no4c));
  EXPECT_EQ(match_configuration(0, {}), ConfigKind::A1);
}

TEST(FindConfiguration, Octahedron) {
  const Configuration c = find_configuration(platonic(PlatonicSolid::Octahedron).graph);
  EXPECT_EQ(c.kind, ConfigKind::A3);
  EXPECT_EQ(c.vertex, 0);
  EXPECT_EQ(c.neighbors[0].degree, 4);
  EXPECT_EQ(c.neighbors[1].degree, 4);
}

TEST(FindConfiguration, K5IsOnlyOneSided) {
  const Configuration c = find_configuration(complete(5));
  EXPECT_EQ(c.kind, ConfigKind::A3);
  EXPECT_FALSE(cheap_planarity_guard(complete(5)));
}

TEST(FindConfiguration, RefutesDenseGraphs) {
  // K7: every vertex has degree 6.
  EXPECT_THROW(find_configuration(complete(7)), NotPlanarEvidence);
  EXPECT_THROW(find_configuration(Graph(0)), ArgumentError);
}

TEST(FindConfiguration, ApollonianNeverFails) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) EXPECT_NO_THROW(find_configuration(generate_apollonian(100, seed).graph));
}

TEST(CheapGuard, Examples) {
  EXPECT_TRUE(cheap_planarity_guard(complete(4)));
  EXPECT_TRUE(cheap_planarity_guard(random_tree(40, 3)));
  EXPECT_TRUE(cheap_planarity_guard(Graph(2, {{0, 1}})));
}

TEST(ClassifyVertex, KindOrderIsMonotone) {
  const Graph g = generate_apollonian(300, 4).graph;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const auto c = classify_vertex(g, v);
    if (g.degree(v) <= 2) {
      ASSERT_TRUE(c);
      EXPECT_EQ(c->kind, ConfigKind::A1);
    }
    if (c) {
      EXPECT_EQ(static_cast<int>(c->kind), std::max(1, g.degree(v) - 1));
    }
  }
}
