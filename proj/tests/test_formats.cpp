#include <gtest/gtest.h>

#include "acyclic.hpp"
#include "acyclic/formats.hpp"

using namespace acyclic;

TEST(ColoringJson, RoundTrip) {
  const Graph g = generate_apollonian(40, 2).graph;
  const ColoringResult r = acolor(g);
  const json doc = coloring_to_json(g, r.coloring);
  EXPECT_EQ(doc["schema"], kColoringSchema);
  EXPECT_EQ(doc["k"], r.coloring.palette());
  const LoadedColoring back = parse_coloring(doc.dump());
  EXPECT_FALSE(back.out_of_palette);
  EXPECT_EQ(back.graph.edge_count(), g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    EXPECT_EQ(back.coloring.color(back.graph, ed.u, ed.v), r.coloring.color(e));
  }
}

TEST(ColoringJson, UncoloredEdgesAreNull) {
  const Graph g(3, {{0, 1}, {1, 2}});
  PartialEdgeColoring phi(g, 4);
  phi.assign(g, 0, 1, 2);
  const json doc = coloring_to_json(g, phi);
  EXPECT_TRUE(doc["edges"][1]["color"].is_null());
  const LoadedColoring back = coloring_from_json(doc);
  EXPECT_EQ(back.coloring.color(back.graph, 1, 2), kNoColor);
  EXPECT_FALSE(validate_acyclic(back.graph, back.coloring).complete);
}

TEST(ColoringJson, ColorsAboveKAreFlagged) {
  const LoadedColoring c =
      parse_coloring(R"({"k": 2, "edges": [{"u": 0, "v": 1, "color": 1}, {"u": 1, "v": 2, "color": 3}]})");
  EXPECT_TRUE(c.out_of_palette);
  EXPECT_EQ(c.declared_palette, 2);
  EXPECT_EQ(c.graph.vertex_count(), 3);
  EXPECT_EQ(c.coloring.color(c.graph, 1, 2), 3);
  const json rep = report_to_json(validate_acyclic(c.graph, c.coloring), !c.out_of_palette);
  EXPECT_FALSE(rep["acyclic"].get<bool>());
  EXPECT_FALSE(rep["proper"].get<bool>());
}

TEST(ColoringJson, MalformedInputs) {
  EXPECT_THROW(parse_coloring("not json"), FormatError);
  EXPECT_THROW(parse_coloring("[]"), FormatError);
  EXPECT_THROW(parse_coloring(R"({"edges": []})"), FormatError);
  EXPECT_THROW(parse_coloring(R"({"k": 2, "edges": [{"u": 0, "v": 1, "color": 1}, {"u": 1, "v": 0, "color": 2}]})"),
               FormatError);
  EXPECT_THROW(parse_coloring(R"({"k": 2, "edges": [{"u": 1, "v": 1, "color": 1}]})"), FormatError);
  EXPECT_THROW(parse_coloring(R"({"k": 2, "edges": [{"u": 0, "v": 1, "color": 0}]})"), FormatError);
  EXPECT_THROW(parse_coloring(R"({"k": 2, "edges": [{"u": 0, "v": "x"}]})"), FormatError);
  EXPECT_THROW(parse_coloring(R"({"k": 2, "n": 2, "edges": [{"u": 0, "v": 5}]})"), FormatError);
}

TEST(ReportJson, NamesTheCycle) {
  const Graph g = cycle_graph(4).graph;
  PartialEdgeColoring phi(g, 2);
  for (VertexId v = 0; v < 4; ++v) phi.assign(g, v, (v + 1) % 4, v % 2 + 1);
  const json rep = report_to_json(validate_acyclic(g, phi));
  EXPECT_EQ(rep["schema"], kReportSchema);
  EXPECT_FALSE(rep["acyclic"].get<bool>());
  EXPECT_EQ(rep["cycle"]["vertices"].size(), 4u);
}

TEST(TraceJson, RoundTrip) {
  const Graph g = platonic(PlatonicSolid::Icosahedron).graph;
  const ReductionTrace t = acolor(g).trace;
  const json doc = trace_to_json(t);
  EXPECT_EQ(doc["schema"], kTraceSchema);
  EXPECT_EQ(trace_from_json(json::parse(doc.dump())), t);
  EXPECT_THROW(trace_from_json(json::parse(R"({"palette": 3, "steps": [{"edge": [0]}]})")), FormatError);
  EXPECT_THROW(trace_from_json(json::parse(R"({"palette": 3, "steps": [{"edge": [0, 1], "config": "A9"}]})")),
               FormatError);
  EXPECT_THROW(trace_from_json(json::parse(R"({"palette": 3, "steps": [{"edge": [0, 1], "tier": "T7"}]})")),
               FormatError);
}

TEST(AuditJson, BothOutcomes) {
  const Embedded ico = platonic(PlatonicSolid::Icosahedron);
  const json a = audit_to_json(audit_triangulation(ico.graph, ico.rotation));
  EXPECT_EQ(a["outcome"], "config");
  EXPECT_EQ(a["config"]["kind"], "A4");
  EXPECT_EQ(a["total"], "-12");
  const Embedded k = kleetope(ico);
  const json b = audit_to_json(audit_triangulation(k.graph, k.rotation, false));
  EXPECT_EQ(b["outcome"], "charges");
  EXPECT_EQ(b["total"], "-12");
  EXPECT_EQ(b["negatives"].size(), 60u);
  EXPECT_EQ(b["negatives"][0]["charge"], "-1/5");
}

TEST(TextFormats, DotAndPlain) {
  const Graph g(3, {{0, 1}, {1, 2}});
  PartialEdgeColoring phi(g, 2);
  phi.assign(g, 0, 1, 2);
  EXPECT_EQ(coloring_to_plain(g, phi), "0 1 2\n1 2 -\n");
  const std::string dot = coloring_to_dot(g, phi);
  EXPECT_EQ(dot.rfind("graph coloring {", 0), 0u);
  EXPECT_NE(dot.find("0 -- 1 [label=2"), std::string::npos);
  EXPECT_NE(dot.find("1 -- 2 [style=dashed]"), std::string::npos);
}
