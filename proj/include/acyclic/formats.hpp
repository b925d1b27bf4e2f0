#pragma once

#include <cstdio>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "acyclic/bichromatic.hpp"
#include "acyclic/colorer.hpp"
#include "acyclic/coloring.hpp"
#include "acyclic/discharging.hpp"
#include "acyclic/errors.hpp"
#include "acyclic/graph.hpp"
#include "acyclic/scanner.hpp"

namespace acyclic {

using json = nlohmann::json;

inline constexpr const char* kColoringSchema = "acyclic.coloring/1";
inline constexpr const char* kTraceSchema = "acyclic.trace/1";
inline constexpr const char* kConfigSchema = "acyclic.config/1";
inline constexpr const char* kAuditSchema = "acyclic.audit/1";
inline constexpr const char* kReportSchema = "acyclic.report/1";

inline json coloring_to_json(const Graph& g, const PartialEdgeColoring& phi) {
  json edges = json::array();
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    json item{{"u", ed.u}, {"v", ed.v}};
    item["color"] = phi.color(e) == kNoColor ? json(nullptr) : json(phi.color(e));
    edges.push_back(std::move(item));
  }
  return {{"schema", kColoringSchema}, {"k", phi.palette()}, {"n", g.vertex_count()}, {"edges", std::move(edges)}};
}

/// A coloring read from JSON. Colors above k are kept (the palette is widened
/// to hold them) and flagged, since such a coloring is not a k-coloring.
struct LoadedColoring {
  Graph graph;
  PartialEdgeColoring coloring;
  int declared_palette = 0;
  bool out_of_palette = false;
};

namespace detail {

inline int int_field(const json& obj, const char* key) {
  if (!obj.contains(key) || !obj[key].is_number_integer()) {
    throw FormatError(std::string("field '") + key + "' must be an integer");
  }
  return obj[key].get<int>();
}

}  // namespace detail

inline LoadedColoring coloring_from_json(const json& doc) {
  if (!doc.is_object()) throw FormatError("coloring must be a JSON object");
  const int k = detail::int_field(doc, "k");
  if (k < 0) throw FormatError("k must be >= 0");
  if (!doc.contains("edges") || !doc["edges"].is_array()) throw FormatError("field 'edges' must be an array");
  std::vector<Edge> edges;
  std::vector<int> colors;
  std::set<Edge> seen;
  int n = doc.contains("n") ? detail::int_field(doc, "n") : 0;
  int top = k;
  for (const json& item : doc["edges"]) {
    if (!item.is_object()) throw FormatError("edge entries must be objects");
    const int u = detail::int_field(item, "u");
    const int v = detail::int_field(item, "v");
    if (u < 0 || v < 0) throw FormatError("vertex ids must be >= 0");
    if (u == v) throw FormatError("self-loop at vertex " + std::to_string(u));
    const Edge e = Edge::canonical(u, v);
    if (!seen.insert(e).second) throw FormatError("duplicate edge " + std::to_string(e.u) + " " + std::to_string(e.v));
    int c = kNoColor;
    if (item.contains("color") && !item["color"].is_null()) {
      c = detail::int_field(item, "color");
      if (c < 1) throw FormatError("colors must be >= 1 or null");
      top = std::max(top, c);
    }
    if (!doc.contains("n")) n = std::max(n, std::max(u, v) + 1);
    edges.push_back(e);
    colors.push_back(c);
  }
  LoadedColoring out;
  try {
    out.graph = Graph(n, edges);
  } catch (const ArgumentError& err) {
    throw FormatError(err.what());
  }
  out.declared_palette = k;
  out.out_of_palette = top > k;
  out.coloring = PartialEdgeColoring(out.graph, top);
  for (std::size_t i = 0; i < edges.size(); ++i) out.coloring.assign(out.graph, edges[i].u, edges[i].v, colors[i]);
  return out;
}

inline LoadedColoring parse_coloring(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& err) {
    throw FormatError(err.what());
  }
  return coloring_from_json(doc);
}

inline json trace_to_json(const ReductionTrace& trace) {
  json steps = json::array();
  for (const ReductionStep& s : trace.steps) {
    steps.push_back({{"edge", {s.center, s.partner}}, {"config", to_string(s.config)}, {"tier", to_string(s.tier)}});
  }
  return {{"schema", kTraceSchema}, {"palette", trace.palette}, {"steps", std::move(steps)}};
}

inline ReductionTrace trace_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("steps") || !doc["steps"].is_array()) {
    throw FormatError("trace must be an object with a 'steps' array");
  }
  ReductionTrace t;
  t.palette = detail::int_field(doc, "palette");
  for (const json& s : doc["steps"]) {
    if (!s.contains("edge") || !s["edge"].is_array() || s["edge"].size() != 2) {
      throw FormatError("trace step needs 'edge': [v, u]");
    }
    ReductionStep step;
    step.center = s["edge"][0].get<int>();
    step.partner = s["edge"][1].get<int>();
    const std::string kind = s.value("config", "A1");
    if (kind == "A1") step.config = ConfigKind::A1;
    else if (kind == "A2") step.config = ConfigKind::A2;
    else if (kind == "A3") step.config = ConfigKind::A3;
    else if (kind == "A4") step.config = ConfigKind::A4;
    else throw FormatError("unknown configuration '" + kind + "'");
    try {
      step.tier = parse_tier(s.value("tier", "T1"));
    } catch (const ArgumentError& err) {
      throw FormatError(err.what());
    }
    t.steps.push_back(step);
  }
  return t;
}

inline json configuration_to_json(const Configuration& c) {
  json nb = json::array();
  for (const NeighborDegree& x : c.neighbors) nb.push_back({{"v", x.vertex}, {"d", x.degree}});
  return {{"kind", to_string(c.kind)}, {"v", c.vertex}, {"neighbors", std::move(nb)}};
}

inline json audit_to_json(const AuditReport& r) {
  json out{{"schema", kAuditSchema}};
  if (r.outcome == AuditReport::Outcome::ConfigurationFound) {
    out["outcome"] = "config";
    out["config"] = configuration_to_json(*r.configuration);
    out["total"] = r.initial_total.to_string();
    return out;
  }
  out["outcome"] = "charges";
  out["total"] = r.discharged->total().to_string();
  json neg = json::array();
  for (const NegativeCharge& x : r.negatives) neg.push_back({{"elem", x.element}, {"charge", x.charge.to_string()}});
  out["negatives"] = std::move(neg);
  return out;
}

inline json report_to_json(const AcyclicityReport& r, bool in_palette = true) {
  json out{{"schema", kReportSchema},
           {"acyclic", r.acyclic() && in_palette},
           {"complete", r.complete},
           {"proper", r.proper && in_palette},
           {"max_color", r.max_color}};
  if (r.cycle) {
    out["cycle"] = {{"vertices", r.cycle->vertices}, {"colors", {r.cycle->alpha, r.cycle->beta}}};
  } else {
    out["cycle"] = nullptr;
  }
  return out;
}

/// Graphviz rendering; edge hue follows the palette index.
inline std::string coloring_to_dot(const Graph& g, const PartialEdgeColoring& phi) {
  std::ostringstream out;
  out << "graph coloring {\n  node [shape=circle];\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v) out << "  " << v << ";\n";
  const int k = std::max(1, phi.palette());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    const Color c = phi.color(e);
    out << "  " << ed.u << " -- " << ed.v;
    if (c == kNoColor) {
      out << " [style=dashed]";
    } else {
      char hue[16];
      std::snprintf(hue, sizeof hue, "%.3f", static_cast<double>(c - 1) / k);
      out << " [label=" << c << ", color=\"" << hue << " 0.85 0.85\"]";
    }
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

/// One `u v color` line per edge, `-` for uncolored.
inline std::string coloring_to_plain(const Graph& g, const PartialEdgeColoring& phi) {
  std::ostringstream out;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    out << ed.u << ' ' << ed.v << ' ';
    if (phi.color(e) == kNoColor) out << '-';
    else out << phi.color(e);
    out << '\n';
  }
  return out.str();
}

}  // namespace acyclic
