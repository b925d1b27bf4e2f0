#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "acyclic/errors.hpp"
#include "acyclic/graph.hpp"

namespace acyclic {

/// The four unavoidable local patterns around a vertex v of degree k whose
/// neighbors v1..vk are sorted by degree:
///   A1: k <= 2
///   A2: k == 3, d(v1) <= 11
///   A3: k == 4, d(v1) <= 7, d(v2) <= 9
///   A4: k == 5, d(v1) <= 6, d(v2) <= 7, d(v3) <= 8
/// Every connected planar graph has a vertex realizing one of them.
enum class ConfigKind { A1 = 1, A2, A3, A4 };

inline const char* to_string(ConfigKind k) {
  switch (k) {
    case ConfigKind::A1: return "A1";
    case ConfigKind::A2: return "A2";
    case ConfigKind::A3: return "A3";
    case ConfigKind::A4: return "A4";
  }
  return "?";
}

struct NeighborDegree {
  VertexId vertex = kNoVertex;
  int degree = 0;

  friend auto operator<=>(const NeighborDegree& a, const NeighborDegree& b) {
    if (a.degree != b.degree) return a.degree <=> b.degree;
    return a.vertex <=> b.vertex;
  }
  friend bool operator==(const NeighborDegree&, const NeighborDegree&) = default;
};

struct Configuration {
  ConfigKind kind = ConfigKind::A1;
  VertexId vertex = kNoVertex;
  /// Neighbors sorted by (degree, id).
  std::vector<NeighborDegree> neighbors;
};

/// Matches a degree pattern. `sorted` holds the neighbor degrees in
/// ascending order and has `degree` entries.
inline std::optional<ConfigKind> match_configuration(int degree, std::span<const int> sorted) {
  if (degree <= 2) return ConfigKind::A1;
  if (degree == 3 && sorted[0] <= 11) return ConfigKind::A2;
  if (degree == 4 && sorted[0] <= 7 && sorted[1] <= 9) return ConfigKind::A3;
  if (degree == 5 && sorted[0] <= 6 && sorted[1] <= 7 && sorted[2] <= 8) return ConfigKind::A4;
  return std::nullopt;
}

/// Shared by the immutable-graph scanner and the colorer's incremental view.
/// `degree_of` gives the current degree of a vertex; `neighbors` is v's
/// current neighborhood.
template <class Neighbors, class DegreeFn>
std::optional<Configuration> classify_with(VertexId v, const Neighbors& neighbors, DegreeFn&& degree_of) {
  const int d = degree_of(v);
  if (d > 5) return std::nullopt;
  Configuration c;
  c.vertex = v;
  for (VertexId w : neighbors) c.neighbors.push_back({w, degree_of(w)});
  std::sort(c.neighbors.begin(), c.neighbors.end());
  int degs[5] = {};
  for (std::size_t i = 0; i < c.neighbors.size(); ++i) degs[i] = c.neighbors[i].degree;
  auto kind = match_configuration(d, std::span<const int>(degs, c.neighbors.size()));
  if (!kind) return std::nullopt;
  c.kind = *kind;
  return c;
}

inline std::optional<Configuration> classify_vertex(const Graph& g, VertexId v) {
  return classify_with(v, g.neighbors(v), [&](VertexId x) { return g.degree(x); });
}

/// Configuration at the smallest-id qualifying vertex. Failing to find one
/// refutes planarity.
inline Configuration find_configuration(const Graph& g) {
  if (g.vertex_count() == 0) throw ArgumentError("find_configuration needs at least one vertex");
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (auto c = classify_vertex(g, v)) return *c;
  }
  throw NotPlanarEvidence("no vertex realizes A1-A4, so the graph is not planar");
}

/// False only when m > 3n - 6 certifies non-planarity.
inline bool cheap_planarity_guard(const Graph& g) {
  const long long n = g.vertex_count();
  if (n < 3) return true;
  return g.edge_count() <= 3 * n - 6;
}

}  // namespace acyclic
