#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "acyclic/coloring.hpp"
#include "acyclic/errors.hpp"
#include "acyclic/graph.hpp"

namespace acyclic {

/// C(v): colors on the colored edges at v.
inline ColorSet seen_colors(const PartialEdgeColoring& phi, VertexId v) {
  ColorSet out(phi.palette());
  for (Color c = 1; c <= phi.palette(); ++c)
    if (phi.has_color_at(v, c)) out.insert(c);
  return out;
}

/// Same as `seen_colors` but in O(d(v)) using the graph's adjacency.
inline ColorSet seen_colors(const Graph& g, const PartialEdgeColoring& phi, VertexId v) {
  ColorSet out(phi.palette());
  for (EdgeId e : g.incident_edges(v))
    if (phi.color(e) != kNoColor) out.insert(phi.color(e));
  return out;
}

/// F(uv): colors at v on edges other than vu. Not symmetric in u and v.
inline ColorSet forbidden_from(const Graph& g, const PartialEdgeColoring& phi, VertexId u, VertexId v) {
  const EdgeId uv = g.edge_id(u, v);
  ColorSet out(phi.palette());
  for (EdgeId e : g.incident_edges(v))
    if (e != uv && phi.color(e) != kNoColor) out.insert(phi.color(e));
  return out;
}

/// F(uv) as a multiset, for building joins.
inline ColorMultiset forbidden_multiset(const Graph& g, const PartialEdgeColoring& phi, VertexId u, VertexId v) {
  ColorMultiset s;
  s.add_all(forbidden_from(g, phi, u, v));
  return s;
}

/// Maximal path whose edges alternate between two colors. When the walk
/// closes up, `cycle` is set and `vertices` lists the cycle once, without
/// repeating the start.
struct BichromaticPath {
  std::vector<VertexId> vertices;
  Color alpha = kNoColor;
  Color beta = kNoColor;
  /// Color of the edge vertices[i] -> vertices[i+1]; for a cycle, one more
  /// entry for the closing edge.
  std::vector<Color> edge_colors;
  bool cycle = false;
};

namespace detail {

inline void require_proper(const PartialEdgeColoring& phi) {
  if (!phi.is_proper()) throw StructuralError("coloring is not proper");
}

/// Walks from `start` taking a `first`-colored edge, then alternating with
/// `second`. Appends the visited vertices (excluding start) to `out`. Returns
/// true when the walk comes back to start.
inline bool alternate_walk(const PartialEdgeColoring& phi, VertexId start, Color first, Color second,
                           std::vector<VertexId>& out, std::vector<Color>& colors) {
  VertexId x = start;
  Color want = first;
  const int limit = phi.vertex_count() + 1;
  for (int steps = 0; steps < limit; ++steps) {
    const VertexId y = phi.via(x, want);
    if (y == kNoVertex) return false;
    colors.push_back(want);
    if (y == start) return true;
    out.push_back(y);
    x = y;
    want = want == first ? second : first;
  }
  throw StructuralError("alternating walk did not terminate");
}

}  // namespace detail

/// The unique maximal (alpha, beta)-path through v, or nothing when v has no
/// edge of either color. The path is listed starting from the end reached
/// through v's alpha-edge.
inline std::optional<BichromaticPath> maximal_bichromatic_path(const Graph& g, const PartialEdgeColoring& phi,
                                                               VertexId v, Color alpha, Color beta) {
  (void)g.degree(v);
  if (alpha == beta) throw ArgumentError("bichromatic path needs two distinct colors");
  detail::require_proper(phi);
  const bool has_alpha = phi.has_color_at(v, alpha);
  const bool has_beta = phi.has_color_at(v, beta);
  if (!has_alpha && !has_beta) return std::nullopt;

  BichromaticPath path;
  path.alpha = alpha;
  path.beta = beta;
  std::vector<VertexId> alpha_arm, beta_arm;
  std::vector<Color> alpha_colors, beta_colors;
  if (has_alpha && detail::alternate_walk(phi, v, alpha, beta, alpha_arm, alpha_colors)) {
    path.cycle = true;
    path.vertices.push_back(v);
    path.vertices.insert(path.vertices.end(), alpha_arm.begin(), alpha_arm.end());
    path.edge_colors = std::move(alpha_colors);
    return path;
  }
  if (has_beta) detail::alternate_walk(phi, v, beta, alpha, beta_arm, beta_colors);
  path.vertices.assign(alpha_arm.rbegin(), alpha_arm.rend());
  path.vertices.push_back(v);
  path.vertices.insert(path.vertices.end(), beta_arm.begin(), beta_arm.end());
  path.edge_colors.assign(alpha_colors.rbegin(), alpha_colors.rend());
  path.edge_colors.insert(path.edge_colors.end(), beta_colors.begin(), beta_colors.end());
  return path;
}

/// True iff the maximal (alpha, beta)-path leaving u by its alpha-edge ends at
/// v, arriving by an alpha-edge. Coloring an uncolored edge uv with beta then
/// closes a bichromatic cycle.
inline bool exists_critical_path(const Graph& g, const PartialEdgeColoring& phi, Color alpha, Color beta,
                                 VertexId u, VertexId v) {
  (void)g.degree(u);
  (void)g.degree(v);
  if (alpha == beta) throw ArgumentError("critical path needs two distinct colors");
  if (u == v) throw ArgumentError("critical path needs distinct endpoints");
  detail::require_proper(phi);
  if (!phi.has_color_at(u, alpha) || phi.has_color_at(u, beta)) return false;
  VertexId x = u;
  Color want = alpha;
  const int limit = phi.vertex_count();
  for (int steps = 0; steps < limit; ++steps) {
    const VertexId y = phi.via(x, want);
    if (y == kNoVertex) return x == v && want == beta;
    x = y;
    want = want == alpha ? beta : alpha;
  }
  return false;
}

struct BichromaticCycle {
  std::vector<VertexId> vertices;
  Color alpha = kNoColor;
  Color beta = kNoColor;
};

/// First bichromatic cycle in scan order: color pairs (alpha < beta)
/// lexicographically, then the smallest vertex id lying on such a cycle. The
/// witness starts at that vertex and leaves it along its alpha-edge.
inline std::optional<BichromaticCycle> find_bichromatic_cycle(const Graph& g, const PartialEdgeColoring& phi) {
  detail::require_proper(phi);
  const int k = phi.palette();
  std::vector<std::vector<EdgeId>> classes(k + 1);
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (phi.color(e) != kNoColor) classes[phi.color(e)].push_back(e);

  std::vector<int> stamp(g.vertex_count(), 0);
  int round = 0;
  std::vector<VertexId> candidates, arm;
  std::vector<Color> arm_colors;
  for (Color a = 1; a <= k; ++a) {
    if (classes[a].size() < 2) continue;
    for (Color b = a + 1; b <= k; ++b) {
      if (classes[b].size() < 2) continue;
      candidates.clear();
      for (EdgeId e : classes[a]) {
        const Edge& ed = g.edges()[e];
        if (phi.has_color_at(ed.u, b)) candidates.push_back(ed.u);
        if (phi.has_color_at(ed.v, b)) candidates.push_back(ed.v);
      }
      std::sort(candidates.begin(), candidates.end());
      ++round;
      for (VertexId x : candidates) {
        if (stamp[x] == round) continue;
        stamp[x] = round;
        arm.clear();
        arm_colors.clear();
        const bool closed = detail::alternate_walk(phi, x, a, b, arm, arm_colors);
        for (VertexId y : arm) stamp[y] = round;
        if (closed) {
          BichromaticCycle c;
          c.alpha = a;
          c.beta = b;
          c.vertices.push_back(x);
          c.vertices.insert(c.vertices.end(), arm.begin(), arm.end());
          return c;
        }
        // x lies on a path; also mark the other arm so it is not re-walked.
        arm.clear();
        arm_colors.clear();
        detail::alternate_walk(phi, x, b, a, arm, arm_colors);
        for (VertexId y : arm) stamp[y] = round;
      }
    }
  }
  return std::nullopt;
}

struct AcyclicityReport {
  bool complete = false;
  bool proper = false;
  std::optional<BichromaticCycle> cycle;
  Color max_color = kNoColor;

  bool acyclic() const { return complete && proper && !cycle; }
};

/// Full check of a coloring. The cycle search only runs on proper colorings.
inline AcyclicityReport validate_acyclic(const Graph& g, const PartialEdgeColoring& phi) {
  AcyclicityReport r;
  r.complete = phi.is_complete();
  r.proper = phi.is_proper();
  r.max_color = phi.max_color();
  if (r.proper) r.cycle = find_bichromatic_cycle(g, phi);
  return r;
}

/// Process exit code for a validation report: 0 acyclic, 2 improper,
/// 3 bichromatic cycle, 4 incomplete.
inline int exit_code(const AcyclicityReport& r) {
  if (!r.proper) return 2;
  if (r.cycle) return 3;
  if (!r.complete) return 4;
  return 0;
}

/// Whether giving the uncolored edge e color c keeps the coloring proper and
/// free of bichromatic cycles. Any new cycle would pass through e in colors
/// {c, d} with d present at both ends, i.e. along a (d, c)-critical path.
inline bool safe_to_color(const Graph& g, const PartialEdgeColoring& phi, EdgeId e, Color c) {
  const Edge& ed = g.edge(e);
  if (phi.color(e) != kNoColor) throw ArgumentError("safe_to_color expects an uncolored edge");
  if (c < 1 || c > phi.palette()) return false;
  if (phi.has_color_at(ed.u, c) || phi.has_color_at(ed.v, c)) return false;
  const VertexId lo = g.degree(ed.u) <= g.degree(ed.v) ? ed.u : ed.v;
  const VertexId hi = lo == ed.u ? ed.v : ed.u;
  for (EdgeId f : g.incident_edges(lo)) {
    const Color d = phi.color(f);
    if (d != kNoColor && phi.has_color_at(hi, d) && exists_critical_path(g, phi, d, c, ed.u, ed.v)) return false;
  }
  return true;
}

}  // namespace acyclic
