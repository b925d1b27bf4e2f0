#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "acyclic/embedding.hpp"
#include "acyclic/errors.hpp"
#include "acyclic/graph.hpp"

namespace acyclic {

/// A graph together with a planar rotation system for it.
struct Embedded {
  Graph graph;
  RotationSystem rotation;
};

/// Planar triangulation on n vertices: start from a triangle and repeatedly
/// stack a new vertex into a face chosen uniformly at random.
inline Embedded generate_apollonian(int n, std::uint64_t seed) {
  if (n < 3) throw ArgumentError("apollonian network needs n >= 3, got " + std::to_string(n));
  std::mt19937_64 rng(seed);
  RotationSystem rot;
  rot.order = {{1, 2}, {2, 0}, {0, 1}};
  rot.order.reserve(n);
  // Face (a, b, c) is the dart walk a -> b -> c -> a.
  std::vector<std::array<VertexId, 3>> faces = {{0, 1, 2}, {0, 2, 1}};
  faces.reserve(2 * n);
  std::vector<Edge> edges = {{0, 1}, {1, 2}, {0, 2}};

  auto insert_after = [](std::vector<VertexId>& ring, VertexId anchor, VertexId x) {
    auto it = std::find(ring.begin(), ring.end(), anchor);
    ring.insert(it + 1, x);
  };

  for (VertexId x = 3; x < n; ++x) {
    const std::size_t pick = static_cast<std::size_t>(rng() % faces.size());
    const auto [a, b, c] = faces[pick];
    insert_after(rot.order[a], c, x);
    insert_after(rot.order[b], a, x);
    insert_after(rot.order[c], b, x);
    rot.order.push_back({a, c, b});
    faces[pick] = {a, b, x};
    faces.push_back({b, c, x});
    faces.push_back({c, a, x});
    edges.push_back({a, x});
    edges.push_back({b, x});
    edges.push_back({c, x});
  }
  return {Graph(n, edges), std::move(rot)};
}

inline Embedded path_graph(int n) {
  if (n < 1) throw ArgumentError("path needs n >= 1");
  std::vector<Edge> edges;
  std::vector<std::array<double, 2>> xy;
  for (int i = 0; i < n; ++i) {
    xy.push_back({static_cast<double>(i), 0.0});
    if (i + 1 < n) edges.push_back({i, i + 1});
  }
  Graph g(n, edges);
  auto rot = rotation_from_coordinates(g, xy);
  return {std::move(g), std::move(rot)};
}

inline Embedded cycle_graph(int n) {
  if (n < 3) throw ArgumentError("cycle needs n >= 3");
  std::vector<Edge> edges;
  std::vector<std::array<double, 2>> xy;
  for (int i = 0; i < n; ++i) {
    const double t = 2 * std::numbers::pi * i / n;
    xy.push_back({std::cos(t), std::sin(t)});
    edges.push_back({i, (i + 1) % n});
  }
  Graph g(n, edges);
  auto rot = rotation_from_coordinates(g, xy);
  return {std::move(g), std::move(rot)};
}

/// K(1, leaves) with the center at vertex 0.
inline Embedded star_graph(int leaves) {
  if (leaves < 0) throw ArgumentError("star needs leaves >= 0");
  std::vector<Edge> edges;
  std::vector<std::array<double, 2>> xy{{0.0, 0.0}};
  for (int i = 1; i <= leaves; ++i) {
    const double t = 2 * std::numbers::pi * i / leaves;
    xy.push_back({std::cos(t), std::sin(t)});
    edges.push_back({0, i});
  }
  Graph g(leaves + 1, edges);
  auto rot = rotation_from_coordinates(g, xy);
  return {std::move(g), std::move(rot)};
}

/// Wheel on n vertices: hub 0 joined to the rim cycle 1..n-1.
inline Embedded wheel_graph(int n) {
  if (n < 4) throw ArgumentError("wheel needs n >= 4");
  const int rim = n - 1;
  std::vector<Edge> edges;
  std::vector<std::array<double, 2>> xy{{0.0, 0.0}};
  for (int i = 0; i < rim; ++i) {
    const double t = 2 * std::numbers::pi * i / rim;
    xy.push_back({std::cos(t), std::sin(t)});
    edges.push_back({0, i + 1});
    edges.push_back({i + 1, (i + 1) % rim + 1});
  }
  Graph g(n, edges);
  auto rot = rotation_from_coordinates(g, xy);
  return {std::move(g), std::move(rot)};
}

/// rows x cols grid; vertex r * cols + c.
inline Embedded grid_graph(int rows, int cols) {
  if (rows < 1 || cols < 1) throw ArgumentError("grid needs positive dimensions");
  std::vector<Edge> edges;
  std::vector<std::array<double, 2>> xy;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      xy.push_back({static_cast<double>(c), static_cast<double>(r)});
      const int v = r * cols + c;
      if (c + 1 < cols) edges.push_back({v, v + 1});
      if (r + 1 < rows) edges.push_back({v, v + cols});
    }
  }
  Graph g(rows * cols, edges);
  auto rot = rotation_from_coordinates(g, xy);
  return {std::move(g), std::move(rot)};
}

/// Any rotation of a forest is planar; this one uses ascending neighbor order.
inline Embedded embed_forest(Graph g) {
  RotationSystem rot;
  rot.order.resize(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    auto nb = g.neighbors(v);
    rot.order[v].assign(nb.begin(), nb.end());
  }
  return {std::move(g), std::move(rot)};
}

enum class PlatonicSolid { Tetrahedron, Cube, Octahedron, Dodecahedron, Icosahedron };

inline const char* to_string(PlatonicSolid s) {
  switch (s) {
    case PlatonicSolid::Tetrahedron: return "tetrahedron";
    case PlatonicSolid::Cube: return "cube";
    case PlatonicSolid::Octahedron: return "octahedron";
    case PlatonicSolid::Dodecahedron: return "dodecahedron";
    case PlatonicSolid::Icosahedron: return "icosahedron";
  }
  return "?";
}

/// Skeleton of a platonic solid. Vertices come from the standard coordinates;
/// edges join the pairs at minimum distance.
inline Embedded platonic(PlatonicSolid solid) {
  using P = std::array<double, 3>;
  const double phi = std::numbers::phi;
  std::vector<P> pts;
  auto signs = [](std::initializer_list<double> base, std::vector<P>& out, std::array<bool, 3> flip) {
    std::array<double, 3> b{};
    std::copy(base.begin(), base.end(), b.begin());
    for (int mask = 0; mask < 8; ++mask) {
      P p = b;
      bool skip = false;
      for (int k = 0; k < 3; ++k) {
        if (mask & (1 << k)) {
          if (!flip[k]) skip = true;
          p[k] = -p[k];
        }
      }
      if (!skip) out.push_back(p);
    }
  };
  switch (solid) {
    case PlatonicSolid::Tetrahedron:
      pts = {{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
      break;
    case PlatonicSolid::Cube:
      signs({1, 1, 1}, pts, {true, true, true});
      break;
    case PlatonicSolid::Octahedron:
      pts = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
      break;
    case PlatonicSolid::Icosahedron:
      signs({0, 1, phi}, pts, {false, true, true});
      signs({1, phi, 0}, pts, {true, true, false});
      signs({phi, 0, 1}, pts, {true, false, true});
      break;
    case PlatonicSolid::Dodecahedron:
      signs({1, 1, 1}, pts, {true, true, true});
      signs({0, 1 / phi, phi}, pts, {false, true, true});
      signs({1 / phi, phi, 0}, pts, {true, true, false});
      signs({phi, 0, 1 / phi}, pts, {true, false, true});
      break;
  }
  auto dist2 = [](const P& a, const P& b) {
    return (a[0] - b[0]) * (a[0] - b[0]) + (a[1] - b[1]) * (a[1] - b[1]) + (a[2] - b[2]) * (a[2] - b[2]);
  };
  double best = 1e300;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) best = std::min(best, dist2(pts[i], pts[j]));
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      if (dist2(pts[i], pts[j]) < best * (1 + 1e-9)) edges.push_back({static_cast<int>(i), static_cast<int>(j)});
  Graph g(static_cast<int>(pts.size()), edges);
  auto rot = rotation_from_polyhedron(g, pts);
  return {std::move(g), std::move(rot)};
}

/// Stacks one new vertex into every face of an embedded graph whose faces are
/// simple cycles. Triangulations stay triangulations.
inline Embedded kleetope(const Embedded& base) {
  const FaceSet faces = trace_faces(base.graph, base.rotation);
  RotationSystem rot = base.rotation;
  std::vector<Edge> edges(base.graph.edges().begin(), base.graph.edges().end());
  VertexId next = base.graph.vertex_count();
  for (const Face& f : faces.faces) {
    if (f.length < 3) throw ArgumentError("kleetope needs faces of length >= 3");
    const VertexId x = next++;
    const int len = f.length;
    std::vector<VertexId> ring;
    for (int i = 0; i < len; ++i) {
      const VertexId here = f.boundary[i];
      const VertexId prev = f.boundary[(i + len - 1) % len];
      auto& order = rot.order[here];
      order.insert(std::find(order.begin(), order.end(), prev) + 1, x);
      edges.push_back({here, x});
      ring.push_back(here);
    }
    std::reverse(ring.begin(), ring.end());
    rot.order.push_back(std::move(ring));
  }
  return {Graph(next, edges), std::move(rot)};
}

namespace detail {

inline std::string ahu_encode(const std::vector<std::vector<VertexId>>& adj, VertexId root, VertexId parent) {
  std::vector<std::string> kids;
  for (VertexId c : adj[root])
    if (c != parent) kids.push_back(ahu_encode(adj, c, root));
  std::sort(kids.begin(), kids.end());
  std::string s = "(";
  for (auto& k : kids) s += k;
  return s + ")";
}

}  // namespace detail

/// Canonical string of a free tree: AHU encoding rooted at its center (the
/// smaller of the two encodings for a bicentral tree).
inline std::string tree_certificate(const Graph& t) {
  const int n = t.vertex_count();
  if (n == 0) return "";
  std::vector<std::vector<VertexId>> adj(n);
  for (VertexId v = 0; v < n; ++v) {
    auto nb = t.neighbors(v);
    adj[v].assign(nb.begin(), nb.end());
  }
  std::vector<int> deg(n);
  std::vector<VertexId> layer;
  for (VertexId v = 0; v < n; ++v) {
    deg[v] = static_cast<int>(adj[v].size());
    if (deg[v] <= 1) layer.push_back(v);
  }
  int remaining = n;
  while (remaining > 2) {
    remaining -= static_cast<int>(layer.size());
    std::vector<VertexId> next;
    for (VertexId v : layer)
      for (VertexId w : adj[v])
        if (--deg[w] == 1) next.push_back(w);
    layer = std::move(next);
  }
  std::string best;
  for (VertexId c : layer) {
    auto s = detail::ahu_encode(adj, c, kNoVertex);
    if (best.empty() || s < best) best = s;
  }
  return best;
}

/// All non-isomorphic free trees on n vertices. Rooted trees are enumerated as
/// level sequences in reverse lexicographic order and deduplicated by
/// `tree_certificate`.
inline std::vector<Graph> all_free_trees(int n) {
  if (n < 1) throw ArgumentError("trees need n >= 1");
  std::vector<Graph> out;
  if (n == 1) {
    out.emplace_back(1);
    return out;
  }
  std::vector<int> level(n);
  for (int i = 0; i < n; ++i) level[i] = i;
  std::set<std::string> seen;
  while (true) {
    std::vector<Edge> edges;
    std::vector<VertexId> last_at(n, kNoVertex);
    last_at[0] = 0;
    for (int i = 1; i < n; ++i) {
      edges.push_back({last_at[level[i] - 1], i});
      last_at[level[i]] = i;
    }
    Graph t(n, edges);
    if (seen.insert(tree_certificate(t)).second) out.push_back(std::move(t));

    int p = n - 1;
    while (p > 0 && level[p] <= 1) --p;
    if (p == 0) break;
    int q = p - 1;
    while (level[q] != level[p] - 1) --q;
    for (int i = p; i < n; ++i) level[i] = level[i - (p - q)];
  }
  return out;
}

/// Uniform random labeled tree via a random Pruefer sequence.
inline Graph random_tree(int n, std::uint64_t seed) {
  if (n < 1) throw ArgumentError("trees need n >= 1");
  if (n == 1) return Graph(1);
  std::mt19937_64 rng(seed);
  std::vector<int> code(n - 2);
  for (int& c : code) c = static_cast<int>(rng() % n);
  std::vector<int> deg(n, 1);
  for (int c : code) ++deg[c];
  std::set<int> leaves;
  for (int v = 0; v < n; ++v)
    if (deg[v] == 1) leaves.insert(v);
  std::vector<Edge> edges;
  for (int c : code) {
    const int leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    edges.push_back({leaf, c});
    if (--deg[c] == 1) leaves.insert(c);
  }
  const int a = *leaves.begin();
  const int b = *std::next(leaves.begin());
  edges.push_back({a, b});
  return Graph(n, edges);
}

}  // namespace acyclic
