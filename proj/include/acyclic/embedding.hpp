#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "acyclic/errors.hpp"
#include "acyclic/graph.hpp"

namespace acyclic {

using FaceId = int;

/// Combinatorial embedding: for every vertex, the cyclic (clockwise) order of its
/// neighbors.
struct RotationSystem {
  std::vector<std::vector<VertexId>> order;

  friend bool operator==(const RotationSystem&, const RotationSystem&) = default;
};

struct Face {
  /// Tails of the darts in traversal order. An isolated vertex gets a single
  /// face whose boundary is that vertex and whose length is 0.
  std::vector<VertexId> boundary;
  int length = 0;
};

struct FaceSet {
  std::vector<Face> faces;
  RotationSystem rotation;
  int vertex_count = 0;
  int edge_count = 0;
  int component_count = 0;

  int size() const { return static_cast<int>(faces.size()); }

  int euler_characteristic() const { return vertex_count - edge_count + size(); }

  int total_length() const {
    int s = 0;
    for (const Face& f : faces) s += f.length;
    return s;
  }

  /// Face holding the dart v -> rotation[v][i]. That face also contains the
  /// edge from rotation[v][i-1] into v, so it is the corner of v between
  /// those two neighbors.
  FaceId corner_face(VertexId v, int i) const { return dart_face[dart_offset[v] + i]; }

  std::vector<int> dart_offset;
  std::vector<FaceId> dart_face;
};

/// Holds exactly when every face is a triangle.
struct TriangulationWitness {
  bool all_triangles = false;
  FaceSet faces;
};

namespace detail {

/// Sorted (neighbor, position-in-rotation) pairs for each vertex.
inline std::vector<std::vector<std::pair<VertexId, int>>> rotation_positions(const RotationSystem& rot) {
  std::vector<std::vector<std::pair<VertexId, int>>> pos(rot.order.size());
  for (std::size_t v = 0; v < rot.order.size(); ++v) {
    const auto& ord = rot.order[v];
    pos[v].reserve(ord.size());
    for (int i = 0; i < static_cast<int>(ord.size()); ++i) pos[v].emplace_back(ord[i], i);
    std::sort(pos[v].begin(), pos[v].end());
  }
  return pos;
}

inline int position_of(const std::vector<std::pair<VertexId, int>>& pos, VertexId x) {
  auto it = std::lower_bound(pos.begin(), pos.end(), std::pair<VertexId, int>{x, -1});
  return it->second;
}

}  // namespace detail

inline void check_rotation(const Graph& g, const RotationSystem& rot) {
  if (static_cast<int>(rot.order.size()) != g.vertex_count()) {
    throw StructuralError("rotation lists " + std::to_string(rot.order.size()) + " vertices, graph has " +
                          std::to_string(g.vertex_count()));
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    std::vector<VertexId> sorted = rot.order[v];
    std::sort(sorted.begin(), sorted.end());
    auto nb = g.neighbors(v);
    if (!std::equal(sorted.begin(), sorted.end(), nb.begin(), nb.end())) {
      throw StructuralError("rotation at vertex " + std::to_string(v) + " is not a permutation of its neighbors");
    }
  }
}

/// Traces every face of the embedding. The successor of dart u->v is v->w where
/// w follows u in the rotation at v. Each connected component must satisfy
/// Euler's formula on its own sphere, so the check is n - m + f == 2c.
inline FaceSet trace_faces(const Graph& g, const RotationSystem& rot) {
  check_rotation(g, rot);
  const int n = g.vertex_count();
  FaceSet out;
  out.rotation = rot;
  out.vertex_count = n;
  out.edge_count = g.edge_count();
  out.dart_offset.assign(n + 1, 0);
  for (VertexId v = 0; v < n; ++v) out.dart_offset[v + 1] = out.dart_offset[v] + g.degree(v);
  out.dart_face.assign(out.dart_offset[n], -1);
  const auto pos = detail::rotation_positions(rot);

  for (VertexId s = 0; s < n; ++s) {
    if (g.degree(s) == 0) {
      out.faces.push_back(Face{{s}, 0});
      continue;
    }
    for (int i = 0; i < g.degree(s); ++i) {
      if (out.dart_face[out.dart_offset[s] + i] != -1) continue;
      const FaceId id = out.size();
      Face face;
      VertexId tail = s;
      int slot = i;
      while (out.dart_face[out.dart_offset[tail] + slot] == -1) {
        out.dart_face[out.dart_offset[tail] + slot] = id;
        face.boundary.push_back(tail);
        const VertexId head = rot.order[tail][slot];
        const int back = detail::position_of(pos[head], tail);
        slot = (back + 1) % static_cast<int>(rot.order[head].size());
        tail = head;
      }
      face.length = static_cast<int>(face.boundary.size());
      out.faces.push_back(std::move(face));
    }
  }

  out.component_count = connected_components(g).count;
  if (out.euler_characteristic() != 2 * out.component_count) {
    throw NonPlanarEmbedding("Euler count n - m + f = " + std::to_string(out.euler_characteristic()) +
                             ", expected " + std::to_string(2 * out.component_count));
  }
  return out;
}

inline bool is_triangulation(const FaceSet& faces) {
  if (faces.faces.empty()) return false;
  return std::all_of(faces.faces.begin(), faces.faces.end(), [](const Face& f) { return f.length == 3; });
}

inline TriangulationWitness witness_triangulation(const Graph& g, const RotationSystem& rot) {
  TriangulationWitness w;
  w.faces = trace_faces(g, rot);
  w.all_triangles = is_triangulation(w.faces);
  return w;
}

/// Rotation from a plane straight-line drawing: neighbors ordered clockwise by angle.
inline RotationSystem rotation_from_coordinates(const Graph& g, const std::vector<std::array<double, 2>>& xy) {
  RotationSystem rot;
  rot.order.resize(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    std::vector<std::pair<double, VertexId>> keyed;
    for (VertexId w : g.neighbors(v)) {
      keyed.emplace_back(-std::atan2(xy[w][1] - xy[v][1], xy[w][0] - xy[v][0]), w);
    }
    std::sort(keyed.begin(), keyed.end());
    for (auto& [angle, w] : keyed) rot.order[v].push_back(w);
  }
  return rot;
}

/// Rotation from the vertices of a convex polyhedron centered at the origin:
/// neighbors ordered clockwise as seen from outside.
inline RotationSystem rotation_from_polyhedron(const Graph& g, const std::vector<std::array<double, 3>>& p) {
  auto sub = [](const std::array<double, 3>& a, const std::array<double, 3>& b) {
    return std::array<double, 3>{a[0] - b[0], a[1] - b[1], a[2] - b[2]};
  };
  auto dot = [](const std::array<double, 3>& a, const std::array<double, 3>& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
  };
  auto cross = [](const std::array<double, 3>& a, const std::array<double, 3>& b) {
    return std::array<double, 3>{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
  };
  RotationSystem rot;
  rot.order.resize(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const auto& normal = p[v];
    auto nb = g.neighbors(v);
    if (nb.empty()) continue;
    // Tangent basis from the first neighbor direction projected off the normal.
    auto d0 = sub(p[nb[0]], p[v]);
    const double nn = dot(normal, normal);
    const double t = dot(d0, normal) / nn;
    std::array<double, 3> e1{d0[0] - t * normal[0], d0[1] - t * normal[1], d0[2] - t * normal[2]};
    auto e2 = cross(normal, e1);
    std::vector<std::pair<double, VertexId>> keyed;
    for (VertexId w : nb) {
      auto d = sub(p[w], p[v]);
      keyed.emplace_back(-std::atan2(dot(d, e2), dot(d, e1)), w);
    }
    std::sort(keyed.begin(), keyed.end());
    for (auto& [angle, w] : keyed) rot.order[v].push_back(w);
  }
  return rot;
}

// Rotation file: one line per vertex, `v: u1 u2 ... ud`.

inline void write_rotation(std::ostream& out, const RotationSystem& rot) {
  for (std::size_t v = 0; v < rot.order.size(); ++v) {
    out << v << ':';
    for (VertexId w : rot.order[v]) out << ' ' << w;
    out << '\n';
  }
}

inline RotationSystem read_rotation(std::istream& in) {
  struct Row {
    long long vertex;
    std::vector<VertexId> order;
    std::size_t line;
  };
  std::vector<Row> rows;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw ParseError(lineno, "expected 'v: u1 u2 ...'");
    std::istringstream head(line.substr(0, colon));
    long long v = -1;
    if (!(head >> v) || v < 0) throw ParseError(lineno, "bad vertex id before ':'");
    std::istringstream rest(line.substr(colon + 1));
    std::vector<VertexId> nb;
    std::string tok;
    while (rest >> tok) {
      try {
        std::size_t used = 0;
        long long w = std::stoll(tok, &used);
        if (used != tok.size() || w < 0) throw std::invalid_argument(tok);
        nb.push_back(static_cast<VertexId>(w));
      } catch (const std::exception&) {
        throw ParseError(lineno, "bad neighbor id '" + tok + "'");
      }
    }
    rows.push_back({v, std::move(nb), lineno});
  }
  RotationSystem rot;
  rot.order.resize(rows.size());
  std::vector<char> seen(rows.size(), 0);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const long long v = rows[r].vertex;
    if (v >= static_cast<long long>(rows.size()) || seen[v]) {
      throw ParseError(rows[r].line, "vertex ids must be 0..n-1, each listed once");
    }
    seen[v] = 1;
    rot.order[v] = std::move(rows[r].order);
  }
  return rot;
}

}  // namespace acyclic
