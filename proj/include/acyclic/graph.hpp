#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "acyclic/errors.hpp"

namespace acyclic {

using VertexId = int;
using EdgeId = int;

inline constexpr VertexId kNoVertex = -1;

/// Unordered vertex pair, stored canonically with u < v.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  static Edge canonical(VertexId a, VertexId b) { return a < b ? Edge{a, b} : Edge{b, a}; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on dense vertex ids 0..n-1.
///
/// Immutable after construction. Edges are kept sorted canonically, so an edge's
/// id depends only on the edge set and not on insertion order. Adjacency is a
/// CSR array with neighbors in ascending order; the parallel `incident_edges`
/// array gives the edge id of each neighbor slot.
class Graph {
 public:
  Graph() = default;

  explicit Graph(int vertex_count) : Graph(vertex_count, std::span<const Edge>{}) {}

  Graph(int vertex_count, std::span<const Edge> edges) : n_(vertex_count) {
    if (vertex_count < 0) throw ArgumentError("negative vertex count");
    edges_.reserve(edges.size());
    for (const Edge& e : edges) {
      if (e.u < 0 || e.v < 0 || e.u >= n_ || e.v >= n_) {
        throw ArgumentError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                            ") references a vertex outside [0," + std::to_string(n_) + ")");
      }
      if (e.u == e.v) throw ArgumentError("self-loop at vertex " + std::to_string(e.u));
      edges_.push_back(Edge::canonical(e.u, e.v));
    }
    std::sort(edges_.begin(), edges_.end());
    auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end()) {
      throw ArgumentError("duplicate edge (" + std::to_string(dup->u) + "," +
                          std::to_string(dup->v) + ")");
    }
    build_index();
  }

  Graph(int vertex_count, std::initializer_list<std::pair<int, int>> pairs)
      : Graph(vertex_count, to_edges(pairs)) {}

  int vertex_count() const noexcept { return n_; }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }

  bool valid(VertexId v) const noexcept { return v >= 0 && v < n_; }

  int degree(VertexId v) const {
    check(v);
    return offsets_[v + 1] - offsets_[v];
  }

  std::span<const VertexId> neighbors(VertexId v) const {
    check(v);
    return {neighbors_.data() + offsets_[v], neighbors_.data() + offsets_[v + 1]};
  }

  std::span<const EdgeId> incident_edges(VertexId v) const {
    check(v);
    return {incident_.data() + offsets_[v], incident_.data() + offsets_[v + 1]};
  }

  std::span<const Edge> edges() const noexcept { return edges_; }

  const Edge& edge(EdgeId e) const {
    if (e < 0 || e >= edge_count()) throw ArgumentError("invalid edge id " + std::to_string(e));
    return edges_[e];
  }

  std::optional<EdgeId> find_edge(VertexId a, VertexId b) const {
    if (!valid(a) || !valid(b) || a == b) return std::nullopt;
    auto it = index_.find(key(a, b));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  bool has_edge(VertexId a, VertexId b) const { return find_edge(a, b).has_value(); }

  EdgeId edge_id(VertexId a, VertexId b) const {
    check(a);
    check(b);
    auto e = find_edge(a, b);
    if (!e) {
      throw ArgumentError("no edge between " + std::to_string(a) + " and " + std::to_string(b));
    }
    return *e;
  }

  VertexId other_end(EdgeId e, VertexId v) const {
    const Edge& ed = edge(e);
    if (ed.u == v) return ed.v;
    if (ed.v == v) return ed.u;
    throw ArgumentError("vertex " + std::to_string(v) + " is not an endpoint of edge " +
                        std::to_string(e));
  }

  int max_degree() const noexcept {
    int best = 0;
    for (VertexId v = 0; v < n_; ++v) best = std::max(best, offsets_[v + 1] - offsets_[v]);
    return best;
  }

  int min_degree() const noexcept {
    if (n_ == 0) return 0;
    int best = offsets_[1] - offsets_[0];
    for (VertexId v = 1; v < n_; ++v) best = std::min(best, offsets_[v + 1] - offsets_[v]);
    return best;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  static std::uint64_t key(VertexId a, VertexId b) {
    if (a > b) std::swap(a, b);
    return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b);
  }

  static std::vector<Edge> to_edges(std::initializer_list<std::pair<int, int>> pairs) {
    std::vector<Edge> out;
    out.reserve(pairs.size());
    for (auto [a, b] : pairs) out.push_back({a, b});
    return out;
  }

  void check(VertexId v) const {
    if (!valid(v)) throw ArgumentError("invalid vertex id " + std::to_string(v));
  }

  void build_index() {
    offsets_.assign(n_ + 1, 0);
    for (const Edge& e : edges_) {
      ++offsets_[e.u + 1];
      ++offsets_[e.v + 1];
    }
    std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
    neighbors_.resize(2 * edges_.size());
    incident_.resize(2 * edges_.size());
    std::vector<int> fill(offsets_.begin(), offsets_.end() - 1);
    for (EdgeId id = 0; id < edge_count(); ++id) {
      const Edge& e = edges_[id];
      neighbors_[fill[e.u]] = e.v;
      incident_[fill[e.u]++] = id;
      neighbors_[fill[e.v]] = e.u;
      incident_[fill[e.v]++] = id;
    }
    std::vector<std::pair<VertexId, EdgeId>> scratch;
    for (VertexId v = 0; v < n_; ++v) {
      scratch.clear();
      for (int i = offsets_[v]; i < offsets_[v + 1]; ++i) scratch.emplace_back(neighbors_[i], incident_[i]);
      std::sort(scratch.begin(), scratch.end());
      for (int i = offsets_[v], j = 0; i < offsets_[v + 1]; ++i, ++j) {
        neighbors_[i] = scratch[j].first;
        incident_[i] = scratch[j].second;
      }
    }
    index_.reserve(edges_.size());
    for (EdgeId id = 0; id < edge_count(); ++id) index_.emplace(key(edges_[id].u, edges_[id].v), id);
  }

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> offsets_{0};
  std::vector<VertexId> neighbors_;
  std::vector<EdgeId> incident_;
  std::unordered_map<std::uint64_t, EdgeId> index_;
};

inline int degree(const Graph& g, VertexId v) { return g.degree(v); }

struct DegreeClass {
  std::vector<VertexId> vertices;
  int count = 0;
};

/// N_k(v) and n_k(v): the neighbors of v whose degree is exactly k.
inline DegreeClass degree_class_neighbors(const Graph& g, VertexId v, int k) {
  DegreeClass out;
  for (VertexId x : g.neighbors(v)) {
    if (g.degree(x) == k) out.vertices.push_back(x);
  }
  out.count = static_cast<int>(out.vertices.size());
  return out;
}

/// Result of deleting vertices: the induced graph plus, for each surviving
/// vertex, its id in the original graph.
struct InducedSubgraph {
  Graph graph;
  std::vector<VertexId> original;
};

/// `keep[v]` nonzero marks a surviving vertex.
inline InducedSubgraph induced_subgraph(const Graph& g, std::span<const char> keep) {
  std::vector<VertexId> renumber(g.vertex_count(), kNoVertex);
  InducedSubgraph out;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (keep[v]) {
      renumber[v] = static_cast<VertexId>(out.original.size());
      out.original.push_back(v);
    }
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (keep[e.u] && keep[e.v]) edges.push_back({renumber[e.u], renumber[e.v]});
  }
  out.graph = Graph(static_cast<int>(out.original.size()), edges);
  return out;
}

/// Removes every vertex of degree exactly 2 in a single pass. The result may
/// well contain new 2-vertices; the operation is deliberately not iterated.
inline InducedSubgraph delete_two_vertices(const Graph& g) {
  std::vector<char> keep(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) keep[v] = g.degree(v) != 2;
  return induced_subgraph(g, keep);
}

inline Graph remove_edge(const Graph& g, VertexId u, VertexId v) {
  const EdgeId id = g.edge_id(u, v);
  std::vector<Edge> edges;
  edges.reserve(g.edge_count() - 1);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (e != id) edges.push_back(g.edges()[e]);
  }
  return Graph(g.vertex_count(), edges);
}

inline Graph add_edge(const Graph& g, VertexId u, VertexId v) {
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  edges.push_back({u, v});
  return Graph(g.vertex_count(), edges);
}

/// Component label per vertex (labels ordered by smallest member id) and the
/// number of components.
struct Components {
  std::vector<int> label;
  int count = 0;
};

inline Components connected_components(const Graph& g) {
  Components out;
  out.label.assign(g.vertex_count(), -1);
  std::vector<VertexId> stack;
  for (VertexId s = 0; s < g.vertex_count(); ++s) {
    if (out.label[s] != -1) continue;
    out.label[s] = out.count;
    stack.push_back(s);
    while (!stack.empty()) {
      VertexId x = stack.back();
      stack.pop_back();
      for (VertexId y : g.neighbors(x)) {
        if (out.label[y] == -1) {
          out.label[y] = out.count;
          stack.push_back(y);
        }
      }
    }
    ++out.count;
  }
  return out;
}

}  // namespace acyclic
