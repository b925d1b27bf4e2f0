#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "acyclic/bichromatic.hpp"
#include "acyclic/coloring.hpp"
#include "acyclic/errors.hpp"
#include "acyclic/graph.hpp"
#include "acyclic/scanner.hpp"

namespace acyclic {

/// Extension strategies, cheapest first.
///   T1: a color that is free at both ends and closes no critical path.
///   T2: one recolor or swap at an endpoint of the edge, then T1.
///   T3: up to three recolor moves near the edge, bounded search, then T1.
///   T4: exhaustive recoloring of a growing region around the edge.
enum class Tier { T1 = 1, T2, T3, T4 };

inline const char* to_string(Tier t) {
  switch (t) {
    case Tier::T1: return "T1";
    case Tier::T2: return "T2";
    case Tier::T3: return "T3";
    case Tier::T4: return "T4";
  }
  return "?";
}

inline Tier parse_tier(const std::string& s) {
  if (s == "T1" || s == "1") return Tier::T1;
  if (s == "T2" || s == "2") return Tier::T2;
  if (s == "T3" || s == "3") return Tier::T3;
  if (s == "T4" || s == "4") return Tier::T4;
  throw ArgumentError("unknown tier '" + s + "'");
}

struct ReductionStep {
  /// Configuration vertex and the neighbor the removed edge leads to.
  VertexId center = kNoVertex;
  VertexId partner = kNoVertex;
  ConfigKind config = ConfigKind::A1;
  Tier tier = Tier::T1;

  friend bool operator==(const ReductionStep&, const ReductionStep&) = default;
};

/// Steps in removal order. Extension runs them back to front.
struct ReductionTrace {
  int palette = 0;
  std::vector<ReductionStep> steps;

  friend bool operator==(const ReductionTrace&, const ReductionTrace&) = default;
};

struct ColorerOptions {
  /// 0 selects Delta(G) + 10.
  int palette = 0;
  Tier max_tier = Tier::T4;
  std::uint64_t local_search_budget = 100'000;
  std::uint64_t exhaustive_budget = 50'000'000;
  /// Re-run the full cycle search after every extension.
  bool verify_each_step = false;
};

struct TierStats {
  std::array<std::uint64_t, 5> extensions{};
  std::uint64_t local_search_states = 0;
  std::uint64_t exhaustive_nodes = 0;

  std::uint64_t count(Tier t) const { return extensions[static_cast<int>(t)]; }
  Tier highest() const {
    for (int t = 4; t > 1; --t)
      if (extensions[t]) return static_cast<Tier>(t);
    return Tier::T1;
  }
};

struct ColoringResult {
  PartialEdgeColoring coloring;
  ReductionTrace trace;
  TierStats stats;
};

/// The graph as edges are peeled off, with the candidate vertices for the next
/// removal kept in ordered sets so each choice is O(log n).
class ReductionView {
 public:
  explicit ReductionView(const Graph& g)
      : g_(&g), active_(g.edge_count(), 1), degree_(g.vertex_count()), remaining_(g.edge_count()) {
    for (VertexId v = 0; v < g.vertex_count(); ++v) degree_[v] = g.degree(v);
    for (VertexId v = 0; v < g.vertex_count(); ++v) refresh(v);
  }

  int degree(VertexId v) const { return degree_.at(v); }
  int remaining() const noexcept { return remaining_; }
  bool empty() const noexcept { return remaining_ == 0; }
  bool active(EdgeId e) const { return active_.at(e) != 0; }

  /// A 2^- vertex if one exists (A1), otherwise the smallest non-isolated
  /// vertex realizing A2-A4. The edge leads to its neighbor of least
  /// (degree, id).
  std::pair<EdgeId, Configuration> choose() const {
    if (remaining_ == 0) throw ArgumentError("no edge left to remove");
    const std::set<VertexId>& pool = !low_.empty() ? low_ : config_;
    if (pool.empty()) throw NotPlanarEvidence("no non-isolated vertex realizes A1-A4, so the graph is not planar");
    Configuration c = *classify(*pool.begin());
    return {g_->edge_id(c.vertex, c.neighbors.front().vertex), std::move(c)};
  }

  void remove(EdgeId e) {
    if (!active(e)) throw ArgumentError("edge " + std::to_string(e) + " was already removed");
    const Edge ed = g_->edge(e);
    active_[e] = 0;
    --degree_[ed.u];
    --degree_[ed.v];
    --remaining_;
    for (VertexId x : {ed.u, ed.v}) {
      refresh(x);
      for (VertexId y : active_neighbors(x)) refresh(y);
    }
  }

  std::vector<VertexId> active_neighbors(VertexId v) const {
    std::vector<VertexId> out;
    auto nb = g_->neighbors(v);
    auto inc = g_->incident_edges(v);
    for (std::size_t i = 0; i < nb.size(); ++i)
      if (active_[inc[i]]) out.push_back(nb[i]);
    return out;
  }

 private:
  std::optional<Configuration> classify(VertexId v) const {
    const int d = degree_[v];
    if (d == 0 || d > 5) return std::nullopt;
    return classify_with(v, active_neighbors(v), [this](VertexId x) { return degree_[x]; });
  }

  void refresh(VertexId v) {
    low_.erase(v);
    config_.erase(v);
    const int d = degree_[v];
    if (d == 1 || d == 2) {
      low_.insert(v);
    } else if (d >= 3 && d <= 5 && classify(v)) {
      config_.insert(v);
    }
  }

  const Graph* g_;
  std::vector<char> active_;
  std::vector<int> degree_;
  int remaining_;
  std::set<VertexId> low_;
  std::set<VertexId> config_;
};

/// The next edge the reduction removes from g, with the configuration that
/// selected it.
inline std::pair<Edge, Configuration> choose_reduction_edge(const Graph& g) {
  ReductionView view(g);
  auto [e, c] = view.choose();
  return {Edge{c.vertex, c.neighbors.front().vertex}, std::move(c)};
}

namespace detail {

/// Colors the single uncolored edge `e` of the present subgraph, recoloring
/// other edges if needed. Works in place on `phi`; uncolored edges other than
/// `e` are treated as absent.
class Extender {
 public:
  Extender(const Graph& g, PartialEdgeColoring& phi, const ColorerOptions& opt, TierStats& stats)
      : g_(g), phi_(phi), opt_(opt), stats_(stats), k_(phi.palette()), stamp_(g.edge_count(), 0) {}

  Tier extend(EdgeId e, VertexId center, VertexId partner) {
    e_ = e;
    c_ = center;
    p_ = partner;
    const Tier t = run();
    ++stats_.extensions[static_cast<int>(t)];
    if (opt_.verify_each_step) {
      const AcyclicityReport r = validate_acyclic(g_, phi_);
      if (!r.proper || r.cycle) throw StructuralError("extension produced an invalid coloring");
    }
    return t;
  }

 private:
  Tier run() {
    if (finish()) return Tier::T1;
    if (opt_.max_tier >= Tier::T2 && tier2()) return Tier::T2;
    if (opt_.max_tier >= Tier::T3 && tier3()) return Tier::T3;
    if (opt_.max_tier >= Tier::T4) {
      tier4();
      return Tier::T4;
    }
    throw BudgetExhausted("edge " + std::to_string(c_) + "-" + std::to_string(p_) + " needs a tier above " +
                          to_string(opt_.max_tier));
  }

  bool finish() {
    for (Color c = 1; c <= k_; ++c) {
      if (safe_to_color(g_, phi_, e_, c)) {
        phi_.assign(g_, e_, c);
        return true;
      }
    }
    return false;
  }

  bool recolor(EdgeId f, Color a) {
    const Color old = phi_.color(f);
    if (a == old) return false;
    phi_.assign(g_, f, kNoColor);
    if (safe_to_color(g_, phi_, f, a)) {
      phi_.assign(g_, f, a);
      return true;
    }
    phi_.assign(g_, f, old);
    return false;
  }

  bool swap(EdgeId f1, EdgeId f2) {
    const Color a = phi_.color(f1);
    const Color b = phi_.color(f2);
    phi_.assign(g_, f1, kNoColor);
    phi_.assign(g_, f2, kNoColor);
    if (safe_to_color(g_, phi_, f1, b)) {
      phi_.assign(g_, f1, b);
      if (safe_to_color(g_, phi_, f2, a)) {
        phi_.assign(g_, f2, a);
        return true;
      }
      phi_.assign(g_, f1, kNoColor);
    }
    phi_.assign(g_, f1, a);
    phi_.assign(g_, f2, b);
    return false;
  }

  std::vector<EdgeId> colored_at(VertexId x) const {
    std::vector<EdgeId> out;
    for (EdgeId f : g_.incident_edges(x))
      if (f != e_ && phi_.color(f) != kNoColor) out.push_back(f);
    return out;
  }

  /// Colors for recoloring an edge at x: the free palette ordered by
  /// multiplicity in the join of F(xw) over x's other neighbors, then the
  /// colors seen only at y.
  std::vector<Color> recolor_order(VertexId x, VertexId y) const {
    const ColorSet at_x = seen_colors(g_, phi_, x);
    const ColorSet at_y = seen_colors(g_, phi_, y);
    ColorMultiset s;
    for (EdgeId f : colored_at(x)) s.add_all(forbidden_from(g_, phi_, x, g_.other_end(f, x)));
    std::vector<Color> free;
    for (Color c = 1; c <= k_; ++c)
      if (!at_x.contains(c) && !at_y.contains(c)) free.push_back(c);
    std::stable_sort(free.begin(), free.end(),
                     [&](Color a, Color b) { return s.multiplicity(a) < s.multiplicity(b); });
    for (Color c : (at_y - at_x).members()) free.push_back(c);
    return free;
  }

  bool tier2() {
    for (auto [x, y] : {std::pair{c_, p_}, std::pair{p_, c_}}) {
      const std::vector<Color> order = recolor_order(x, y);
      for (EdgeId f : colored_at(x)) {
        const Color old = phi_.color(f);
        for (Color a : order) {
          if (!recolor(f, a)) continue;
          if (finish()) return true;
          phi_.assign(g_, f, old);
        }
      }
    }
    for (VertexId x : {c_, p_}) {
      const std::vector<EdgeId> at = colored_at(x);
      for (std::size_t i = 0; i < at.size(); ++i) {
        for (std::size_t j = i + 1; j < at.size(); ++j) {
          if (!swap(at[i], at[j])) continue;
          if (finish()) return true;
          swap_back(at[i], at[j]);
        }
      }
    }
    return false;
  }

  void swap_back(EdgeId f1, EdgeId f2) {
    const Color a = phi_.color(f1);
    const Color b = phi_.color(f2);
    phi_.assign(g_, f1, kNoColor);
    phi_.assign(g_, f2, a);
    phi_.assign(g_, f1, b);
  }

  /// Edges on the critical paths that currently block a free color.
  void blocking_edges(std::vector<EdgeId>& out) {
    for (Color c = 1; c <= k_; ++c) {
      if (phi_.has_color_at(c_, c) || phi_.has_color_at(p_, c)) continue;
      for (EdgeId f : g_.incident_edges(c_)) {
        const Color d = phi_.color(f);
        if (f == e_ || d == kNoColor || !phi_.has_color_at(p_, d)) continue;
        if (!exists_critical_path(g_, phi_, d, c, c_, p_)) continue;
        VertexId x = c_;
        Color want = d;
        for (VertexId y; (y = phi_.via(x, want)) != kNoVertex; x = y, want = want == d ? c : d) {
          const EdgeId h = g_.edge_id(x, y);
          if (stamp_[h] != round_) {
            stamp_[h] = round_;
            out.push_back(h);
          }
        }
      }
    }
  }

  /// Colored edges with an endpoint within distance 1 of the extension edge.
  std::vector<EdgeId> nearby_edges() const {
    std::vector<EdgeId> out;
    std::vector<VertexId> ring{c_, p_};
    for (VertexId x : {c_, p_})
      for (EdgeId f : colored_at(x)) ring.push_back(g_.other_end(f, x));
    std::vector<char> seen(g_.edge_count(), 0);
    for (VertexId x : ring) {
      for (EdgeId f : colored_at(x)) {
        if (!seen[f]) {
          seen[f] = 1;
          out.push_back(f);
        }
      }
    }
    return out;
  }

  std::vector<EdgeId> candidates() {
    ++round_;
    std::vector<EdgeId> out;
    blocking_edges(out);
    for (EdgeId f : nearby_) {
      if (stamp_[f] != round_) {
        stamp_[f] = round_;
        out.push_back(f);
      }
    }
    return out;
  }

  bool tier3() {
    nearby_ = nearby_edges();
    states_ = 0;
    bool ok = false;
    for (int depth = 1; depth <= 3 && !ok && states_ < opt_.local_search_budget; ++depth) ok = search(depth);
    stats_.local_search_states += states_;
    return ok;
  }

  bool search(int depth) {
    for (EdgeId f : candidates()) {
      const Color old = phi_.color(f);
      for (Color a = 1; a <= k_; ++a) {
        if (a == old) continue;
        if (states_ >= opt_.local_search_budget) return false;
        ++states_;
        if (!recolor(f, a)) continue;
        if (finish() || (depth > 1 && search(depth - 1))) return true;
        phi_.assign(g_, f, old);
      }
    }
    return false;
  }

  bool present(EdgeId f) const { return f == e_ || phi_.color(f) != kNoColor; }

  [[noreturn]] void refute() const {
    std::string msg = "no acyclic " + std::to_string(k_) + "-edge-coloring exists after adding edge " +
                      std::to_string(c_) + "-" + std::to_string(p_);
    if (k_ >= g_.max_degree() + 10) msg += ", so the graph is not planar";
    throw NotPlanarEvidence(msg);
  }

  int present_degree(VertexId x) const {
    int d = 0;
    for (EdgeId f : g_.incident_edges(x)) d += present(f);
    return d;
  }

  void tier4() {
    if (present_degree(c_) > k_ || present_degree(p_) > k_) refute();
    // Distances from the extension edge over the present subgraph.
    std::vector<int> dist(g_.vertex_count(), -1);
    std::vector<VertexId> queue{c_, p_};
    dist[c_] = dist[p_] = 0;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const VertexId x = queue[i];
      auto nb = g_.neighbors(x);
      auto inc = g_.incident_edges(x);
      for (std::size_t j = 0; j < nb.size(); ++j) {
        if (present(inc[j]) && dist[nb[j]] < 0) {
          dist[nb[j]] = dist[x] + 1;
          queue.push_back(nb[j]);
        }
      }
    }
    const int reach = dist[queue.back()];

    const PartialEdgeColoring saved = phi_;
    std::uint64_t nodes = 0;
    for (int r = 0;; ++r) {
      std::vector<EdgeId> region;
      std::vector<char> in_region(g_.edge_count(), 0);
      for (VertexId x : queue) {
        if (dist[x] > r) break;
        for (EdgeId f : g_.incident_edges(x)) {
          if (present(f) && !in_region[f]) {
            in_region[f] = 1;
            region.push_back(f);
          }
        }
      }
      std::stable_sort(region.begin(), region.end(), [&](EdgeId a, EdgeId b) {
        const Edge& ea = g_.edge(a);
        const Edge& eb = g_.edge(b);
        return std::min(dist[ea.u], dist[ea.v]) < std::min(dist[eb.u], dist[eb.v]);
      });
      for (EdgeId f : region) phi_.assign(g_, f, kNoColor);
      const bool ok = backtrack(region, 0, nodes);
      stats_.exhaustive_nodes += nodes;
      nodes = 0;
      if (ok) return;
      phi_ = saved;
      if (r >= reach) refute();
    }
  }

  bool backtrack(const std::vector<EdgeId>& region, std::size_t i, std::uint64_t& nodes) {
    if (i == region.size()) return true;
    const EdgeId f = region[i];
    for (Color a = 1; a <= k_; ++a) {
      if (!safe_to_color(g_, phi_, f, a)) continue;
      if (++nodes + stats_.exhaustive_nodes > opt_.exhaustive_budget) {
        throw BudgetExhausted("exhaustive extension exceeded " + std::to_string(opt_.exhaustive_budget) + " nodes");
      }
      phi_.assign(g_, f, a);
      if (backtrack(region, i + 1, nodes)) return true;
      phi_.assign(g_, f, kNoColor);
    }
    return false;
  }

  const Graph& g_;
  PartialEdgeColoring& phi_;
  const ColorerOptions& opt_;
  TierStats& stats_;
  int k_;
  EdgeId e_ = -1;
  VertexId c_ = kNoVertex;
  VertexId p_ = kNoVertex;
  std::vector<int> stamp_;
  int round_ = 0;
  std::vector<EdgeId> nearby_;
  std::uint64_t states_ = 0;
};

inline int palette_for(const Graph& g, const ColorerOptions& opt) {
  if (opt.palette < 0) throw ArgumentError("palette size must be >= 0");
  return opt.palette > 0 ? opt.palette : g.max_degree() + 10;
}

inline ColoringResult extend_all(const Graph& g, std::vector<ReductionStep> steps, int k, const ColorerOptions& opt) {
  ColoringResult out;
  out.coloring = PartialEdgeColoring(g, k);
  Extender ext(g, out.coloring, opt, out.stats);
  for (auto it = steps.rbegin(); it != steps.rend(); ++it)
    it->tier = ext.extend(g.edge_id(it->center, it->partner), it->center, it->partner);
  out.trace.palette = k;
  out.trace.steps = std::move(steps);
  return out;
}

}  // namespace detail

/// Acyclic edge coloring with at most Delta(G) + 10 colors (or
/// `opt.palette`). Edges are removed one at a time along configurations, then
/// put back in reverse order, each extension verified by the kernel.
inline ColoringResult acolor(const Graph& g, const ColorerOptions& opt = {}) {
  const int k = detail::palette_for(g, opt);
  ReductionView view(g);
  std::vector<ReductionStep> steps;
  steps.reserve(g.edge_count());
  while (!view.empty()) {
    auto [e, c] = view.choose();
    steps.push_back({c.vertex, c.neighbors.front().vertex, c.kind, Tier::T1});
    view.remove(e);
  }
  return detail::extend_all(g, std::move(steps), k, opt);
}

/// Re-runs the extension phase of a recorded trace. Throws ArgumentError when
/// the trace's removals do not empty the graph.
inline ColoringResult replay(const Graph& g, const ReductionTrace& trace, const ColorerOptions& opt = {}) {
  std::vector<char> removed(g.edge_count(), 0);
  for (const ReductionStep& s : trace.steps) {
    const auto e = g.find_edge(s.center, s.partner);
    if (!e) {
      throw ArgumentError("trace edge " + std::to_string(s.center) + "-" + std::to_string(s.partner) +
                          " is not in the graph");
    }
    if (removed[*e]) {
      throw ArgumentError("trace removes edge " + std::to_string(s.center) + "-" + std::to_string(s.partner) +
                          " twice");
    }
    removed[*e] = 1;
  }
  if (std::find(removed.begin(), removed.end(), 0) != removed.end())
    throw ArgumentError("trace does not remove every edge");
  return detail::extend_all(g, trace.steps, trace.palette, opt);
}

/// The state at one extension: phi colors G - uv, where v is the
/// configuration vertex (`center`) and u its chosen neighbor (`partner`).
struct ExtensionContext {
  const Graph* graph = nullptr;
  EdgeId edge = -1;
  VertexId center = kNoVertex;
  VertexId partner = kNoVertex;
  int k = 0;
  PartialEdgeColoring coloring;
  ColorSet center_colors;
  ColorSet partner_colors;
  ColorSet shared;
  /// T = [k] minus the colors at either end.
  ColorSet free;
  /// Join of F(v v_i) over the colored edges v v_i with v_i != u.
  ColorMultiset neighbor_multiset;
};

inline ExtensionContext make_context(const Graph& g, const PartialEdgeColoring& phi, VertexId center,
                                     VertexId partner) {
  ExtensionContext ctx;
  ctx.graph = &g;
  ctx.edge = g.edge_id(center, partner);
  if (phi.color(ctx.edge) != kNoColor) throw ArgumentError("the extension edge must be uncolored");
  if (!phi.is_proper()) throw StructuralError("coloring is not proper");
  if (find_bichromatic_cycle(g, phi)) throw StructuralError("coloring has a bichromatic cycle");
  ctx.center = center;
  ctx.partner = partner;
  ctx.k = phi.palette();
  ctx.coloring = phi;
  ctx.center_colors = seen_colors(g, phi, center);
  ctx.partner_colors = seen_colors(g, phi, partner);
  ctx.shared = ctx.center_colors & ctx.partner_colors;
  ctx.free = ColorSet::full(ctx.k) - (ctx.center_colors | ctx.partner_colors);
  for (EdgeId f : g.incident_edges(center)) {
    const VertexId x = g.other_end(f, center);
    if (x != partner && phi.color(f) != kNoColor) ctx.neighbor_multiset.add_all(forbidden_from(g, phi, center, x));
  }
  return ctx;
}

/// Smallest c in T such that no (d, c, v, u)-critical path exists for any
/// shared color d.
inline std::optional<Color> try_free_color(const ExtensionContext& ctx) {
  for (Color c : ctx.free.members()) {
    bool blocked = false;
    for (Color d : ctx.shared.members()) {
      if (exists_critical_path(*ctx.graph, ctx.coloring, d, c, ctx.center, ctx.partner)) {
        blocked = true;
        break;
      }
    }
    if (!blocked) return c;
  }
  return std::nullopt;
}

/// Exchanges the colors of two colored edges sharing one endpoint.
inline PartialEdgeColoring move_swap_pair(const ExtensionContext& ctx, EdgeId e1, EdgeId e2) {
  const Graph& g = *ctx.graph;
  const Edge a = g.edge(e1);
  const Edge b = g.edge(e2);
  const int common = (a.u == b.u) + (a.u == b.v) + (a.v == b.u) + (a.v == b.v);
  if (e1 == e2 || common != 1) throw ArgumentError("swap needs two edges sharing exactly one endpoint");
  const Color c1 = ctx.coloring.color(e1);
  const Color c2 = ctx.coloring.color(e2);
  if (c1 == kNoColor || c2 == kNoColor) throw ArgumentError("swap needs two colored edges");
  PartialEdgeColoring phi = ctx.coloring;
  phi.assign(g, e1, kNoColor);
  phi.assign(g, e2, kNoColor);
  if (phi.has_color_at(a.u, c2) || phi.has_color_at(a.v, c2) || phi.has_color_at(b.u, c1) ||
      phi.has_color_at(b.v, c1)) {
    throw MoveRejected("swap breaks properness at a far endpoint");
  }
  if (!safe_to_color(g, phi, e1, c2)) throw MoveRejected("swap creates a bichromatic cycle");
  phi.assign(g, e1, c2);
  if (!safe_to_color(g, phi, e2, c1)) throw MoveRejected("swap creates a bichromatic cycle");
  phi.assign(g, e2, c1);
  return phi;
}

/// Recolors an edge at either end of the extension edge with a color of T
/// not already at its far end. The result is verified, not assumed.
inline PartialEdgeColoring move_recolor_neighbor(const ExtensionContext& ctx, EdgeId e, Color alpha) {
  const Graph& g = *ctx.graph;
  const Edge ed = g.edge(e);
  if (e == ctx.edge) throw ArgumentError("cannot recolor the extension edge itself");
  VertexId near = kNoVertex;
  if (ed.u == ctx.center || ed.u == ctx.partner) near = ed.u;
  if (ed.v == ctx.center || ed.v == ctx.partner) near = ed.v;
  if (near == kNoVertex) throw ArgumentError("edge is not incident to the extension edge");
  if (ctx.coloring.color(e) == kNoColor) throw ArgumentError("edge to recolor must be colored");
  if (!ctx.free.contains(alpha)) throw ArgumentError("color " + std::to_string(alpha) + " is not in T");
  const VertexId far = g.other_end(e, near);
  if (forbidden_from(g, ctx.coloring, near, far).contains(alpha)) {
    throw ArgumentError("color " + std::to_string(alpha) + " already appears at " + std::to_string(far));
  }
  PartialEdgeColoring phi = ctx.coloring;
  phi.assign(g, e, kNoColor);
  if (!safe_to_color(g, phi, e, alpha)) throw MoveRejected("recoloring creates a bichromatic cycle");
  phi.assign(g, e, alpha);
  return phi;
}

struct ExtensionResult {
  PartialEdgeColoring coloring;
  Tier tier = Tier::T1;
  TierStats stats;
};

inline ExtensionResult extend_at_edge(const ExtensionContext& ctx, const ColorerOptions& opt = {}) {
  ExtensionResult out;
  out.coloring = ctx.coloring;
  detail::Extender ext(*ctx.graph, out.coloring, opt, out.stats);
  out.tier = ext.extend(ctx.edge, ctx.center, ctx.partner);
  return out;
}

}  // namespace acyclic
