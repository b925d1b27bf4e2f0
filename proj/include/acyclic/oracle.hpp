#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <numeric>
#include <vector>

#include "acyclic/errors.hpp"
#include "acyclic/graph.hpp"

// Exact acyclic chromatic index by backtracking. Deliberately shares no code
// with the coloring kernel so the two can check each other.

namespace acyclic {

struct SearchBudget {
  std::uint64_t max_nodes = 200'000'000;
  std::chrono::milliseconds wall{60'000};
};

enum class Verdict { No, Yes, Exhausted };

enum class EdgeOrder { DegreeSumDescending, EdgeIdAscending };

struct OracleOptions {
  EdgeOrder order = EdgeOrder::DegreeSumDescending;
  /// The i-th distinct color introduced is at most i.
  bool symmetry_breaking = true;
};

struct Decision {
  Verdict verdict = Verdict::No;
  /// Color per edge id when the verdict is Yes.
  std::vector<int> witness;
  std::uint64_t nodes = 0;
};

namespace detail {

class OracleSearch {
 public:
  OracleSearch(const Graph& g, int k, const SearchBudget& budget, const OracleOptions& opt)
      : g_(g),
        k_(k),
        budget_(budget),
        opt_(opt),
        at_(static_cast<std::size_t>(g.vertex_count()) * (k + 1), -1),
        color_(g.edge_count(), 0),
        start_(std::chrono::steady_clock::now()) {
    order_.resize(g.edge_count());
    std::iota(order_.begin(), order_.end(), 0);
    if (opt.order == EdgeOrder::DegreeSumDescending) {
      std::stable_sort(order_.begin(), order_.end(), [&](EdgeId a, EdgeId b) {
        const Edge& x = g.edge(a);
        const Edge& y = g.edge(b);
        return g.degree(x.u) + g.degree(x.v) > g.degree(y.u) + g.degree(y.v);
      });
    }
  }

  Decision run() {
    Decision d;
    try {
      d.verdict = place(0, 0) ? Verdict::Yes : Verdict::No;
    } catch (const Timeout&) {
      d.verdict = Verdict::Exhausted;
    }
    if (d.verdict == Verdict::Yes) d.witness = color_;
    d.nodes = nodes_;
    return d;
  }

 private:
  struct Timeout {};

  int& at(VertexId v, int c) { return at_[static_cast<std::size_t>(v) * (k_ + 1) + c]; }

  /// Would coloring uv with c close a two-colored cycle? Any such cycle uses
  /// a color d present at both u and v and runs u -d- ... -d- v.
  bool closes_cycle(VertexId u, VertexId v, int c) {
    for (int d = 1; d <= k_; ++d) {
      if (d == c || at(u, d) < 0 || at(v, d) < 0) continue;
      VertexId x = u;
      int want = d;
      while (true) {
        const VertexId y = at(x, want);
        if (y < 0) break;
        if (y == v) return true;
        x = y;
        want = want == d ? c : d;
      }
    }
    return false;
  }

  bool place(std::size_t i, int used) {
    if (i == order_.size()) return true;
    if (++nodes_ > budget_.max_nodes) throw Timeout{};
    if ((nodes_ & 0xfff) == 0 && std::chrono::steady_clock::now() - start_ > budget_.wall) throw Timeout{};
    const EdgeId e = order_[i];
    const Edge& ed = g_.edge(e);
    const int top = opt_.symmetry_breaking ? std::min(k_, used + 1) : k_;
    for (int c = 1; c <= top; ++c) {
      if (at(ed.u, c) >= 0 || at(ed.v, c) >= 0) continue;
      if (closes_cycle(ed.u, ed.v, c)) continue;
      at(ed.u, c) = ed.v;
      at(ed.v, c) = ed.u;
      color_[e] = c;
      if (place(i + 1, std::max(used, c))) return true;
      at(ed.u, c) = -1;
      at(ed.v, c) = -1;
      color_[e] = 0;
    }
    return false;
  }

  const Graph& g_;
  int k_;
  SearchBudget budget_;
  OracleOptions opt_;
  std::vector<int> at_;
  std::vector<int> color_;
  std::vector<EdgeId> order_;
  std::uint64_t nodes_ = 0;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace detail

/// Exact decision: does g have an acyclic edge coloring with colors 1..k?
inline Decision is_acyclically_k_colorable(const Graph& g, int k, const SearchBudget& budget = {},
                                           const OracleOptions& opt = {}) {
  if (k < 1) throw ArgumentError("k must be >= 1");
  if (g.max_degree() > k) return {};
  if (g.edge_count() <= k) {
    Decision d{Verdict::Yes, std::vector<int>(g.edge_count()), 0};
    std::iota(d.witness.begin(), d.witness.end(), 1);
    return d;
  }
  return detail::OracleSearch(g, k, budget, opt).run();
}

struct ExactChi {
  bool exhausted = false;
  int value = 0;
  std::vector<int> witness;
};

/// Smallest k with an acyclic k-edge-coloring, searched upward from Delta.
/// Edgeless graphs give 0.
inline ExactChi exact_chi_a(const Graph& g, const SearchBudget& budget = {}, const OracleOptions& opt = {}) {
  ExactChi out;
  if (g.edge_count() == 0) return out;
  for (int k = std::max(1, g.max_degree());; ++k) {
    Decision d = is_acyclically_k_colorable(g, k, budget, opt);
    if (d.verdict == Verdict::Exhausted) {
      out.exhausted = true;
      return out;
    }
    if (d.verdict == Verdict::Yes) {
      out.value = k;
      out.witness = std::move(d.witness);
      return out;
    }
  }
}

}  // namespace acyclic
