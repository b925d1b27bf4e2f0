#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "acyclic/errors.hpp"
#include "acyclic/graph.hpp"

namespace acyclic {

/// Palette colors are 1..k; 0 marks an uncolored edge.
using Color = int;
inline constexpr Color kNoColor = 0;

/// Subset of the palette [k], stored as a bit vector.
class ColorSet {
 public:
  ColorSet() = default;
  explicit ColorSet(int palette) : palette_(palette), words_((palette + 64) / 64, 0) {}

  /// Every color of [k].
  static ColorSet full(int palette) {
    ColorSet s(palette);
    for (Color c = 1; c <= palette; ++c) s.insert(c);
    return s;
  }

  int palette() const noexcept { return palette_; }

  void insert(Color c) {
    if (c < 1) throw ArgumentError("colors are >= 1");
    if (static_cast<std::size_t>(c >> 6) >= words_.size()) words_.resize((c >> 6) + 1, 0);
    palette_ = std::max(palette_, c);
    words_[c >> 6] |= bit(c);
  }
  void erase(Color c) {
    if (c >= 1 && static_cast<std::size_t>(c >> 6) < words_.size()) words_[c >> 6] &= ~bit(c);
  }
  bool contains(Color c) const noexcept {
    return c >= 1 && c <= palette_ && (words_[c >> 6] & bit(c)) != 0;
  }

  int size() const noexcept {
    int s = 0;
    for (auto w : words_) s += std::popcount(w);
    return s;
  }
  bool empty() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
  }

  /// Smallest member, or kNoColor.
  Color min() const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i]) return static_cast<Color>(i * 64 + std::countr_zero(words_[i]));
    }
    return kNoColor;
  }

  std::vector<Color> members() const {
    std::vector<Color> out;
    for (std::size_t i = 0; i < words_.size(); ++i) {
      for (std::uint64_t w = words_[i]; w; w &= w - 1) {
        out.push_back(static_cast<Color>(i * 64 + std::countr_zero(w)));
      }
    }
    return out;
  }

  ColorSet& operator|=(const ColorSet& o) {
    grow(o);
    for (std::size_t i = 0; i < o.words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  ColorSet& operator&=(const ColorSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= i < o.words_.size() ? o.words_[i] : 0;
    return *this;
  }
  ColorSet& operator-=(const ColorSet& o) {
    for (std::size_t i = 0; i < std::min(words_.size(), o.words_.size()); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  friend ColorSet operator|(ColorSet a, const ColorSet& b) { return a |= b; }
  friend ColorSet operator&(ColorSet a, const ColorSet& b) { return a &= b; }
  friend ColorSet operator-(ColorSet a, const ColorSet& b) { return a -= b; }

  friend bool operator==(const ColorSet& a, const ColorSet& b) { return a.members() == b.members(); }

 private:
  static std::uint64_t bit(Color c) { return std::uint64_t{1} << (c & 63); }

  void grow(const ColorSet& o) {
    if (o.words_.size() > words_.size()) words_.resize(o.words_.size(), 0);
    palette_ = std::max(palette_, o.palette_);
  }

  int palette_ = 0;
  std::vector<std::uint64_t> words_{0};
};

/// Multiset of colors: color -> multiplicity, as a count array indexed by color.
class ColorMultiset {
 public:
  ColorMultiset() = default;

  void add(Color c, int times = 1) {
    if (c < 1) throw ArgumentError("multiset members are palette colors >= 1");
    if (static_cast<std::size_t>(c) >= counts_.size()) counts_.resize(c + 1, 0);
    counts_[c] += times;
    total_ += times;
  }

  void add_all(const ColorSet& s) {
    for (Color c : s.members()) add(c);
  }

  int multiplicity(Color c) const noexcept {
    return c >= 0 && static_cast<std::size_t>(c) < counts_.size() ? counts_[c] : 0;
  }

  /// ||S||, the sum of multiplicities.
  int cardinality() const noexcept { return total_; }

  /// Colors with multiplicity >= 1, ascending.
  std::vector<Color> support() const {
    std::vector<Color> out;
    for (std::size_t c = 1; c < counts_.size(); ++c)
      if (counts_[c] > 0) out.push_back(static_cast<Color>(c));
    return out;
  }

  friend bool operator==(const ColorMultiset& a, const ColorMultiset& b) {
    const std::size_t n = std::max(a.counts_.size(), b.counts_.size());
    for (std::size_t c = 0; c < n; ++c)
      if (a.multiplicity(static_cast<Color>(c)) != b.multiplicity(static_cast<Color>(c))) return false;
    return true;
  }

 private:
  std::vector<int> counts_;
  int total_ = 0;
};

/// The join: multiplicities add color by color.
inline ColorMultiset multiset_join(const ColorMultiset& a, const ColorMultiset& b) {
  ColorMultiset out = a;
  for (Color c : b.support()) out.add(c, b.multiplicity(c));
  return out;
}

/// Edge coloring over palette [k] in which edges may be uncolored.
///
/// Bound to the edge ids of one Graph; mutating calls take that graph. Keeps a
/// dense (vertex, color) table so the edge of a given color at a vertex is an
/// O(1) lookup. Improper states are representable (a loaded file may be
/// improper); `is_proper()` is O(1).
class PartialEdgeColoring {
 public:
  PartialEdgeColoring() = default;

  PartialEdgeColoring(const Graph& g, int palette)
      : k_(palette),
        n_(g.vertex_count()),
        color_(g.edge_count(), kNoColor),
        via_(static_cast<std::size_t>(n_) * (palette + 1), kNoVertex),
        load_(static_cast<std::size_t>(n_) * (palette + 1), 0) {
    if (palette < 0) throw ArgumentError("palette size must be >= 0");
  }

  int palette() const noexcept { return k_; }
  int edge_count() const noexcept { return static_cast<int>(color_.size()); }
  int vertex_count() const noexcept { return n_; }

  Color color(EdgeId e) const { return color_.at(e); }
  Color color(const Graph& g, VertexId u, VertexId v) const { return color_[g.edge_id(u, v)]; }
  bool is_colored(EdgeId e) const { return color_.at(e) != kNoColor; }

  std::span<const Color> colors() const noexcept { return color_; }

  /// Neighbor joined to v by an edge of color c, or kNoVertex.
  VertexId via(VertexId v, Color c) const noexcept {
    if (c < 1 || c > k_) return kNoVertex;
    return via_[slot(v, c)];
  }

  bool has_color_at(VertexId v, Color c) const noexcept { return via(v, c) != kNoVertex; }

  /// Number of edges at v carrying color c (more than 1 only when improper).
  int load(VertexId v, Color c) const noexcept { return c < 1 || c > k_ ? 0 : load_[slot(v, c)]; }

  bool is_proper() const noexcept { return conflicts_ == 0; }
  int colored_count() const noexcept { return colored_; }
  bool is_complete() const noexcept { return colored_ == edge_count(); }

  Color max_color() const noexcept {
    Color best = kNoColor;
    for (Color c : color_) best = std::max(best, c);
    return best;
  }

  /// Sets edge e to color c (kNoColor uncolors it). Properness is not enforced
  /// here; callers that need it check `has_color_at` first.
  void assign(const Graph& g, EdgeId e, Color c) {
    if (c < 0 || c > k_) {
      throw ArgumentError("color " + std::to_string(c) + " outside palette [1," + std::to_string(k_) + "]");
    }
    const Color old = color_.at(e);
    if (old == c) return;
    const Edge ed = g.edge(e);
    if (old != kNoColor) {
      detach(g, ed.u, ed.v, e, old);
      detach(g, ed.v, ed.u, e, old);
      --colored_;
    }
    color_[e] = c;
    if (c != kNoColor) {
      attach(ed.u, ed.v, c);
      attach(ed.v, ed.u, c);
      ++colored_;
    }
  }

  void assign(const Graph& g, VertexId u, VertexId v, Color c) { assign(g, g.edge_id(u, v), c); }

  friend bool operator==(const PartialEdgeColoring& a, const PartialEdgeColoring& b) {
    return a.k_ == b.k_ && a.color_ == b.color_;
  }

 private:
  std::size_t slot(VertexId v, Color c) const noexcept {
    return static_cast<std::size_t>(v) * (k_ + 1) + c;
  }

  void attach(VertexId v, VertexId other, Color c) {
    auto& l = load_[slot(v, c)];
    if (++l == 1) {
      via_[slot(v, c)] = other;
    } else if (l == 2) {
      ++conflicts_;
    }
  }

  void detach(const Graph& g, VertexId v, VertexId other, EdgeId e, Color c) {
    auto& l = load_[slot(v, c)];
    if (--l == 1) --conflicts_;
    if (l == 0) {
      via_[slot(v, c)] = kNoVertex;
    } else if (via_[slot(v, c)] == other) {
      // Another edge still carries c at v; point at it instead.
      auto nb = g.neighbors(v);
      auto inc = g.incident_edges(v);
      for (std::size_t i = 0; i < nb.size(); ++i) {
        if (inc[i] != e && color_[inc[i]] == c) {
          via_[slot(v, c)] = nb[i];
          break;
        }
      }
    }
  }

  int k_ = 0;
  int n_ = 0;
  std::vector<Color> color_;
  std::vector<VertexId> via_;
  std::vector<std::uint16_t> load_;
  int conflicts_ = 0;
  int colored_ = 0;
};

}  // namespace acyclic
