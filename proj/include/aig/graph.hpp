#pragma once

#include <algorithm>
#include <compare>
#include <concepts>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "aig/errors.hpp"
#include "aig/pointset.hpp"

namespace aig {

using Bitset = boost::dynamic_bitset<>;

/// Labeled simple undirected graph.
///
/// Immutable after construction. Vertices are indices 0..n-1 in the order the
/// labels were given; builders in this library pass labels sorted, which makes
/// index order the label order used for deterministic tie-breaking.
template <std::totally_ordered Label>
class UGraph {
 public:
  using vertex = std::size_t;
  using label_type = Label;

  UGraph() = default;

  /// Throws std::invalid_argument on duplicate labels, self-loops or
  /// out-of-range endpoints. Repeated edges are merged.
  UGraph(std::vector<Label> labels, const std::vector<std::pair<vertex, vertex>>& edges)
      : labels_(std::move(labels)), adj_(labels_.size(), Bitset(labels_.size())),
        nbrs_(labels_.size()) {
    auto sorted = labels_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw std::invalid_argument("duplicate vertex label");
    for (auto [u, v] : edges) {
      if (u >= size() || v >= size()) throw std::invalid_argument("edge endpoint out of range");
      if (u == v) throw std::invalid_argument("self-loop");
      adj_[u].set(v);
      adj_[v].set(u);
    }
    for (vertex u = 0; u < size(); ++u) {
      for (auto v = adj_[u].find_first(); v != Bitset::npos; v = adj_[u].find_next(v))
        nbrs_[u].push_back(v);
      edge_count_ += nbrs_[u].size();
    }
    edge_count_ /= 2;
  }

  /// Vertices = labels; u ~ v iff adjacent(label_u, label_v).
  template <class Pred>
  static UGraph from_relation(std::vector<Label> labels, Pred adjacent) {
    std::vector<std::pair<vertex, vertex>> edges;
    for (vertex u = 0; u < labels.size(); ++u)
      for (vertex v = u + 1; v < labels.size(); ++v)
        if (adjacent(labels[u], labels[v])) edges.emplace_back(u, v);
    return UGraph(std::move(labels), edges);
  }

  std::size_t size() const { return labels_.size(); }
  bool empty() const { return labels_.empty(); }
  std::size_t edge_count() const { return edge_count_; }

  const Label& label(vertex v) const { return labels_.at(v); }
  const std::vector<Label>& labels() const { return labels_; }

  /// Index of the vertex carrying `l`; throws NotAVertex.
  vertex find(const Label& l) const {
    auto it = std::find(labels_.begin(), labels_.end(), l);
    if (it == labels_.end()) throw NotAVertex("label is not a vertex");
    return static_cast<vertex>(it - labels_.begin());
  }
  bool has_label(const Label& l) const {
    return std::find(labels_.begin(), labels_.end(), l) != labels_.end();
  }

  bool adjacent(vertex u, vertex v) const {
    check(u);
    check(v);
    return adj_[u].test(v);
  }
  const std::vector<vertex>& neighbors(vertex u) const {
    check(u);
    return nbrs_[u];
  }
  /// Open neighborhood as a bitset over vertex indices.
  const Bitset& neighbor_set(vertex u) const {
    check(u);
    return adj_[u];
  }
  std::size_t degree(vertex u) const { return neighbors(u).size(); }

  /// Edges (u, v) with u < v, in lexicographic order.
  std::vector<std::pair<vertex, vertex>> edges() const {
    std::vector<std::pair<vertex, vertex>> out;
    for (vertex u = 0; u < size(); ++u)
      for (vertex v : nbrs_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  void check(vertex u) const {
    if (u >= size()) throw NotAVertex("vertex index " + std::to_string(u) + " out of range");
  }

  /// Same labels and same edge set, vertex order included.
  bool operator==(const UGraph& o) const { return labels_ == o.labels_ && adj_ == o.adj_; }

 private:
  std::vector<Label> labels_;
  std::vector<Bitset> adj_;
  std::vector<std::vector<vertex>> nbrs_;
  std::size_t edge_count_ = 0;
};

/// Graph on labels 0..n-1 from an edge list.
inline UGraph<std::size_t> make_graph(std::size_t n,
                                      const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  std::vector<std::size_t> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = i;
  return UGraph<std::size_t>(std::move(labels), edges);
}

/// Shortest-path length, cycle length, or a graph-level measure that may be
/// infinite (no path / no cycle) or undefined on empty and single-vertex
/// graphs.
class DistanceValue {
 public:
  enum class Kind { finite, infinite, degenerate };

  constexpr DistanceValue() = default;
  static constexpr DistanceValue of(std::size_t v) { return DistanceValue(Kind::finite, v); }
  static constexpr DistanceValue inf() { return DistanceValue(Kind::infinite, 0); }
  static constexpr DistanceValue degenerate() { return DistanceValue(Kind::degenerate, 0); }

  constexpr Kind kind() const { return kind_; }
  constexpr bool is_finite() const { return kind_ == Kind::finite; }
  constexpr bool is_inf() const { return kind_ == Kind::infinite; }
  constexpr bool is_degenerate() const { return kind_ == Kind::degenerate; }

  std::size_t value() const {
    if (!is_finite()) throw std::logic_error("DistanceValue is not finite");
    return value_;
  }

  constexpr bool operator==(const DistanceValue&) const = default;

  /// Finite values order naturally and sit below INF; degenerate is unordered.
  constexpr std::partial_ordering operator<=>(const DistanceValue& o) const {
    if (is_degenerate() || o.is_degenerate())
      return *this == o ? std::partial_ordering::equivalent : std::partial_ordering::unordered;
    if (is_inf() || o.is_inf()) {
      if (is_inf() && o.is_inf()) return std::partial_ordering::equivalent;
      return is_inf() ? std::partial_ordering::greater : std::partial_ordering::less;
    }
    return value_ <=> o.value_;
  }

 private:
  constexpr DistanceValue(Kind k, std::size_t v) : kind_(k), value_(v) {}
  Kind kind_ = Kind::degenerate;
  std::size_t value_ = 0;
};

inline std::string to_string(DistanceValue d) {
  if (d.is_inf()) return "inf";
  if (d.is_degenerate()) return "degenerate";
  return std::to_string(d.value());
}

// Label rendering for exports and reports.
inline std::string render_label(PointSet s) { return to_string(s); }
template <std::integral T>
std::string render_label(T v) { return std::to_string(v); }
inline std::string render_label(const std::string& s) { return s; }

}  // namespace aig
