#pragma once

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "aig/errors.hpp"
#include "aig/graph.hpp"
#include "aig/invariants.hpp"
#include "aig/topology.hpp"

namespace aig {

// ---------------------------------------------------------------------------
// Operator calculus at open-set level
//
// An ideal I of C(X) is represented by the open set O(I), the union of the
// cozero sets of its members. For finite discrete X, C(X) = R^n and every
// ideal is I_S = {f : f vanishes outside S}, so O(I_S) = S.
// ---------------------------------------------------------------------------

/// A vertex of AG(X) for discrete X: a nonzero ideal with nonzero annihilator,
/// identified with its support.
class IdealVertex {
 public:
  IdealVertex(int n, PointSet support) : n_(n), support_(support) {
    if (!support.within(n)) throw NotAVertex("support outside the ground set");
    if (support.empty()) throw NotAVertex("zero ideal is not a vertex");
    if (support == PointSet::full(n)) throw NotAVertex("ideal with zero annihilator is not a vertex");
  }
  int points() const { return n_; }
  PointSet support() const { return support_; }

 private:
  int n_;
  PointSet support_;
};

inline PointSet o_of_ideal(const IdealVertex& v) { return v.support(); }

/// O(I(U)) = interior(X \ U): the ideal of functions vanishing on U, as an open set.
inline PointSet i_of_set(const Topology& t, PointSet u) { return t.interior(u.complement(t.size())); }

/// O(Ann(I)) = interior(X \ O(I)) for an ideal represented by the open set g.
inline PointSet ann_open(const Topology& t, PointSet g) {
  if (!t.is_open(g)) throw std::invalid_argument("ann_open expects an open set, got " + to_string(g));
  return t.interior(g.complement(t.size()));
}

/// τ* membership: open, nonempty, and the complement has nonempty interior.
inline bool is_open_vertex(const Topology& t, PointSet g) {
  return g.within(t.size()) && t.is_open(g) && !g.empty() &&
         !t.interior(g.complement(t.size())).empty();
}

/// τ* in mask order.
inline std::vector<PointSet> open_vertices(const Topology& t) {
  std::vector<PointSet> out;
  for (auto g : t.opens())
    if (is_open_vertex(t, g)) out.push_back(g);
  return out;
}

// ---------------------------------------------------------------------------
// Graph builders
// ---------------------------------------------------------------------------

/// Largest n accepted by build_ag_discrete by default (2^n - 2 vertices).
inline constexpr int kDefaultModelCap = 12;

/// AG(X) for discrete X on n points: nonempty proper subsets, adjacent iff disjoint.
inline UGraph<PointSet> build_ag_discrete(int n, int cap = kDefaultModelCap) {
  if (n < 2) throw std::invalid_argument("AG model needs at least 2 points");
  if (n > cap) throw CapExceeded("AG model capped at n=" + std::to_string(cap));
  std::vector<PointSet> labels;
  const auto full = PointSet::full(n);
  for_each_subset(n, [&](PointSet s) {
    if (!s.empty() && s != full) labels.push_back(s);
  });
  return UGraph<PointSet>::from_relation(std::move(labels),
                                         [](PointSet a, PointSet b) { return !a.intersects(b); });
}

/// Disjoint open set graph: vertices τ*, adjacent iff disjoint. May be empty.
inline UGraph<PointSet> build_dg(const Topology& t) {
  return UGraph<PointSet>::from_relation(open_vertices(t),
                                         [](PointSet a, PointSet b) { return !a.intersects(b); });
}

/// AG(C(X)) for an arbitrary finite space. C(X) only sees the Tychonoff
/// reflection, so the graph is AG of the discrete space on the weak
/// components; labels are O(I) lifted back into X. Vertex order follows the
/// reflection's mask order, so invariants line up with build_ag_discrete(m).
inline UGraph<PointSet> build_ag(const Topology& t, int cap = kDefaultModelCap) {
  auto refl = tychonoff_reflection(t);
  const int m = refl.space.size();
  if (m < 2) return UGraph<PointSet>{};
  auto base = build_ag_discrete(m, cap);
  std::vector<PointSet> labels;
  for (auto s : base.labels()) labels.push_back(refl.lift(s));
  return UGraph<PointSet>(std::move(labels), base.edges());
}

// ---------------------------------------------------------------------------
// Closed-form classifiers. Arguments are open sets O(I), O(J) that must be
// vertices (members of τ*).
// ---------------------------------------------------------------------------

namespace detail {
inline void require_vertex(const Topology& t, PointSet g) {
  if (!is_open_vertex(t, g)) throw NotAVertex(to_string(g) + " is not a vertex");
}
inline void require_pair(const Topology& t, PointSet g, PointSet h) {
  require_vertex(t, g);
  require_vertex(t, h);
  if (g == h) throw std::invalid_argument("classifier needs two distinct vertices");
}
}  // namespace detail

/// IJ = 0 iff O(I) ∩ O(J) = ∅.
inline bool adjacency_test(const Topology& t, PointSet g, PointSet h) {
  detail::require_pair(t, g, h);
  return !g.intersects(h);
}

/// Orthogonal iff disjoint with dense union.
inline bool orthogonality_test(const Topology& t, PointSet g, PointSet h) {
  detail::require_pair(t, g, h);
  return !g.intersects(h) && t.is_dense(g | h);
}

/// Predicted d(I, J) in {1, 2, 3}.
inline int distance_classifier(const Topology& t, PointSet g, PointSet h) {
  detail::require_pair(t, g, h);
  if (!g.intersects(h)) return 1;
  return t.is_dense(g | h) ? 3 : 2;
}

/// Predicted ecc(I): 3 unless O(I) is a singleton; then 2, or 1 when |X| = 2.
inline int ecc_classifier(const Topology& t, PointSet g) {
  detail::require_vertex(t, g);
  if (g.size() != 1) return 3;
  return t.size() > 2 ? 2 : 1;
}

/// I is a leaf iff X \ closure(O(I)) is a singleton.
inline bool leaf_classifier(const Topology& t, PointSet g) {
  detail::require_vertex(t, g);
  return t.closure(g).complement(t.size()).size() == 1;
}

/// Predicted gi(I, J) in {3, 4, 5} for non-leaf vertices.
inline int gi_classifier(const Topology& t, PointSet g, PointSet h) {
  detail::require_pair(t, g, h);
  if (leaf_classifier(t, g) || leaf_classifier(t, h))
    throw std::invalid_argument("gi classifier is undefined on leaf vertices");
  const bool dense_union = t.is_dense(g | h);
  if (!g.intersects(h)) return dense_union ? 4 : 3;
  if (t.closure(g) == t.closure(h)) return 4;
  return t.closure(g | h).complement(t.size()).size() == 1 ? 5 : 4;
}

/// gi_classifier with the dense-union overlap case split out: when the two
/// vertices overlap and X \ cl(G ∪ H) is empty they have no common
/// neighbour, and the shortest cycle is two disjoint 3-paths, so gi = 6.
inline int gi_classifier_repaired(const Topology& t, PointSet g, PointSet h) {
  const int literal = gi_classifier(t, g, h);
  if (g.intersects(h) && t.closure(g) != t.closure(h) && t.is_dense(g | h)) return 6;
  return literal;
}

/// Radius of AG for a space of `points` points.
inline int radius_predictor(int points, bool has_isolated) {
  if (points < 2) throw std::invalid_argument("radius predictor needs at least 2 points");
  if (points == 2) return 1;
  return has_isolated ? 2 : 3;
}

/// 3 for more than two points; no cycle at all on two points.
inline DistanceValue girth_predictor(int points) {
  if (points < 2) throw std::invalid_argument("girth predictor needs at least 2 points");
  return points == 2 ? DistanceValue::inf() : DistanceValue::of(3);
}

/// Predicts AG(X) is triangulated exactly when X has no isolated point.
inline bool triangulated_predictor(const Topology& t) { return t.isolated_points().empty(); }

/// Membership of I(U) in A(X), read literally: interior(closure(U)) ≠ ∅.
inline bool i_of_set_in_A_literal(const Topology& t, PointSet u) {
  return !t.interior(t.closure(u)).empty();
}

/// Repaired reading: U is not dense and interior(closure(U)) ≠ ∅.
inline bool i_of_set_in_A_repaired(const Topology& t, PointSet u) {
  return !t.is_dense(u) && !t.interior(t.closure(u)).empty();
}

// ---------------------------------------------------------------------------
// Vertex maps between graphs
// ---------------------------------------------------------------------------

/// Copy `copy` of base vertex `base` in a twin expansion.
template <class L>
struct Twin {
  L base;
  std::size_t copy = 0;
  auto operator<=>(const Twin&) const = default;
};

template <class L>
std::string render_label(const Twin<L>& t) {
  return render_label(t.base) + "#" + std::to_string(t.copy);
}

/// A surjective vertex map φ: source -> target with {u,v} ∈ E ⟺ {φu,φv} ∈ E'.
template <class SL, class TL>
struct HomWitness {
  UGraph<SL> source;
  UGraph<TL> target;
  std::vector<std::size_t> phi;

  /// Throws std::invalid_argument naming the first violated condition.
  void validate() const {
    if (phi.size() != source.size()) throw std::invalid_argument("map size differs from source");
    std::vector<char> hit(target.size(), 0);
    for (auto p : phi) {
      if (p >= target.size()) throw std::invalid_argument("map leaves the target");
      hit[p] = 1;
    }
    for (auto h : hit)
      if (!h) throw std::invalid_argument("map is not surjective");
    for (std::size_t u = 0; u < source.size(); ++u)
      for (std::size_t v = u + 1; v < source.size(); ++v) {
        bool e = source.adjacent(u, v);
        if (e && phi[u] == phi[v]) throw std::invalid_argument("edge collapsed to a point");
        bool image = phi[u] != phi[v] && target.adjacent(phi[u], phi[v]);
        if (e != image) throw std::invalid_argument("edge relation not preserved");
      }
  }
};

/// Replaces base vertex i by multiplicities[i] pairwise non-adjacent copies
/// with the same neighborhood; φ collapses the copies.
template <class L>
HomWitness<Twin<L>, L> twin_expansion(const UGraph<L>& base,
                                      const std::vector<std::size_t>& multiplicities) {
  if (multiplicities.size() != base.size())
    throw std::invalid_argument("one multiplicity per base vertex required");
  std::vector<Twin<L>> labels;
  std::vector<std::size_t> phi;
  std::vector<std::vector<std::size_t>> copies(base.size());
  for (std::size_t b = 0; b < base.size(); ++b) {
    if (multiplicities[b] == 0) throw std::invalid_argument("zero multiplicity");
    for (std::size_t c = 0; c < multiplicities[b]; ++c) {
      copies[b].push_back(labels.size());
      labels.push_back({base.label(b), c});
      phi.push_back(b);
    }
  }
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (auto [a, b] : base.edges())
    for (auto x : copies[a])
      for (auto y : copies[b]) edges.emplace_back(x, y);
  HomWitness<Twin<L>, L> w{UGraph<Twin<L>>(std::move(labels), edges), base, std::move(phi)};
  w.validate();
  return w;
}

template <class L>
HomWitness<L, L> identity_witness(const UGraph<L>& g) {
  std::vector<std::size_t> phi(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) phi[i] = i;
  HomWitness<L, L> w{g, g, std::move(phi)};
  w.validate();
  return w;
}

/// Maps each source vertex to the target vertex with the same label.
template <class L>
HomWitness<L, L> witness_by_labels(const UGraph<L>& source, const UGraph<L>& target) {
  std::vector<std::size_t> phi;
  for (const auto& l : source.labels()) phi.push_back(target.find(l));
  HomWitness<L, L> w{source, target, std::move(phi)};
  w.validate();
  return w;
}

}  // namespace aig
