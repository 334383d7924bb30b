#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "aig/errors.hpp"
#include "aig/pointset.hpp"

namespace aig {

/// A topology on the ground set {0, ..., n-1}.
///
/// Opens are kept sorted by mask and deduplicated. Construction validates the
/// axioms (empty set and X present, closed under union and intersection) and
/// caches the minimal neighborhood U_x of every point; most point-set
/// operators reduce to U_x lookups.
class Topology {
 public:
  /// Validates and builds. Throws std::invalid_argument on any violated axiom.
  static Topology from_opens(int n, std::vector<PointSet> opens) {
    check_size(n);
    std::sort(opens.begin(), opens.end());
    if (std::adjacent_find(opens.begin(), opens.end()) != opens.end())
      throw std::invalid_argument("duplicate open set");
    for (auto s : opens)
      if (!s.within(n)) throw std::invalid_argument("open set outside the ground set");
    const auto x = PointSet::full(n);
    if (!std::binary_search(opens.begin(), opens.end(), PointSet{}))
      throw std::invalid_argument("empty set is not open");
    if (!std::binary_search(opens.begin(), opens.end(), x))
      throw std::invalid_argument("ground set is not open");

    Topology t(n, std::move(opens));
    // Every open G satisfies U_x ⊆ G for x in G, so the family is contained
    // in the U-saturated sets; it is a topology iff it is all of them.
    for (int p = 0; p < n; ++p)
      if (!t.is_open(t.min_nbhd_[p]))
        throw std::invalid_argument("not closed under intersection");
    std::size_t saturated = 0;
    for_each_subset(n, [&](PointSet s) { saturated += t.is_saturated(s); });
    if (saturated != t.opens_.size())
      throw std::invalid_argument("not closed under union");
    return t;
  }

  /// Builds the topology whose minimal neighborhoods are `nbhds` (one per
  /// point). The caller guarantees x ∈ U_x and y ∈ U_x ⇒ U_y ⊆ U_x.
  static Topology from_minimal_neighborhoods(int n, const std::vector<PointSet>& nbhds) {
    check_size(n);
    std::vector<PointSet> opens;
    for_each_subset(n, [&](PointSet s) {
      bool ok = true;
      for (int p : s.points()) ok = ok && nbhds[p].subset_of(s);
      if (ok) opens.push_back(s);
    });
    return Topology(n, std::move(opens));
  }

  static Topology discrete(int n) {
    check_size(n);
    std::vector<PointSet> opens;
    for_each_subset(n, [&](PointSet s) { opens.push_back(s); });
    return Topology(n, std::move(opens));
  }

  static Topology indiscrete(int n) {
    check_size(n);
    return Topology(n, {PointSet{}, PointSet::full(n)});
  }

  /// {∅, {0}, {0,1}} on two points.
  static Topology sierpinski() { return Topology(2, {PointSet{}, PointSet{0}, PointSet{0, 1}}); }

  int size() const { return n_; }
  PointSet ground() const { return PointSet::full(n_); }
  const std::vector<PointSet>& opens() const { return opens_; }

  bool is_open(PointSet s) const { return std::binary_search(opens_.begin(), opens_.end(), s); }
  bool is_closed(PointSet s) const { return is_open(s.complement(n_)); }

  /// Intersection of all opens containing x.
  PointSet minimal_neighborhood(int x) const {
    if (x < 0 || x >= n_) throw std::out_of_range("point outside the ground set");
    return min_nbhd_[x];
  }

  /// Largest open subset of `a`.
  PointSet interior(PointSet a) const {
    check_within(a);
    PointSet out;
    for (int p = 0; p < n_; ++p)
      if (min_nbhd_[p].subset_of(a)) out.insert(p);
    return out;
  }

  /// Smallest closed superset of `a`.
  PointSet closure(PointSet a) const {
    check_within(a);
    return interior(a.complement(n_)).complement(n_);
  }

  bool is_dense(PointSet a) const { return closure(a) == ground(); }

  PointSet isolated_points() const {
    PointSet out;
    for (int p = 0; p < n_; ++p)
      if (min_nbhd_[p] == PointSet::singleton(p)) out.insert(p);
    return out;
  }

  /// Distinct minimal neighborhoods in mask order: the unique minimal base.
  std::vector<PointSet> minimal_base() const {
    std::vector<PointSet> base(min_nbhd_.begin(), min_nbhd_.end());
    std::sort(base.begin(), base.end());
    base.erase(std::unique(base.begin(), base.end()), base.end());
    return base;
  }

  bool operator==(const Topology& o) const { return n_ == o.n_ && opens_ == o.opens_; }
  /// Lexicographic on (n, sorted open family).
  bool operator<(const Topology& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    return opens_ < o.opens_;
  }

 private:
  Topology(int n, std::vector<PointSet> sorted_opens) : n_(n), opens_(std::move(sorted_opens)) {
    min_nbhd_.assign(n_, PointSet::full(n_));
    for (auto g : opens_)
      for (int p : g.points()) min_nbhd_[p] &= g;
  }

  static void check_size(int n) {
    if (n < 1 || n > kMaxPoints)
      throw std::invalid_argument("point count must be in 1.." + std::to_string(kMaxPoints));
  }
  void check_within(PointSet a) const {
    if (!a.within(n_)) throw std::invalid_argument("set outside the ground set");
  }
  bool is_saturated(PointSet s) const {
    for (int p : s.points())
      if (!min_nbhd_[p].subset_of(s)) return false;
    return true;
  }

  int n_ = 0;
  std::vector<PointSet> opens_;
  std::vector<PointSet> min_nbhd_;
};

// Free-function spellings of the point-set operators.
inline PointSet interior(const Topology& t, PointSet a) { return t.interior(a); }
inline PointSet closure(const Topology& t, PointSet a) { return t.closure(a); }
inline bool is_dense(const Topology& t, PointSet a) { return t.is_dense(a); }
inline PointSet isolated_points(const Topology& t) { return t.isolated_points(); }
inline PointSet minimal_neighborhood(const Topology& t, int x) { return t.minimal_neighborhood(x); }

/// Minimum cardinality of a base. A finite space has a unique minimal base,
/// its set of minimal neighborhoods.
inline std::size_t weight(const Topology& t) { return t.minimal_base().size(); }

namespace detail {
inline void pack_disjoint(const std::vector<PointSet>& sets, std::size_t i, PointSet used,
                          std::size_t count, std::size_t& best) {
  if (count + (sets.size() - i) <= best) {
    best = std::max(best, count);
    return;
  }
  if (i == sets.size()) {
    best = std::max(best, count);
    return;
  }
  if (!sets[i].intersects(used)) pack_disjoint(sets, i + 1, used | sets[i], count + 1, best);
  pack_disjoint(sets, i + 1, used, count, best);
}
}  // namespace detail

/// Maximum number of pairwise disjoint nonempty opens. Any such family can be
/// shrunk to disjoint minimal neighborhoods, so the search runs over the
/// minimal base only.
inline std::size_t cellularity(const Topology& t) {
  std::size_t best = 0;
  detail::pack_disjoint(t.minimal_base(), 0, PointSet{}, 0, best);
  return best;
}

struct SpaceClass {
  bool is_discrete = false;
  bool is_T0 = false;
  bool is_T1 = false;
  bool has_isolated_point = false;
  /// Weak components of the digraph x -> y for y ∈ U_x.
  int component_count = 0;
};

/// Point -> weak specialization component, numbered by smallest member.
inline std::vector<int> specialization_components(const Topology& t) {
  const int n = t.size();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int x = 0; x < n; ++x)
    for (int y : t.minimal_neighborhood(x).points()) {
      int a = find(x), b = find(y);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  std::vector<int> label(n, -1), out(n);
  int next = 0;
  for (int x = 0; x < n; ++x) {
    int r = find(x);
    if (label[r] < 0) label[r] = next++;
    out[x] = label[r];
  }
  return out;
}

inline SpaceClass classify(const Topology& t) {
  const int n = t.size();
  SpaceClass c;
  c.has_isolated_point = !t.isolated_points().empty();
  c.is_discrete = t.isolated_points() == t.ground();

  c.is_T0 = true;
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (t.minimal_neighborhood(x) == t.minimal_neighborhood(y)) c.is_T0 = false;

  // Literal T1: each ordered pair is separated by some open.
  c.is_T1 = true;
  for (int x = 0; x < n && c.is_T1; ++x)
    for (int y = 0; y < n && c.is_T1; ++y) {
      if (x == y) continue;
      bool separated = std::any_of(t.opens().begin(), t.opens().end(), [&](PointSet g) {
        return g.contains(x) && !g.contains(y);
      });
      c.is_T1 = separated;
    }

  auto comp = specialization_components(t);
  c.component_count = n == 0 ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
  return c;
}

/// The discrete space on the weak components, with the quotient map.
///
/// Real-valued continuous functions on a finite space are exactly the
/// functions constant on every weak component, so C(X) depends only on this
/// reflection.
struct Reflection {
  Topology space;
  std::vector<int> quotient;  ///< point of X -> point of the reflection

  /// Preimage of a subset of the reflection.
  PointSet lift(PointSet s) const {
    PointSet out;
    for (std::size_t x = 0; x < quotient.size(); ++x)
      if (s.contains(quotient[x])) out.insert(static_cast<int>(x));
    return out;
  }
  /// Image of a subset of X.
  PointSet image(PointSet a) const {
    PointSet out;
    for (int x : a.points()) out.insert(quotient[x]);
    return out;
  }
};

inline Reflection tychonoff_reflection(const Topology& t) {
  auto comp = specialization_components(t);
  int m = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
  return Reflection{Topology::discrete(m), std::move(comp)};
}

/// Number of functions X -> {0,1} constant on every minimal neighborhood.
inline std::size_t count_continuous_binary_functions(const Topology& t) {
  const int n = t.size();
  std::size_t count = 0;
  for_each_subset(n, [&](PointSet ones) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) {
      auto u = t.minimal_neighborhood(x);
      ok = ones.contains(x) ? u.subset_of(ones) : !u.intersects(ones);
    }
    count += ok;
  });
  return count;
}

}  // namespace aig
