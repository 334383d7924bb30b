#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "aig/errors.hpp"
#include "aig/topology.hpp"

namespace aig {

/// Default largest n for exhaustive enumeration and canonical forms.
inline constexpr int kDefaultEnumerationCap = 5;
/// Hard limit for canonical forms (n! relabelings).
inline constexpr int kCanonicalHardCap = 8;

using TopologyFilter = std::function<bool(const Topology&)>;

namespace detail {

// Assign U_0, U_1, ... in order. Pairwise consistency with earlier points
// (y ∈ U_x ⇒ U_y ⊆ U_x, both directions) is exactly transitivity of the
// specialization preorder, so each leaf is a distinct topology.
template <class Fn>
void extend_neighborhoods(int n, int x, std::vector<PointSet>& nbhd, Fn& emit) {
  if (x == n) {
    emit(nbhd);
    return;
  }
  const auto self = PointSet::singleton(x);
  const auto others = PointSet::full(n) - self;
  // Enumerate supersets of {x} in increasing mask order.
  PointSet::mask_type sub = 0;
  do {
    auto cand = PointSet(sub) | self;
    bool ok = true;
    for (int y = 0; y < x && ok; ++y) {
      if (cand.contains(y) && !nbhd[y].subset_of(cand)) ok = false;
      if (nbhd[y].contains(x) && !cand.subset_of(nbhd[y])) ok = false;
    }
    // Later points inside cand are constrained when they are assigned.
    if (ok) {
      nbhd[x] = cand;
      extend_neighborhoods(n, x + 1, nbhd, emit);
    }
    sub = (sub - others.mask()) & others.mask();
  } while (sub != 0);
}

}  // namespace detail

/// Every topology on n labeled points exactly once, in lexicographic order of
/// the sorted open family. `filter` (optional) keeps a subset.
inline std::vector<Topology> enumerate_topologies(int n, const TopologyFilter& filter = {},
                                                  int cap = kDefaultEnumerationCap) {
  if (n > cap)
    throw CapExceeded("topology enumeration capped at n=" + std::to_string(cap) +
                      " (requested " + std::to_string(n) + ")");
  if (n < 1) throw std::invalid_argument("point count must be positive");
  std::vector<Topology> out;
  std::vector<PointSet> nbhd(n);
  auto emit = [&](const std::vector<PointSet>& u) {
    auto t = Topology::from_minimal_neighborhoods(n, u);
    if (!filter || filter(t)) out.push_back(std::move(t));
  };
  detail::extend_neighborhoods(n, 0, nbhd, emit);
  std::sort(out.begin(), out.end());
  return out;
}

/// Relabels points: point p becomes perm[p].
inline Topology relabel(const Topology& t, const std::vector<int>& perm) {
  std::vector<PointSet> opens;
  opens.reserve(t.opens().size());
  for (auto g : t.opens()) {
    PointSet h;
    for (int p : g.points()) h.insert(perm[p]);
    opens.push_back(h);
  }
  return Topology::from_opens(t.size(), std::move(opens));
}

/// Lexicographically least relabeling (brute force over all n! permutations).
inline Topology canonical_form(const Topology& t, int cap = kDefaultEnumerationCap) {
  const int n = t.size();
  if (n > std::min(cap, kCanonicalHardCap))
    throw CapExceeded("canonical form capped at n=" + std::to_string(std::min(cap, kCanonicalHardCap)));
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<PointSet> best = t.opens(), cur(t.opens().size());
  do {
    for (std::size_t i = 0; i < t.opens().size(); ++i) {
      PointSet::mask_type m = 0;
      for (int p : t.opens()[i].points()) m |= PointSet::mask_type{1} << perm[p];
      cur[i] = PointSet(m);
    }
    std::sort(cur.begin(), cur.end());
    if (cur < best) best = cur;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return Topology::from_opens(n, std::move(best));
}

/// Distinct canonical forms of the n-point topologies, sorted.
inline std::vector<Topology> enumerate_canonical(int n, const TopologyFilter& filter = {},
                                                 int cap = kDefaultEnumerationCap) {
  std::vector<Topology> out;
  for (const auto& t : enumerate_topologies(n, filter, cap)) out.push_back(canonical_form(t, cap));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Named SpaceClass predicates used by the CLI and the harness.
inline TopologyFilter filter_by_name(const std::string& name) {
  if (name.empty() || name == "all") return {};
  if (name == "discrete") return [](const Topology& t) { return classify(t).is_discrete; };
  if (name == "non-discrete") return [](const Topology& t) { return !classify(t).is_discrete; };
  if (name == "t0") return [](const Topology& t) { return classify(t).is_T0; };
  if (name == "t1") return [](const Topology& t) { return classify(t).is_T1; };
  if (name == "isolated") return [](const Topology& t) { return classify(t).has_isolated_point; };
  if (name == "no-isolated") return [](const Topology& t) { return !classify(t).has_isolated_point; };
  if (name == "connected") return [](const Topology& t) { return classify(t).component_count == 1; };
  throw std::invalid_argument("unknown filter '" + name +
                              "' (expected all, discrete, non-discrete, t0, t1, isolated, "
                              "no-isolated, connected)");
}

}  // namespace aig
