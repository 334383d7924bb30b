#pragma once

// Brute-force reference implementations used only by the tests. Each one
// works from definitions and shares no code path with the library routine
// it checks.

#include <algorithm>
#include <cstddef>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "aig/graph.hpp"
#include "aig/pointset.hpp"
#include "aig/topology.hpp"

namespace oracle {

using aig::PointSet;

/// Pairwise union/intersection closure plus ∅, X.
inline bool is_topology(int n, const std::vector<PointSet>& family) {
  std::set<PointSet> s(family.begin(), family.end());
  if (!s.count(PointSet{}) || !s.count(PointSet::full(n))) return false;
  for (auto a : s)
    for (auto b : s)
      if (!s.count(a | b) || !s.count(a & b)) return false;
  return true;
}

/// Counts topologies by testing every family of nonempty proper subsets.
inline std::size_t count_topologies_generate_and_filter(int n) {
  std::vector<PointSet> proper;
  aig::for_each_subset(n, [&](PointSet s) {
    if (!s.empty() && s != PointSet::full(n)) proper.push_back(s);
  });
  std::size_t count = 0;
  const std::size_t families = std::size_t{1} << proper.size();
  for (std::size_t f = 0; f < families; ++f) {
    std::vector<PointSet> fam{PointSet{}, PointSet::full(n)};
    for (std::size_t i = 0; i < proper.size(); ++i)
      if ((f >> i) & 1) fam.push_back(proper[i]);
    count += is_topology(n, fam);
  }
  return count;
}

/// Union of all opens contained in A.
inline PointSet interior_by_scan(const aig::Topology& t, PointSet a) {
  PointSet out;
  for (auto g : t.opens())
    if (g.subset_of(a)) out |= g;
  return out;
}

/// Smallest subfamily of opens whose unions give every open.
inline std::size_t weight_by_base_search(const aig::Topology& t) {
  const auto& opens = t.opens();
  std::size_t best = opens.size();
  for (std::size_t f = 0; f < (std::size_t{1} << opens.size()); ++f) {
    std::size_t k = static_cast<std::size_t>(__builtin_popcountll(f));
    if (k >= best) continue;
    bool base = true;
    for (auto g : opens) {
      PointSet u;
      for (std::size_t i = 0; i < opens.size(); ++i)
        if (((f >> i) & 1) && opens[i].subset_of(g)) u |= opens[i];
      if (u != g) {
        base = false;
        break;
      }
    }
    if (base) best = k;
  }
  return best;
}

/// Largest pairwise-disjoint family over all nonempty opens.
inline std::size_t cellularity_by_families(const aig::Topology& t) {
  std::vector<PointSet> ne;
  for (auto g : t.opens())
    if (!g.empty()) ne.push_back(g);
  std::size_t best = 0;
  for (std::size_t f = 0; f < (std::size_t{1} << ne.size()); ++f) {
    PointSet used;
    bool ok = true;
    for (std::size_t i = 0; i < ne.size() && ok; ++i)
      if ((f >> i) & 1) {
        ok = !ne[i].intersects(used);
        used |= ne[i];
      }
    if (ok) best = std::max<std::size_t>(best, __builtin_popcountll(f));
  }
  return best;
}

/// Functions X -> {0,1} whose preimages of 0 and of 1 are both open.
inline std::size_t continuous_binary_by_preimages(const aig::Topology& t) {
  std::size_t count = 0;
  aig::for_each_subset(t.size(), [&](PointSet ones) {
    count += t.is_open(ones) && t.is_open(ones.complement(t.size()));
  });
  return count;
}

inline std::size_t dominating_number(const aig::UGraph<std::size_t>& g) {
  const std::size_t n = g.size();
  for (std::size_t k = 0; k <= n; ++k)
    for (std::size_t f = 0; f < (std::size_t{1} << n); ++f) {
      if (static_cast<std::size_t>(__builtin_popcountll(f)) != k) continue;
      bool dom = true;
      for (std::size_t v = 0; v < n && dom; ++v) {
        if ((f >> v) & 1) continue;
        bool hit = false;
        for (auto w : g.neighbors(v)) hit = hit || ((f >> w) & 1);
        dom = hit;
      }
      if (dom) return k;
    }
  return n;
}

inline bool is_clique(const aig::UGraph<std::size_t>& g, std::size_t f) {
  for (std::size_t u = 0; u < g.size(); ++u)
    for (std::size_t v = u + 1; v < g.size(); ++v)
      if (((f >> u) & 1) && ((f >> v) & 1) && !g.adjacent(u, v)) return false;
  return true;
}

inline std::size_t clique_number(const aig::UGraph<std::size_t>& g) {
  std::size_t best = 0;
  for (std::size_t f = 0; f < (std::size_t{1} << g.size()); ++f)
    if (is_clique(g, f)) best = std::max<std::size_t>(best, __builtin_popcountll(f));
  return best;
}

/// χ by DP over vertex subsets: peel off an independent set containing the
/// lowest remaining vertex.
inline std::size_t chromatic_number(const aig::UGraph<std::size_t>& g) {
  const std::size_t n = g.size();
  const std::size_t full = (std::size_t{1} << n);
  std::vector<char> indep(full, 1);
  for (std::size_t f = 0; f < full; ++f)
    for (std::size_t u = 0; u < n && indep[f]; ++u)
      for (std::size_t v = u + 1; v < n; ++v)
        if (((f >> u) & 1) && ((f >> v) & 1) && g.adjacent(u, v)) {
          indep[f] = 0;
          break;
        }
  std::vector<std::size_t> dp(full, n + 1);
  dp[0] = 0;
  for (std::size_t s = 1; s < full; ++s) {
    std::size_t low = s & (~s + 1);
    for (std::size_t sub = s; sub; sub = (sub - 1) & s)
      if ((sub & low) && indep[sub]) dp[s] = std::min(dp[s], dp[s & ~sub] + 1);
  }
  return dp[full - 1];
}

/// Shortest simple cycle through u and v by enumerating every simple path
/// from u (no pruning, no length cap). Returns 0 when there is none.
inline std::size_t gi_by_enumeration(const aig::UGraph<std::size_t>& g, std::size_t u,
                                     std::size_t v) {
  std::size_t best = 0;
  std::vector<char> on(g.size(), 0);
  std::vector<std::size_t> path{u};
  on[u] = 1;
  auto rec = [&](auto&& self, std::size_t x) -> void {
    for (auto y : g.neighbors(x)) {
      if (y == u && path.size() >= 3) {
        if (std::find(path.begin(), path.end(), v) != path.end() || u == v)
          if (best == 0 || path.size() < best) best = path.size();
        continue;
      }
      if (on[y]) continue;
      on[y] = 1;
      path.push_back(y);
      self(self, y);
      path.pop_back();
      on[y] = 0;
    }
  };
  rec(rec, u);
  return best;
}

/// For a fixed u, the shortest cycle through u and each other vertex among
/// cycles of length <= cap, found by walking every simple path from u of up
/// to cap - 1 edges. 0 means no such cycle. Templated on the label type so
/// it runs on labeled models directly.
template <class L>
std::vector<std::size_t> gi_from_by_enumeration(const aig::UGraph<L>& g, std::size_t u, std::size_t cap) {
  std::vector<std::size_t> best(g.size(), 0);
  std::vector<char> on(g.size(), 0);
  std::vector<std::size_t> path{u};
  on[u] = 1;
  auto rec = [&](auto&& self, std::size_t x) -> void {
    for (auto y : g.neighbors(x)) {
      if (y == u && path.size() >= 3) {
        for (auto w : path)
          if (best[w] == 0 || path.size() < best[w]) best[w] = path.size();
        continue;
      }
      if (on[y] || path.size() >= cap) continue;
      on[y] = 1;
      path.push_back(y);
      self(self, y);
      path.pop_back();
      on[y] = 0;
    }
  };
  rec(rec, u);
  return best;
}

inline aig::UGraph<std::size_t> random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return aig::make_graph(n, edges);
}

}  // namespace oracle
