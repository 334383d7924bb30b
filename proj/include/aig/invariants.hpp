#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <limits>
#include <optional>
#include <vector>

#include "aig/errors.hpp"
#include "aig/graph.hpp"

namespace aig {

// ---------------------------------------------------------------------------
// Distances
// ---------------------------------------------------------------------------

inline constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();

/// BFS levels from `src`; kUnreached for other components.
template <class L>
std::vector<std::size_t> bfs_levels(const UGraph<L>& g, std::size_t src) {
  g.check(src);
  std::vector<std::size_t> dist(g.size(), kUnreached);
  std::deque<std::size_t> queue{src};
  dist[src] = 0;
  while (!queue.empty()) {
    auto u = queue.front();
    queue.pop_front();
    for (auto v : g.neighbors(u))
      if (dist[v] == kUnreached) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
  }
  return dist;
}

template <class L>
DistanceValue distance(const UGraph<L>& g, std::size_t u, std::size_t v) {
  g.check(v);
  auto d = bfs_levels(g, u)[v];
  return d == kUnreached ? DistanceValue::inf() : DistanceValue::of(d);
}

/// All-pairs distances, one BFS per source.
template <class L>
std::vector<std::vector<std::size_t>> distance_matrix(const UGraph<L>& g) {
  std::vector<std::vector<std::size_t>> out;
  out.reserve(g.size());
  for (std::size_t u = 0; u < g.size(); ++u) out.push_back(bfs_levels(g, u));
  return out;
}

/// max_v d(u, v); degenerate when u is the only vertex.
template <class L>
DistanceValue eccentricity(const UGraph<L>& g, std::size_t u) {
  g.check(u);
  if (g.size() < 2) return DistanceValue::degenerate();
  auto dist = bfs_levels(g, u);
  auto worst = *std::max_element(dist.begin(), dist.end());
  return worst == kUnreached ? DistanceValue::inf() : DistanceValue::of(worst);
}

template <class L>
DistanceValue radius(const UGraph<L>& g) {
  if (g.size() < 2) return DistanceValue::degenerate();
  auto best = DistanceValue::inf();
  for (std::size_t u = 0; u < g.size(); ++u) best = std::min(best, eccentricity(g, u));
  return best;
}

template <class L>
DistanceValue diameter(const UGraph<L>& g) {
  if (g.size() < 2) return DistanceValue::degenerate();
  auto worst = DistanceValue::of(0);
  for (std::size_t u = 0; u < g.size(); ++u) worst = std::max(worst, eccentricity(g, u));
  return worst;
}

// ---------------------------------------------------------------------------
// Cycles
// ---------------------------------------------------------------------------

/// Shortest cycle length: BFS from every root, closing on non-tree edges.
template <class L>
DistanceValue girth(const UGraph<L>& g) {
  if (g.size() < 2) return DistanceValue::degenerate();
  std::size_t best = kUnreached;
  for (std::size_t root = 0; root < g.size(); ++root) {
    std::vector<std::size_t> dist(g.size(), kUnreached), parent(g.size(), kUnreached);
    std::deque<std::size_t> queue{root};
    dist[root] = 0;
    while (!queue.empty()) {
      auto u = queue.front();
      queue.pop_front();
      for (auto v : g.neighbors(u)) {
        if (dist[v] == kUnreached) {
          dist[v] = dist[u] + 1;
          parent[v] = u;
          queue.push_back(v);
        } else if (parent[u] != v) {
          best = std::min(best, dist[u] + dist[v] + 1);
        }
      }
    }
  }
  return best == kUnreached ? DistanceValue::inf() : DistanceValue::of(best);
}

namespace detail {

template <class L>
bool reachable_avoiding(const UGraph<L>& g, std::size_t from, std::size_t to,
                        std::size_t banned_vertex, bool ban_direct_edge) {
  std::vector<char> seen(g.size(), 0);
  std::deque<std::size_t> queue{from};
  seen[from] = 1;
  if (banned_vertex < g.size()) seen[banned_vertex] = 1;
  while (!queue.empty()) {
    auto u = queue.front();
    queue.pop_front();
    for (auto v : g.neighbors(u)) {
      if (ban_direct_edge && ((u == from && v == to) || (u == to && v == from))) continue;
      if (v == to) return true;
      if (!seen[v]) {
        seen[v] = 1;
        queue.push_back(v);
      }
    }
  }
  return false;
}

}  // namespace detail

/// Whether some simple cycle passes through both u and v (u != v), via
/// Menger: no single vertex or the direct edge separates them.
template <class L>
bool on_common_cycle(const UGraph<L>& g, std::size_t u, std::size_t v) {
  g.check(u);
  g.check(v);
  if (u == v) throw std::invalid_argument("on_common_cycle needs distinct vertices");
  if (g.adjacent(u, v)) return detail::reachable_avoiding(g, u, v, kUnreached, true);
  if (!detail::reachable_avoiding(g, u, v, kUnreached, false)) return false;
  for (std::size_t w = 0; w < g.size(); ++w)
    if (w != u && w != v && !detail::reachable_avoiding(g, u, v, w, false)) return false;
  return true;
}

inline constexpr std::size_t kDefaultGiCap = 8;

namespace detail {

struct CycleSearch {
  const std::vector<std::vector<std::size_t>>* nbrs;
  std::vector<std::size_t> du, dv;
  std::vector<char> on_path;
  std::size_t u, v, target;

  // Extends a simple path u -> ... -> x of length `len`; succeeds on closing
  // back at u with exactly `target` edges after having visited v.
  bool extend(std::size_t x, std::size_t len, bool seen_v) {
    const std::size_t left = target - len;
    for (auto y : (*nbrs)[x]) {
      if (y == u) {
        if (left == 1 && seen_v && len >= 2) return true;
        continue;
      }
      if (on_path[y] || left < 2) continue;
      bool sv = seen_v || y == v;
      // Distance pruning: return to u, and reach v first if still pending.
      if (du[y] == kUnreached || du[y] > left - 1) continue;
      if (!sv && (dv[y] == kUnreached || dv[y] + du[v] > left - 1)) continue;
      on_path[y] = 1;
      bool found = extend(y, len + 1, sv);
      on_path[y] = 0;
      if (found) return true;
    }
    return false;
  }
};

}  // namespace detail

/// Shortest cycle through u and v by exhaustive simple-cycle search with
/// iterative deepening up to `cap` edges. Returns INF when no cycle passes
/// through both; throws CycleCapExceeded when one exists but is longer than
/// `cap`. gi(u, u) is the shortest cycle through u.
template <class L>
DistanceValue gi_bounded(const UGraph<L>& g, std::size_t u, std::size_t v,
                         std::size_t cap = kDefaultGiCap) {
  g.check(u);
  g.check(v);
  if (u == v) {
    // A too-long cycle through some w only matters if nothing shorter exists.
    auto best = DistanceValue::inf();
    bool breached = false;
    for (std::size_t w = 0; w < g.size(); ++w) {
      if (w == u) continue;
      try {
        best = std::min(best, gi_bounded(g, u, w, cap));
      } catch (const CycleCapExceeded&) {
        breached = true;
      }
    }
    if (breached && best.is_inf()) throw CycleCapExceeded(cap);
    return best;
  }
  std::vector<std::vector<std::size_t>> nbrs(g.size());
  for (std::size_t x = 0; x < g.size(); ++x) nbrs[x] = g.neighbors(x);
  detail::CycleSearch search{&nbrs, bfs_levels(g, u), bfs_levels(g, v),
                             std::vector<char>(g.size(), 0), u, v, 0};
  search.on_path[u] = 1;
  for (std::size_t len = 3; len <= cap; ++len) {
    search.target = len;
    if (search.extend(u, 0, false)) return DistanceValue::of(len);
  }
  if (on_common_cycle(g, u, v)) throw CycleCapExceeded(cap);
  return DistanceValue::inf();
}

/// Shortest cycle through u and v as the cheapest pair of internally
/// vertex-disjoint u-v paths: min-cost flow of two units on the node-split
/// digraph (unit arc costs, unit vertex capacities).
template <class L>
DistanceValue gi_disjoint_paths(const UGraph<L>& g, std::size_t u, std::size_t v) {
  g.check(u);
  g.check(v);
  if (u == v) {
    auto best = DistanceValue::inf();
    for (std::size_t w = 0; w < g.size(); ++w)
      if (w != u) best = std::min(best, gi_disjoint_paths(g, u, w));
    return best;
  }
  struct Arc {
    std::size_t to;
    int cap;
    long cost;
    std::size_t rev;
  };
  const std::size_t nodes = 2 * g.size();
  std::vector<std::vector<Arc>> net(nodes);
  auto add = [&](std::size_t a, std::size_t b, long cost) {
    net[a].push_back({b, 1, cost, net[b].size()});
    net[b].push_back({a, 0, -cost, net[a].size() - 1});
  };
  auto in = [](std::size_t x) { return 2 * x; };
  auto out = [](std::size_t x) { return 2 * x + 1; };
  for (std::size_t x = 0; x < g.size(); ++x)
    if (x != u && x != v) add(in(x), out(x), 0);
  for (auto [a, b] : g.edges()) {
    add(out(a), in(b), 1);
    add(out(b), in(a), 1);
  }
  const std::size_t source = out(u), sink = in(v);
  long total = 0;
  for (int unit = 0; unit < 2; ++unit) {
    // Bellman-Ford: residual arcs carry negative costs.
    std::vector<long> dist(nodes, std::numeric_limits<long>::max());
    std::vector<std::pair<std::size_t, std::size_t>> via(nodes, {kUnreached, 0});
    dist[source] = 0;
    for (std::size_t round = 0; round + 1 < nodes; ++round) {
      bool changed = false;
      for (std::size_t a = 0; a < nodes; ++a) {
        if (dist[a] == std::numeric_limits<long>::max()) continue;
        for (std::size_t i = 0; i < net[a].size(); ++i) {
          const auto& arc = net[a][i];
          if (arc.cap > 0 && dist[a] + arc.cost < dist[arc.to]) {
            dist[arc.to] = dist[a] + arc.cost;
            via[arc.to] = {a, i};
            changed = true;
          }
        }
      }
      if (!changed) break;
    }
    if (dist[sink] == std::numeric_limits<long>::max()) return DistanceValue::inf();
    for (auto x = sink; x != source; x = via[x].first) {
      auto& arc = net[via[x].first][via[x].second];
      arc.cap -= 1;
      net[x][arc.rev].cap += 1;
    }
    total += dist[sink];
  }
  return DistanceValue::of(static_cast<std::size_t>(total));
}

/// gi(u, v): bounded exhaustive search, falling back to the disjoint-path
/// method when the cap is exceeded.
template <class L>
DistanceValue gi(const UGraph<L>& g, std::size_t u, std::size_t v, std::size_t cap = kDefaultGiCap) {
  try {
    return gi_bounded(g, u, v, cap);
  } catch (const CycleCapExceeded&) {
    return gi_disjoint_paths(g, u, v);
  }
}

// ---------------------------------------------------------------------------
// Structural predicates
// ---------------------------------------------------------------------------

template <class L>
std::size_t degree(const UGraph<L>& g, std::size_t u) {
  return g.degree(u);
}

template <class L>
bool is_leaf(const UGraph<L>& g, std::size_t u) {
  return g.degree(u) == 1;
}

/// Some vertex is adjacent to every other vertex (at least two vertices).
template <class L>
bool is_star(const UGraph<L>& g) {
  if (g.size() < 2) return false;
  for (std::size_t u = 0; u < g.size(); ++u)
    if (g.degree(u) + 1 == g.size()) return true;
  return false;
}

/// 2-coloring by BFS; nullopt when an odd cycle exists.
template <class L>
std::optional<std::vector<int>> two_coloring(const UGraph<L>& g) {
  std::vector<int> side(g.size(), -1);
  for (std::size_t s = 0; s < g.size(); ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::deque<std::size_t> queue{s};
    while (!queue.empty()) {
      auto u = queue.front();
      queue.pop_front();
      for (auto v : g.neighbors(u)) {
        if (side[v] < 0) {
          side[v] = 1 - side[u];
          queue.push_back(v);
        } else if (side[v] == side[u]) {
          return std::nullopt;
        }
      }
    }
  }
  return side;
}

template <class L>
bool is_bipartite(const UGraph<L>& g) {
  return two_coloring(g).has_value();
}

template <class L>
bool is_connected(const UGraph<L>& g) {
  if (g.empty()) return true;
  auto d = bfs_levels(g, 0);
  return std::find(d.begin(), d.end(), kUnreached) == d.end();
}

/// K_{a,b} with a, b >= 1.
template <class L>
bool is_complete_bipartite(const UGraph<L>& g) {
  if (g.size() < 2 || !is_connected(g)) return false;
  auto side = two_coloring(g);
  if (!side) return false;
  std::size_t a = std::count(side->begin(), side->end(), 0);
  return g.edge_count() == a * (g.size() - a);
}

template <class L>
bool in_triangle(const UGraph<L>& g, std::size_t u) {
  const auto& n = g.neighbors(u);
  for (std::size_t i = 0; i < n.size(); ++i)
    for (std::size_t j = i + 1; j < n.size(); ++j)
      if (g.adjacent(n[i], n[j])) return true;
  return false;
}

template <class L>
bool has_common_neighbor(const UGraph<L>& g, std::size_t u, std::size_t v) {
  return (g.neighbor_set(u) & g.neighbor_set(v)).any();
}

/// Every vertex lies in a triangle. Vacuously true on the empty graph.
template <class L>
bool is_triangulated(const UGraph<L>& g) {
  for (std::size_t u = 0; u < g.size(); ++u)
    if (!in_triangle(g, u)) return false;
  return true;
}

/// Every edge lies in a triangle. Vacuously true without edges.
template <class L>
bool is_hypertriangulated(const UGraph<L>& g) {
  for (auto [u, v] : g.edges())
    if (!has_common_neighbor(g, u, v)) return false;
  return true;
}

/// Adjacent with no common neighbor.
template <class L>
bool orthogonal(const UGraph<L>& g, std::size_t u, std::size_t v) {
  return g.adjacent(u, v) && !has_common_neighbor(g, u, v);
}

/// Every vertex has an orthogonal partner.
template <class L>
bool is_complemented(const UGraph<L>& g) {
  for (std::size_t u = 0; u < g.size(); ++u) {
    bool found = false;
    for (auto v : g.neighbors(u)) found = found || orthogonal(g, u, v);
    if (!found) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Domination, cliques, coloring (exact)
// ---------------------------------------------------------------------------

namespace detail {

struct DominationSearch {
  std::vector<Bitset> closed;  // closed neighborhoods
  std::size_t best;
  std::vector<std::size_t> chosen, best_set;

  void run(const Bitset& undominated) {
    if (undominated.none()) {
      if (chosen.size() < best) {
        best = chosen.size();
        best_set = chosen;
      }
      return;
    }
    std::size_t max_cover = 0;
    for (const auto& c : closed) max_cover = std::max(max_cover, (c & undominated).count());
    const std::size_t need = (undominated.count() + max_cover - 1) / max_cover;
    if (chosen.size() + need >= best) return;
    // Branch on the undominated vertex with the fewest dominators.
    std::size_t pick = Bitset::npos, fewest = kUnreached;
    for (auto x = undominated.find_first(); x != Bitset::npos; x = undominated.find_next(x))
      if (closed[x].count() < fewest) {
        fewest = closed[x].count();
        pick = x;
      }
    for (auto c = closed[pick].find_first(); c != Bitset::npos; c = closed[pick].find_next(c)) {
      chosen.push_back(c);
      run(undominated - closed[c]);
      chosen.pop_back();
    }
  }
};

}  // namespace detail

/// A minimum dominating set (vertex indices, ascending). Branch and bound
/// seeded with a greedy upper bound; ties broken by vertex index.
template <class L>
std::vector<std::size_t> minimum_dominating_set(const UGraph<L>& g) {
  const std::size_t n = g.size();
  if (n == 0) return {};
  detail::DominationSearch s;
  for (std::size_t u = 0; u < n; ++u) {
    Bitset c = g.neighbor_set(u);
    c.set(u);
    s.closed.push_back(std::move(c));
  }
  Bitset undominated(n);
  undominated.set();
  // Greedy: most newly dominated, lowest index on ties.
  Bitset rest = undominated;
  while (rest.any()) {
    std::size_t pick = 0, gain = 0;
    for (std::size_t u = 0; u < n; ++u) {
      auto k = (s.closed[u] & rest).count();
      if (k > gain) {
        gain = k;
        pick = u;
      }
    }
    s.best_set.push_back(pick);
    rest -= s.closed[pick];
  }
  s.best = s.best_set.size();
  s.run(undominated);
  std::sort(s.best_set.begin(), s.best_set.end());
  return s.best_set;
}

template <class L>
std::size_t dominating_number(const UGraph<L>& g) {
  return minimum_dominating_set(g).size();
}

namespace detail {

struct CliqueSearch {
  const std::vector<Bitset>* adj;
  std::vector<std::size_t> current, best;

  // Greedy sequential coloring of `cand` gives each vertex an upper bound on
  // the clique it can still complete.
  void expand(Bitset cand) {
    std::vector<std::size_t> order, bound;
    Bitset uncolored = cand;
    std::size_t color = 0;
    while (uncolored.any()) {
      ++color;
      Bitset q = uncolored;
      while (q.any()) {
        auto v = q.find_first();
        q.reset(v);
        q -= (*adj)[v];
        uncolored.reset(v);
        order.push_back(v);
        bound.push_back(color);
      }
    }
    for (std::size_t i = order.size(); i-- > 0;) {
      if (current.size() + bound[i] <= best.size()) return;
      auto v = order[i];
      current.push_back(v);
      Bitset next = cand & (*adj)[v];
      if (next.none()) {
        if (current.size() > best.size()) best = current;
      } else {
        expand(next);
      }
      current.pop_back();
      cand.reset(v);
    }
  }
};

}  // namespace detail

/// A maximum clique (vertex indices, ascending).
template <class L>
std::vector<std::size_t> maximum_clique(const UGraph<L>& g) {
  if (g.empty()) return {};
  std::vector<Bitset> adj;
  for (std::size_t u = 0; u < g.size(); ++u) adj.push_back(g.neighbor_set(u));
  detail::CliqueSearch s{&adj, {}, {}};
  Bitset all(g.size());
  all.set();
  s.expand(all);
  std::sort(s.best.begin(), s.best.end());
  return s.best;
}

template <class L>
std::size_t clique_number(const UGraph<L>& g) {
  return maximum_clique(g).size();
}

namespace detail {

struct ColoringSearch {
  const std::vector<std::vector<std::size_t>>* nbrs;
  std::size_t k;
  std::vector<int> color;
  std::vector<std::vector<int>> conflicts;  // [vertex][color] -> #colored neighbors
  std::vector<std::size_t> saturation;

  void assign(std::size_t v, int c, int delta) {
    for (auto w : (*nbrs)[v]) {
      auto& cnt = conflicts[w][c];
      if (delta > 0 && cnt++ == 0) ++saturation[w];
      if (delta < 0 && --cnt == 0) --saturation[w];
    }
  }

  bool solve(std::size_t colored, int used) {
    const std::size_t n = color.size();
    if (colored == n) return true;
    // DSATUR: max saturation, then max degree, then lowest index.
    std::size_t pick = kUnreached;
    for (std::size_t v = 0; v < n; ++v) {
      if (color[v] >= 0) continue;
      if (pick == kUnreached || saturation[v] > saturation[pick] ||
          (saturation[v] == saturation[pick] && (*nbrs)[v].size() > (*nbrs)[pick].size()))
        pick = v;
    }
    const int limit = std::min<int>(used + 1, static_cast<int>(k));
    for (int c = 0; c < limit; ++c) {
      if (conflicts[pick][c] > 0) continue;
      color[pick] = c;
      assign(pick, c, +1);
      if (solve(colored + 1, std::max(used, c + 1))) return true;
      assign(pick, c, -1);
      color[pick] = -1;
    }
    return false;
  }
};

}  // namespace detail

/// A proper coloring with `k` colors, if one exists.
template <class L>
std::optional<std::vector<int>> k_coloring(const UGraph<L>& g, std::size_t k) {
  const std::size_t n = g.size();
  if (n == 0) return std::vector<int>{};
  if (k == 0) return std::nullopt;
  std::vector<std::vector<std::size_t>> nbrs(n);
  for (std::size_t v = 0; v < n; ++v) nbrs[v] = g.neighbors(v);
  detail::ColoringSearch s{&nbrs, k, std::vector<int>(n, -1),
                           std::vector<std::vector<int>>(n, std::vector<int>(k, 0)),
                           std::vector<std::size_t>(n, 0)};
  if (!s.solve(0, 0)) return std::nullopt;
  return s.color;
}

/// Exact chromatic number: k-colorability by DSATUR backtracking for
/// k = clique, clique + 1, ...
template <class L>
std::size_t chromatic_number(const UGraph<L>& g) {
  if (g.empty()) return 0;
  for (std::size_t k = std::max<std::size_t>(1, clique_number(g));; ++k)
    if (k_coloring(g, k)) return k;
}

}  // namespace aig
