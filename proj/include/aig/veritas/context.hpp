#pragma once

#include <array>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "aig/cache.hpp"
#include "aig/enumerate.hpp"
#include "aig/ideal_graph.hpp"
#include "aig/report.hpp"
#include "aig/ring_model.hpp"
#include "aig/topology_io.hpp"

namespace aig::veritas {

/// Canonical text key for n within the canonical-form cap, labeled text beyond it.
inline std::string space_key(const Topology& t) {
  return to_text(t.size() <= kDefaultEnumerationCap ? canonical_form(t) : t);
}

/// Structure of AG-model(m), computed once per m and shared by every space
/// whose reflection has m points.
struct AgAnalysis {
  int m = 0;
  UGraph<PointSet> graph;
  std::vector<std::vector<std::size_t>> dist;
  std::vector<DistanceValue> ecc;
  std::vector<char> leaf;
  ScalarInvariants scalars;
  /// gi[u][v] for non-leaf u != v; left degenerate elsewhere.
  std::vector<std::vector<DistanceValue>> gi;
};

/// Thread-safe lazy store of AgAnalysis by m. The gi table is filled on
/// first request since only the gi claims need it.
class AgLibrary {
 public:
  static constexpr int kMaxM = 12;

  explicit AgLibrary(const ScalarCache* cache = nullptr) : cache_(cache) {}

  const AgAnalysis& get(int m) {
    auto& s = slot(m);
    std::call_once(s.base, [&] {
      auto& a = s.analysis;
      a.m = m;
      a.graph = build_ag_discrete(m);
      a.dist = distance_matrix(a.graph);
      for (std::size_t u = 0; u < a.graph.size(); ++u) {
        a.ecc.push_back(eccentricity(a.graph, u));
        a.leaf.push_back(is_leaf(a.graph, u));
      }
      auto compute = [&] { return compute_scalars(a.graph); };
      a.scalars = cache_ ? cache_->get_or_compute(to_text(Topology::discrete(m)), "ag", compute) : compute();
    });
    return s.analysis;
  }

  const AgAnalysis& get_with_gi(int m) {
    get(m);
    auto& s = slot(m);
    auto& a = s.analysis;
    std::call_once(s.gi, [&] {
      const auto n = a.graph.size();
      a.gi.assign(n, std::vector<DistanceValue>(n, DistanceValue::degenerate()));
      for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
          if (!a.leaf[u] && !a.leaf[v]) a.gi[u][v] = a.gi[v][u] = aig::gi(a.graph, u, v);
    });
    return a;
  }

 private:
  struct Slot {
    std::once_flag base, gi;
    AgAnalysis analysis;
  };
  Slot& slot(int m) {
    if (m < 2 || m > kMaxM) throw std::invalid_argument("AG model size out of range");
    return slots_[m];
  }

  const ScalarCache* cache_;
  std::array<Slot, kMaxM + 1> slots_;
};

/// Everything the claim checkers need about one space. Models are built on
/// first use. A context belongs to a single worker thread; only the
/// AgLibrary behind it is shared.
class SpaceContext {
 public:
  SpaceContext(const Topology& original, bool reflect, AgLibrary& lib, const ScalarCache* cache = nullptr)
      : original_(original), x_(reflect ? tychonoff_reflection(original).space : original),
        reflected_(reflect), key_(space_key(original)), cls_(classify(x_)), lib_(lib), cache_(cache) {}

  const Topology& original() const { return original_; }
  /// The space claims are evaluated on: the original, or its reflection.
  const Topology& x() const { return x_; }
  bool reflected() const { return reflected_; }
  const std::string& key() const { return key_; }
  int n() const { return x_.size(); }
  const SpaceClass& cls() const { return cls_; }
  bool discrete() const { return cls_.is_discrete; }

  const RingModel& ring() {
    if (!ring_) ring_.emplace(x_);
    return *ring_;
  }

  /// Number of points of the reflection; AG(X) has 2^m - 2 vertices.
  int components() const { return cls_.component_count; }
  bool has_ag() const { return components() >= 2; }

  const AgAnalysis& ag_analysis() { return lib_.get(components()); }
  const AgAnalysis& ag_analysis_with_gi() { return lib_.get_with_gi(components()); }

  /// AG(C(X)) with vertex labels O(I) lifted into X.
  const UGraph<PointSet>& ag() {
    if (!ag_) ag_ = build_ag(x_, AgLibrary::kMaxM);
    return *ag_;
  }

  const UGraph<PointSet>& dg() {
    if (!dg_) dg_ = build_dg(x_);
    return *dg_;
  }
  const ScalarInvariants& dg_scalars() {
    if (!dg_scalars_) {
      auto compute = [&] { return compute_scalars(dg()); };
      dg_scalars_ = cache_ ? cache_->get_or_compute(space_key(x_), "dg", compute) : compute();
    }
    return *dg_scalars_;
  }

 private:
  Topology original_, x_;
  bool reflected_;
  std::string key_;
  SpaceClass cls_;
  AgLibrary& lib_;
  const ScalarCache* cache_;
  std::optional<RingModel> ring_;
  std::optional<UGraph<PointSet>> ag_, dg_;
  std::optional<ScalarInvariants> dg_scalars_;
};

}  // namespace aig::veritas
