#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include "aig/topology.hpp"

namespace aig {

/// The ring C(X) of a finite space X, as R^m over the weak components.
///
/// A function is its vector of values on components. Every ideal of R^m is
/// generated by the idempotents e_i of a coordinate set S, so an ideal is
/// stored as S. Ring operations are carried out on generators (products and
/// sums of actual functions); the topological side reads cozero sets back in X.
class RingModel {
 public:
  using Function = std::vector<long>;

  struct Ideal {
    PointSet coords;  ///< S: the ideal is generated by {e_i : i ∈ S}
    auto operator<=>(const Ideal&) const = default;
  };

  explicit RingModel(const Topology& t) : space_(t), refl_(tychonoff_reflection(t)) {}

  const Topology& space() const { return space_; }
  const Reflection& reflection() const { return refl_; }
  int components() const { return refl_.space.size(); }

  std::vector<Ideal> ideals() const {
    std::vector<Ideal> out;
    for_each_subset(components(), [&](PointSet s) { out.push_back({s}); });
    return out;
  }
  Ideal zero() const { return {PointSet{}}; }
  Ideal whole() const { return {PointSet::full(components())}; }

  Function unit(int i) const {
    Function f(components(), 0);
    f[i] = 1;
    return f;
  }
  std::vector<Function> generators(const Ideal& I) const {
    std::vector<Function> out;
    for (int i : I.coords.points()) out.push_back(unit(i));
    return out;
  }

  /// Components where f is nonzero.
  PointSet support(const Function& f) const {
    PointSet s;
    for (int i = 0; i < components(); ++i)
      if (f[i] != 0) s.insert(i);
    return s;
  }
  /// Coz(f) as a subset of X.
  PointSet coz(const Function& f) const { return refl_.lift(support(f)); }
  /// Z(f) as a subset of X.
  PointSet zero_set(const Function& f) const { return coz(f).complement(space_.size()); }

  /// Ideal generated by a set of functions: in R^m, the coordinate ideal of
  /// the union of their supports.
  Ideal generated(const std::vector<Function>& fs) const {
    PointSet s;
    for (const auto& f : fs) s |= support(f);
    return {s};
  }

  bool contains(const Ideal& I, const Function& f) const { return support(f).subset_of(I.coords); }

  Ideal product(const Ideal& I, const Ideal& J) const {
    std::vector<Function> prods;
    for (const auto& f : generators(I))
      for (const auto& g : generators(J)) {
        Function h(components());
        for (int i = 0; i < components(); ++i) h[i] = f[i] * g[i];
        prods.push_back(std::move(h));
      }
    return generated(prods);
  }

  Ideal sum(const Ideal& I, const Ideal& J) const {
    auto gens = generators(I);
    for (auto& g : generators(J)) gens.push_back(std::move(g));
    return generated(gens);
  }

  /// Members of both: f ∈ I ∩ J iff f's support lies in both coordinate sets.
  Ideal intersection(const Ideal& I, const Ideal& J) const {
    PointSet s;
    for (int i = 0; i < components(); ++i)
      if (contains(I, unit(i)) && contains(J, unit(i))) s.insert(i);
    return {s};
  }

  /// Ann(I): coordinates whose unit kills every generator of I.
  Ideal ann(const Ideal& I) const {
    PointSet s;
    for (int j = 0; j < components(); ++j) {
      bool kills = true;
      for (const auto& g : generators(I)) kills = kills && g[j] == 0;
      if (kills) s.insert(j);
    }
    return {s};
  }

  /// I(U) = M_U: functions vanishing on U.
  Ideal vanishing_on(PointSet u) const {
    PointSet s;
    for (int j = 0; j < components(); ++j)
      if (!refl_.lift(PointSet::singleton(j)).intersects(u)) s.insert(j);
    return {s};
  }

  /// O(I): union of cozero sets of members, computed over generators.
  PointSet o(const Ideal& I) const {
    PointSet s;
    for (const auto& g : generators(I)) s |= coz(g);
    return s;
  }
  /// O(S) for an arbitrary set of functions.
  PointSet o(const std::vector<Function>& fs) const {
    PointSet s;
    for (const auto& f : fs) s |= coz(f);
    return s;
  }

  bool is_zero(const Ideal& I) const { return I.coords.empty(); }
  /// Common zero set of the members is empty.
  bool is_free(const Ideal& I) const {
    PointSet common = space_.ground();
    for (const auto& g : generators(I)) common = common & zero_set(g);
    return common.empty();
  }
  /// Nonzero ideal with nonzero annihilator.
  bool in_A(const Ideal& I) const { return !is_zero(I) && !is_zero(ann(I)); }

 private:
  Topology space_;
  Reflection refl_;
};

}  // namespace aig
