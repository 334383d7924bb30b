#pragma once

#include <fnmatch.h>

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "aig/veritas/context.hpp"
#include "aig/veritas/hom.hpp"
#include "aig/veritas/types.hpp"

namespace aig::veritas {

class UnknownClaim : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Claim {
  std::string id;
  std::string topic;
  std::string statement;
  std::string scope_rule;  // human-readable form of `scope`
  std::function<Scope(const SpaceContext&)> scope;
  std::function<Outcome(SpaceContext&)> check;
};

namespace detail {

inline json js(PointSet s) { return to_string(s); }

/// Counts cases and keeps the first mismatch.
class Sweep {
 public:
  /// Returns false once a mismatch has been recorded, so loops can stop.
  template <class Describe>
  bool check(bool ok, Describe&& describe) {
    ++cases_;
    if (!ok) witness_ = describe();
    return ok;
  }
  Outcome result(json expected, json computed_on_fail = nullptr) const {
    if (witness_.is_null()) return Outcome::pass(std::move(expected), {{"cases", cases_}});
    json computed = computed_on_fail.is_null() ? witness_.value("lhs", json()) : computed_on_fail;
    return Outcome::fail(std::move(expected), std::move(computed), witness_);
  }
  bool failed() const { return !witness_.is_null(); }

 private:
  std::size_t cases_ = 0;
  json witness_;
};

// Iterates until the sweep fails. `fn` returns false to stop.
template <class Fn>
void each_subset(int n, Fn&& fn) {
  bool go = true;
  for_each_subset(n, [&](PointSet s) {
    if (go) go = fn(s);
  });
}

inline Scope guaranteed_everywhere(const SpaceContext&) { return Scope::guaranteed; }
inline Scope explore_everywhere(const SpaceContext&) { return Scope::explore; }
inline Scope guaranteed_if_discrete(const SpaceContext& c) {
  return c.discrete() ? Scope::guaranteed : Scope::explore;
}

inline constexpr const char* kRuleAll = "guaranteed on every space";
inline constexpr const char* kRuleDiscrete = "guaranteed on discrete spaces, explore elsewhere";
inline constexpr const char* kRuleExplore = "explore only";
inline constexpr const char* kRuleDiscreteThree = "guaranteed on discrete spaces with |X| >= 3, explore elsewhere";

// AG of a two-point space is K2, where one vertex already dominates.
inline Scope guaranteed_if_discrete_three(const SpaceContext& c) {
  return c.discrete() && c.n() >= 3 ? Scope::guaranteed : Scope::explore;
}

inline std::optional<Outcome> needs_two_points(const SpaceContext& c) {
  if (c.n() < 2) return Outcome::not_applicable("|X| < 2");
  return std::nullopt;
}

inline std::optional<Outcome> needs_ag(SpaceContext& c) {
  if (auto na = needs_two_points(c)) return na;
  if (!c.has_ag()) return Outcome::degenerate("AG(X) is empty: X has one weak component, so C(X) = R");
  return std::nullopt;
}

inline std::optional<Outcome> needs_dg(SpaceContext& c) {
  if (auto na = needs_two_points(c)) return na;
  if (c.dg().empty()) return Outcome::degenerate("DG(X) is empty: no open G has (X\\G)° nonempty");
  return std::nullopt;
}

inline json graph_witness(const UGraph<PointSet>& g) { return graph_to_json(g); }

/// Function pool for sweeps over sets of functions: every vector with
/// entries in {-1, 0, 2}, so supports, signs and non-unit values all occur.
inline std::vector<RingModel::Function> function_pool(const RingModel& r) {
  std::vector<RingModel::Function> pool{RingModel::Function(r.components(), 0)};
  for (int i = 0; i < r.components(); ++i) {
    std::vector<RingModel::Function> next;
    for (const auto& f : pool)
      for (long v : {-1L, 0L, 2L}) {
        auto g = f;
        g[i] = v;
        next.push_back(std::move(g));
      }
    pool = std::move(next);
  }
  return pool;
}

inline json fn_json(const RingModel::Function& f) { return f; }
inline json ideal_json(const RingModel::Ideal& i) { return js(i.coords); }

// --- claim bodies shared by several ids -------------------------------------

inline Outcome ring_pair_sweep(SpaceContext& c, const std::string& expected,
                               const std::function<bool(const RingModel&, const RingModel::Ideal&,
                                                        const RingModel::Ideal&, json&)>& body) {
  if (auto na = needs_two_points(c)) return *na;
  const auto& r = c.ring();
  Sweep sw;
  for (const auto& i : r.ideals())
    for (const auto& j : r.ideals()) {
      json w;
      if (!sw.check(body(r, i, j, w), [&] {
            w["I"] = ideal_json(i);
            w["J"] = ideal_json(j);
            return w;
          }))
        return sw.result(expected);
    }
  return sw.result(expected);
}

inline Outcome function_pair_sweep(SpaceContext& c, const std::string& expected,
                                   const std::function<bool(const RingModel&, const RingModel::Function&,
                                                            const RingModel::Function&, json&)>& body) {
  if (auto na = needs_two_points(c)) return *na;
  const auto& r = c.ring();
  auto pool = function_pool(r);
  Sweep sw;
  for (std::size_t a = 0; a < pool.size(); ++a)
    for (std::size_t b = a; b < pool.size(); ++b) {
      json w;
      if (!sw.check(body(r, pool[a], pool[b], w), [&] {
            w["f"] = fn_json(pool[a]);
            w["g"] = fn_json(pool[b]);
            return w;
          }))
        return sw.result(expected);
    }
  return sw.result(expected);
}

inline Outcome subset_sweep(SpaceContext& c, bool need_two, const std::string& expected,
                            const std::function<bool(PointSet, json&)>& body, const char* var = "U") {
  if (need_two)
    if (auto na = needs_two_points(c)) return *na;
  Sweep sw;
  each_subset(c.n(), [&](PointSet u) {
    json w;
    return sw.check(body(u, w), [&] {
      w[var] = js(u);
      return w;
    });
  });
  return sw.result(expected);
}

inline Outcome subset_pair_sweep(SpaceContext& c, bool need_two, const std::string& expected,
                                 const std::function<bool(PointSet, PointSet, json&)>& body) {
  if (need_two)
    if (auto na = needs_two_points(c)) return *na;
  Sweep sw;
  each_subset(c.n(), [&](PointSet u) {
    bool go = true;
    each_subset(c.n(), [&](PointSet v) {
      json w;
      go = sw.check(body(u, v, w), [&] {
        w["U"] = js(u);
        w["V"] = js(v);
        return w;
      });
      return go;
    });
    return go;
  });
  return sw.result(expected);
}

inline json both(json lhs, json rhs) { return {{"lhs", std::move(lhs)}, {"rhs", std::move(rhs)}}; }

/// Checks `graph_value(k) ⟺ predicted(k)` on every AG vertex pair.
inline Outcome ag_pair_sweep(SpaceContext& c, const std::string& expected,
                             const std::function<bool(std::size_t, std::size_t, json&)>& body) {
  if (auto na = needs_ag(c)) return *na;
  const auto& g = c.ag();
  Sweep sw;
  for (std::size_t u = 0; u < g.size(); ++u)
    for (std::size_t v = u + 1; v < g.size(); ++v) {
      json w;
      if (!sw.check(body(u, v, w), [&] {
            w["I"] = js(g.label(u));
            w["J"] = js(g.label(v));
            w["graph"] = graph_witness(g);
            return w;
          }))
        return sw.result(expected);
    }
  return sw.result(expected);
}

inline Outcome ag_vertex_sweep(SpaceContext& c, const std::string& expected,
                               const std::function<bool(std::size_t, json&)>& body) {
  if (auto na = needs_ag(c)) return *na;
  const auto& g = c.ag();
  Sweep sw;
  for (std::size_t u = 0; u < g.size(); ++u) {
    json w;
    if (!sw.check(body(u, w), [&] {
          w["I"] = js(g.label(u));
          w["graph"] = graph_witness(g);
          return w;
        }))
      return sw.result(expected);
  }
  return sw.result(expected);
}

/// Graph-level equation on AG(X): pass iff lhs == rhs.
inline Outcome ag_equation(SpaceContext& c, json lhs, json rhs, const std::string& expected) {
  if (lhs == rhs) return Outcome::pass(expected, lhs);
  return Outcome::fail(rhs, lhs, {{"lhs", lhs}, {"rhs", rhs}, {"graph", graph_witness(c.ag())}});
}

inline Outcome dg_equation(SpaceContext& c, json lhs, json rhs, const std::string& expected) {
  if (lhs == rhs) return Outcome::pass(expected, lhs);
  return Outcome::fail(rhs, lhs, {{"lhs", lhs}, {"rhs", rhs}, {"graph", graph_witness(c.dg())}});
}

/// Hom-lemma part on a twin expansion of DG(X), multiplicities cycling 1,2,3.
inline Outcome hom_on_dg(SpaceContext& c, char part) {
  if (auto na = needs_dg(c)) return *na;
  const auto& base = c.dg();
  std::vector<std::size_t> mult(base.size());
  for (std::size_t i = 0; i < mult.size(); ++i) mult[i] = 1 + i % 3;
  auto parts = check_hom_lemma(twin_expansion(base, mult), &c.dg_scalars());
  const auto& p = parts[part - 'a'];
  json computed = hom_part_json(p);
  if (p.holds) return Outcome::pass(p.relation, computed);
  return Outcome::fail(p.relation, computed,
                       {{"lhs", p.target_value},
                        {"rhs", p.source_value},
                        {"base", graph_to_json(base)},
                        {"multiplicities", mult}});
}

}  // namespace detail

/// The full claim registry, in documentation order.
inline const std::vector<Claim>& registry() {
  using namespace detail;
  using F = RingModel::Function;
  using Id = RingModel::Ideal;
  static const std::vector<Claim> claims = [] {
    std::vector<Claim> v;
    auto add = [&](std::string id, std::string topic, std::string statement, const char* rule,
                   std::function<Scope(const SpaceContext&)> scope, std::function<Outcome(SpaceContext&)> check) {
      v.push_back({std::move(id), std::move(topic), std::move(statement), rule, std::move(scope), std::move(check)});
    };
    const auto all = guaranteed_everywhere;
    const auto disc = guaranteed_if_discrete;
    const auto expl = explore_everywhere;
    const auto disc3 = guaranteed_if_discrete_three;

    // ----- graph basics on AG(X) --------------------------------------------
    const std::string basics = "Graph basics on AG(X)";
    add("def.clique_le_chi", basics, "clique(AG(X)) <= chi(AG(X))", kRuleDiscrete, disc, [](SpaceContext& c) {
      if (auto na = needs_ag(c)) return *na;
      const auto& s = c.ag_analysis().scalars;
      json computed{{"clique", s.clique_number}, {"chi", s.chromatic_number}};
      if (s.clique_number <= s.chromatic_number) return Outcome::pass("clique <= chi", computed);
      return Outcome::fail("clique <= chi", computed, {{"lhs", s.clique_number}, {"rhs", s.chromatic_number}});
    });
    add("prop.two_points", basics,
        "|X| = 2 <=> diam(AG(X)) = 1 <=> clique(AG(X)) = 2 <=> AG(X) bipartite with two nonempty parts "
        "<=> AG(X) complete bipartite with two nonempty parts",
        kRuleDiscrete, disc, [](SpaceContext& c) {
          if (auto na = needs_ag(c)) return *na;
          const auto& g = c.ag();
          const auto& s = c.ag_analysis().scalars;
          const bool two_parts = g.size() >= 2;
          json vals{{"a", c.n() == 2},
                    {"b", s.diameter == DistanceValue::of(1)},
                    {"c", s.clique_number == 2},
                    {"d", s.is_bipartite && two_parts},
                    {"e", s.is_complete_bipartite && two_parts}};
          bool same = true;
          for (auto& [k, val] : vals.items()) same = same && val == vals["a"];
          if (same) return Outcome::pass("all five statements agree", vals);
          return Outcome::fail("all five statements agree", vals, {{"lhs", vals}, {"graph", graph_witness(g)}});
        });
    add("prop.diameter3", basics, "|X| >= 3 <=> diam(AG(X)) = 3", kRuleDiscrete, disc, [](SpaceContext& c) {
      if (auto na = needs_ag(c)) return *na;
      const auto& s = c.ag_analysis().scalars;
      return ag_equation(c, c.n() >= 3, s.diameter == DistanceValue::of(3), "both sides agree");
    });
    add("prop.chi_clique", basics, "chi(AG(X)) = clique(AG(X))", kRuleDiscrete, disc, [](SpaceContext& c) {
      if (auto na = needs_ag(c)) return *na;
      const auto& s = c.ag_analysis().scalars;
      return ag_equation(c, s.chromatic_number, s.clique_number, "chi = clique");
    });
    add("prop.finiteness", basics,
        "AG(X) finite <=> C(X) has finitely many ideals <=> every degree finite <=> X finite <=> chi finite "
        "<=> clique finite <=> no infinite clique <=> chi of the zero-divisor graph finite (finite side)",
        kRuleDiscrete, disc, [](SpaceContext& c) {
          if (auto na = needs_ag(c)) return *na;
          const auto& a = c.ag_analysis();
          std::size_t max_degree = 0;
          for (std::size_t u = 0; u < a.graph.size(); ++u) max_degree = std::max(max_degree, a.graph.degree(u));
          const auto ideals = c.ring().ideals().size();
          // Zero divisors with equal support are non-adjacent twins, so the
          // zero-divisor graph collapses onto AG-model(m) and keeps chi.
          json computed{{"vertices", a.graph.size()}, {"ideals", ideals}, {"max_degree", max_degree},
                        {"points", c.n()}, {"chi", a.scalars.chromatic_number},
                        {"clique", a.scalars.clique_number}, {"chi_zero_divisor_graph", a.scalars.chromatic_number}};
          const bool ok = ideals == (std::size_t{1} << c.components()) && a.graph.size() + 2 == ideals &&
                          max_degree < a.graph.size();
          if (ok) return Outcome::pass("every quantity finite; vertices = ideals - 2", computed);
          return Outcome::fail("every quantity finite; vertices = ideals - 2", computed, {{"lhs", computed}});
        });

    // ----- O and I: order lemma ---------------------------------------------
    const std::string order = "Operators O and I: order properties";
    add("lem.order.a", order, "S ⊆ T => O(S) ⊆ O(T)", kRuleDiscrete, disc, [](SpaceContext& c) {
      return function_pair_sweep(c, "O({f}) ⊆ O({f,g})", [](const RingModel& r, const F& f, const F& g, json& w) {
        auto small = r.o(std::vector<F>{f}), big = r.o(std::vector<F>{f, g});
        w = both(js(small), js(big));
        return small.subset_of(big);
      });
    });
    add("lem.order.b", order, "U ⊆ V => I(V) ⊆ I(U)", kRuleDiscrete, disc, [](SpaceContext& c) {
      return subset_pair_sweep(c, true, "I(V) ⊆ I(U) whenever U ⊆ V", [&c](PointSet u, PointSet v, json& w) {
        if (!u.subset_of(v)) return true;
        const auto& r = c.ring();
        auto iu = r.vanishing_on(u), iv = r.vanishing_on(v);
        w = both(ideal_json(iv), ideal_json(iu));
        return iv.coords.subset_of(iu.coords);
      });
    });
    add("lem.order.c", order, "O(S) = ∅ <=> S = {0}", kRuleDiscrete, disc, [](SpaceContext& c) {
      return function_pair_sweep(c, "O({f,g}) empty iff f = g = 0",
                                 [](const RingModel& r, const F& f, const F& g, json& w) {
                                   auto o = r.o(std::vector<F>{f, g});
                                   bool zero = r.support(f).empty() && r.support(g).empty();
                                   w = both(js(o), zero);
                                   return o.empty() == zero;
                                 });
    });
    add("lem.order.d", order, "O(S) = X <=> <S> is free", kRuleDiscrete, disc, [](SpaceContext& c) {
      return function_pair_sweep(c, "O({f,g}) = X iff <f,g> free",
                                 [](const RingModel& r, const F& f, const F& g, json& w) {
                                   auto o = r.o(std::vector<F>{f, g});
                                   bool free = r.is_free(r.generated({f, g}));
                                   w = both(js(o), free);
                                   return (o == r.space().ground()) == free;
                                 });
    });
    add("lem.order.e", order, "I(U) = {0} <=> U dense in X", kRuleDiscrete, disc, [](SpaceContext& c) {
      return subset_sweep(c, true, "I(U) zero iff U dense", [&c](PointSet u, json& w) {
        bool zero = c.ring().is_zero(c.ring().vanishing_on(u));
        bool dense = c.x().is_dense(u);
        w = both(zero, dense);
        return zero == dense;
      });
    });
    add("lem.order.f", order, "I(U) = C(X) <=> U = ∅", kRuleDiscrete, disc, [](SpaceContext& c) {
      return subset_sweep(c, true, "I(U) whole iff U empty", [&c](PointSet u, json& w) {
        bool whole = c.ring().vanishing_on(u) == c.ring().whole();
        w = both(whole, u.empty());
        return whole == u.empty();
      });
    });
    add("lem.order.g", order, "O(<f>) = Coz(f)", kRuleDiscrete, disc, [](SpaceContext& c) {
      return function_pair_sweep(c, "O(<f>) = Coz(f)", [](const RingModel& r, const F& f, const F&, json& w) {
        auto lhs = r.o(r.generated({f})), rhs = r.coz(f);
        w = both(js(lhs), js(rhs));
        return lhs == rhs;
      });
    });
    add("lem.order.h", order, "I(U) = I(cl U)", kRuleAll, all, [](SpaceContext& c) {
      // Open-set level on every space: O(I(U)) = interior(X\U). On discrete
      // spaces the ring-level ideals are compared as well.
      return subset_sweep(c, false, "i(U) = i(cl U)", [&c](PointSet u, json& w) {
        const auto& t = c.x();
        auto lhs = i_of_set(t, u), rhs = i_of_set(t, t.closure(u));
        w = both(js(lhs), js(rhs));
        if (lhs != rhs) return false;
        if (c.discrete() && c.n() >= 2) {
          auto a = c.ring().vanishing_on(u), b = c.ring().vanishing_on(t.closure(u));
          w = both(ideal_json(a), ideal_json(b));
          return a == b;
        }
        return true;
      });
    });

    // ----- O and I: generated ideals and lattice laws -----------------------
    const std::string lattice = "Operators O and I: generated ideals, sums and intersections";
    add("prop.generated", lattice, "I = <S> => O(I) = O(S)", kRuleDiscrete, disc, [](SpaceContext& c) {
      return function_pair_sweep(c, "O(<f,g>) = O({f,g})", [](const RingModel& r, const F& f, const F& g, json& w) {
        auto lhs = r.o(r.generated({f, g})), rhs = r.o(std::vector<F>{f, g});
        w = both(js(lhs), js(rhs));
        return lhs == rhs;
      });
    });
    add("prop.capcup.a", lattice, "O(Σ I_α) = ∪ O(I_α)", kRuleDiscrete, disc, [](SpaceContext& c) {
      return ring_pair_sweep(c, "O(I + J) = O(I) ∪ O(J)", [](const RingModel& r, const Id& i, const Id& j, json& w) {
        auto lhs = r.o(r.sum(i, j)), rhs = r.o(i) | r.o(j);
        w = both(js(lhs), js(rhs));
        return lhs == rhs;
      });
    });
    add("prop.capcup.b", lattice, "O(∩ I_α) ⊆ ∩ O(I_α)", kRuleDiscrete, disc, [](SpaceContext& c) {
      return ring_pair_sweep(c, "O(I ∩ J) ⊆ O(I) ∩ O(J)", [](const RingModel& r, const Id& i, const Id& j, json& w) {
        auto lhs = r.o(r.intersection(i, j)), rhs = r.o(i) & r.o(j);
        w = both(js(lhs), js(rhs));
        return lhs.subset_of(rhs);
      });
    });
    add("prop.capcup.c", lattice, "I(∪ U_α) = ∩ I(U_α)", kRuleDiscrete, disc, [](SpaceContext& c) {
      return subset_pair_sweep(c, true, "I(U ∪ V) = I(U) ∩ I(V)", [&c](PointSet u, PointSet v, json& w) {
        const auto& r = c.ring();
        auto lhs = r.vanishing_on(u | v), rhs = r.intersection(r.vanishing_on(u), r.vanishing_on(v));
        w = both(ideal_json(lhs), ideal_json(rhs));
        return lhs == rhs;
      });
    });
    add("prop.capcup.d", lattice, "O(I ∩ J) = O(I) ∩ O(J)", kRuleDiscrete, disc, [](SpaceContext& c) {
      return ring_pair_sweep(c, "O(I ∩ J) = O(I) ∩ O(J)", [](const RingModel& r, const Id& i, const Id& j, json& w) {
        auto lhs = r.o(r.intersection(i, j)), rhs = r.o(i) & r.o(j);
        w = both(js(lhs), js(rhs));
        return lhs == rhs;
      });
    });
    add("prop.capcup.e", lattice, "I(U ∩ V) ⊇ I(U) + I(V)", kRuleDiscrete, disc, [](SpaceContext& c) {
      return subset_pair_sweep(c, true, "I(U) + I(V) ⊆ I(U ∩ V)", [&c](PointSet u, PointSet v, json& w) {
        const auto& r = c.ring();
        auto lhs = r.vanishing_on(u & v), rhs = r.sum(r.vanishing_on(u), r.vanishing_on(v));
        w = both(ideal_json(lhs), ideal_json(rhs));
        return rhs.coords.subset_of(lhs.coords);
      });
    });
    add("prop.O.cap.b.strict", lattice,
        "strictness probe: O(I(Q)) = ∩_{q∈Q} (X \\ {q}), i.e. interior(X \\ Q) = X \\ Q; a failure is a strictness "
        "witness",
        kRuleExplore, expl, [](SpaceContext& c) {
          return subset_sweep(c, false, "interior(X\\Q) = X\\Q", [&c](PointSet q, json& w) {
            const auto& t = c.x();
            auto lhs = i_of_set(t, q), rhs = q.complement(t.size());
            w = both(js(lhs), js(rhs));
            return lhs == rhs;
          }, "Q");
        });
    add("prop.I.cap.e.strict", lattice,
        "strictness probe: O(I(U ∩ V)) = O(I(U)) ∪ O(I(V)); a failure is a strictness witness", kRuleExplore, expl,
        [](SpaceContext& c) {
          return subset_pair_sweep(c, false, "i(U ∩ V) = i(U) ∪ i(V)", [&c](PointSet u, PointSet v, json& w) {
            const auto& t = c.x();
            auto lhs = i_of_set(t, u & v), rhs = i_of_set(t, u) | i_of_set(t, v);
            w = both(js(lhs), js(rhs));
            return lhs == rhs;
          });
        });
    add("cor.IUIV", lattice, "U ∪ V dense <=> I(U) ∩ I(V) = {0} <=> I(U) I(V) = {0}", kRuleAll, all,
        [](SpaceContext& c) {
          return subset_pair_sweep(c, false, "dense union iff disjoint i-images", [&c](PointSet u, PointSet v, json& w) {
            const auto& t = c.x();
            bool dense = t.is_dense(u | v);
            bool disjoint = !i_of_set(t, u).intersects(i_of_set(t, v));
            w = both(disjoint, dense);
            if (dense != disjoint) return false;
            if (c.discrete() && c.n() >= 2) {
              const auto& r = c.ring();
              auto iu = r.vanishing_on(u), iv = r.vanishing_on(v);
              bool cap_zero = r.is_zero(r.intersection(iu, iv)), prod_zero = r.is_zero(r.product(iu, iv));
              w = {{"lhs", {{"cap_zero", cap_zero}, {"product_zero", prod_zero}}}, {"rhs", dense}};
              return cap_zero == dense && prod_zero == dense;
            }
            return true;
          });
        });

    // ----- O and I: annihilators ------------------------------------------
    const std::string ann = "Operators O and I: annihilators";
    add("prop.OI.a", ann, "O(I(U)) = interior(X \\ U)", kRuleDiscrete, disc, [](SpaceContext& c) {
      return subset_sweep(c, true, "O(I(U)) = interior(X\\U)", [&c](PointSet u, json& w) {
        auto lhs = c.ring().o(c.ring().vanishing_on(u)), rhs = i_of_set(c.x(), u);
        w = both(js(lhs), js(rhs));
        return lhs == rhs;
      });
    });
    add("prop.OI.b", ann, "I(O(I)) = Ann(I)", kRuleDiscrete, disc, [](SpaceContext& c) {
      return ring_pair_sweep(c, "I(O(I)) = Ann(I)", [](const RingModel& r, const Id& i, const Id& j, json& w) {
        if (i != j) return true;
        auto lhs = r.vanishing_on(r.o(i)), rhs = r.ann(i);
        w = both(ideal_json(lhs), ideal_json(rhs));
        return lhs == rhs;
      });
    });
    add("prop.OI.c", ann, "(I∘O)^3(I) = (I∘O)(I)", kRuleAll, all, [](SpaceContext& c) {
      // Open-set level: ann_open∘ann_open∘ann_open = ann_open on every open.
      const auto& t = c.x();
      Sweep sw;
      for (auto g : t.opens()) {
        auto once = ann_open(t, g), thrice = ann_open(t, ann_open(t, once));
        json w = both(js(thrice), js(once));
        w["G"] = js(g);
        if (!sw.check(once == thrice, [&] { return w; })) return sw.result("ann^3 = ann on opens");
      }
      if (c.discrete() && c.n() >= 2) {
        const auto& r = c.ring();
        auto io = [&](const Id& i) { return r.vanishing_on(r.o(i)); };
        for (const auto& i : r.ideals()) {
          auto once = io(i), thrice = io(io(once));
          json w = both(ideal_json(thrice), ideal_json(once));
          w["I"] = ideal_json(i);
          if (!sw.check(once == thrice, [&] { return w; })) break;
        }
      }
      return sw.result("ann^3 = ann on opens");
    });
    add("prop.OI.d", ann, "O(Ann(I)) = interior(X \\ O(I))", kRuleDiscrete, disc, [](SpaceContext& c) {
      return ring_pair_sweep(c, "O(Ann(I)) = interior(X\\O(I))",
                             [&c](const RingModel& r, const Id& i, const Id& j, json& w) {
                               if (i != j) return true;
                               auto lhs = r.o(r.ann(i)), rhs = ann_open(c.x(), r.o(i));
                               w = both(js(lhs), js(rhs));
                               return lhs == rhs;
                             });
    });
    add("lem.open_in_image", ann, "every open G equals O(I) for some ideal I", kRuleDiscrete, disc,
        [](SpaceContext& c) {
          if (auto na = needs_two_points(c)) return *na;
          const auto& r = c.ring();
          Sweep sw;
          for (auto g : c.x().opens()) {
            bool found = false;
            for (const auto& i : r.ideals()) found = found || r.o(i) == g;
            if (!sw.check(found, [&] { return json{{"G", js(g)}, {"lhs", "no ideal"}, {"rhs", js(g)}}; }))
              break;
          }
          return sw.result("O is onto the opens");
        });

    // ----- products of ideals -----------------------------------------------
    const std::string prod = "Products of ideals";
    add("thm.IJ.a", prod, "IJ = {0} <=> O(I) ∩ O(J) = ∅", kRuleDiscrete, disc, [](SpaceContext& c) {
      return ring_pair_sweep(c, "IJ = 0 iff O(I) ∩ O(J) = ∅", [](const RingModel& r, const Id& i, const Id& j, json& w) {
        bool lhs = r.is_zero(r.product(i, j)), rhs = !r.o(i).intersects(r.o(j));
        w = both(lhs, rhs);
        return lhs == rhs;
      });
    });
    add("thm.IJ.b", prod, "I Ann(J) = {0} <=> O(I) ⊆ cl O(J)", kRuleDiscrete, disc, [](SpaceContext& c) {
      return ring_pair_sweep(c, "I Ann(J) = 0 iff O(I) ⊆ cl O(J)",
                             [&c](const RingModel& r, const Id& i, const Id& j, json& w) {
                               bool lhs = r.is_zero(r.product(i, r.ann(j)));
                               bool rhs = r.o(i).subset_of(c.x().closure(r.o(j)));
                               w = both(lhs, rhs);
                               return lhs == rhs;
                             });
    });
    add("thm.IJ.c", prod, "Ann(I) Ann(J) = {0} <=> cl(O(I) ∪ O(J)) = X", kRuleDiscrete, disc, [](SpaceContext& c) {
      return ring_pair_sweep(c, "Ann(I)Ann(J) = 0 iff cl(O(I) ∪ O(J)) = X",
                             [&c](const RingModel& r, const Id& i, const Id& j, json& w) {
                               bool lhs = r.is_zero(r.product(r.ann(i), r.ann(j)));
                               bool rhs = c.x().is_dense(r.o(i) | r.o(j));
                               w = both(lhs, rhs);
                               return lhs == rhs;
                             });
    });
    add("thm.IJ.d", prod, "cl O(I) = cl O(J) <=> Ann(I) = Ann(J)", kRuleAll, all, [](SpaceContext& c) {
      // Open-set level on every space, ring level on discrete spaces.
      const auto& t = c.x();
      Sweep sw;
      for (auto g : t.opens())
        for (auto h : t.opens()) {
          bool lhs = t.closure(g) == t.closure(h), rhs = ann_open(t, g) == ann_open(t, h);
          json w = both(lhs, rhs);
          w["G"] = js(g);
          w["H"] = js(h);
          if (!sw.check(lhs == rhs, [&] { return w; })) return sw.result("closures equal iff annihilators equal");
        }
      if (c.discrete() && c.n() >= 2) {
        const auto& r = c.ring();
        for (const auto& i : r.ideals())
          for (const auto& j : r.ideals()) {
            bool lhs = t.closure(r.o(i)) == t.closure(r.o(j)), rhs = r.ann(i) == r.ann(j);
            json w = both(lhs, rhs);
            w["I"] = ideal_json(i);
            w["J"] = ideal_json(j);
            if (!sw.check(lhs == rhs, [&] { return w; })) return sw.result("closures equal iff annihilators equal");
          }
      }
      return sw.result("closures equal iff annihilators equal");
    });
    add("thm.IJ.e", prod, "I(U) I = {0} <=> O(I) ⊆ cl U", kRuleDiscrete, disc, [](SpaceContext& c) {
      if (auto na = needs_two_points(c)) return *na;
      const auto& r = c.ring();
      Sweep sw;
      each_subset(c.n(), [&](PointSet u) {
        for (const auto& i : r.ideals()) {
          bool lhs = r.is_zero(r.product(r.vanishing_on(u), i)), rhs = r.o(i).subset_of(c.x().closure(u));
          json w = both(lhs, rhs);
          w["U"] = js(u);
          w["I"] = ideal_json(i);
          if (!sw.check(lhs == rhs, [&] { return w; })) return false;
        }
        return true;
      });
      return sw.result("I(U) I = 0 iff O(I) ⊆ cl U");
    });

    // ----- membership in A(X) and orthogonality ----------------------------
    const std::string member = "Vertices of AG(X) and orthogonality";
    add("cor.elementAG.a", member, "for I ≠ {0}: I ∈ A(X) <=> cl O(I) ≠ X", kRuleDiscrete, disc, [](SpaceContext& c) {
      return ring_pair_sweep(c, "I in A(X) iff cl O(I) ≠ X", [&c](const RingModel& r, const Id& i, const Id& j, json& w) {
        if (i != j || r.is_zero(i)) return true;
        bool lhs = r.in_A(i), rhs = !c.x().is_dense(r.o(i));
        w = both(lhs, rhs);
        return lhs == rhs;
      });
    });
    add("cor.elementAG.b.literal", member, "literal reading: I(U) ∈ A(X) <=> interior(cl U) ≠ ∅", kRuleExplore, expl,
        [](SpaceContext& c) {
          return subset_sweep(c, true, "I(U) in A(X) iff interior(cl U) ≠ ∅", [&c](PointSet u, json& w) {
            bool lhs = c.ring().in_A(c.ring().vanishing_on(u)), rhs = i_of_set_in_A_literal(c.x(), u);
            w = both(lhs, rhs);
            w["U_dense"] = c.x().is_dense(u);
            return lhs == rhs;
          });
        });
    add("cor.elementAG.b.repaired", member, "repaired reading: I(U) ∈ A(X) <=> cl U ≠ X and interior(cl U) ≠ ∅",
        kRuleDiscrete, disc, [](SpaceContext& c) {
          return subset_sweep(c, true, "I(U) in A(X) iff U not dense and interior(cl U) ≠ ∅", [&c](PointSet u, json& w) {
            bool lhs = c.ring().in_A(c.ring().vanishing_on(u)), rhs = i_of_set_in_A_repaired(c.x(), u);
            w = both(lhs, rhs);
            return lhs == rhs;
          });
        });
    add("cor.orthogonal", member, "I ⊥ J <=> O(I) ∩ O(J) = ∅ and cl(O(I) ∪ O(J)) = X", kRuleDiscrete, disc,
        [](SpaceContext& c) {
          return ag_pair_sweep(c, "graph orthogonality iff the set condition", [&c](std::size_t u, std::size_t v, json& w) {
            const auto& g = c.ag();
            bool lhs = orthogonal(g, u, v), rhs = orthogonality_test(c.x(), g.label(u), g.label(v));
            w = both(lhs, rhs);
            return lhs == rhs;
          });
        });

    // ----- distance, eccentricity, radius ---------------------------------
    const std::string dist = "Distance, eccentricity and radius of AG(X)";
    const std::array<std::string, 3> dist_text{
        "d(I,J) = 1 <=> O(I) ∩ O(J) = ∅",
        "d(I,J) = 2 <=> O(I) ∩ O(J) ≠ ∅ and cl(O(I) ∪ O(J)) ≠ X",
        "d(I,J) = 3 <=> O(I) ∩ O(J) ≠ ∅ and cl(O(I) ∪ O(J)) = X",
    };
    for (std::size_t k = 1; k <= 3; ++k)
      add("lem.distance." + std::string(1, char('a' + k - 1)), dist, dist_text[k - 1], kRuleDiscrete, disc,
          [k](SpaceContext& c) {
            return ag_pair_sweep(c, "BFS distance matches the set condition", [&c, k](std::size_t u, std::size_t v, json& w) {
              const auto& g = c.ag();
              const auto d = c.ag_analysis().dist[u][v];
              const int predicted = distance_classifier(c.x(), g.label(u), g.label(v));
              w = both(d, predicted);
              return (d == k) == (predicted == static_cast<int>(k));
            });
          });
    const std::array<std::string, 3> ecc_text{
        "ecc(I) = 3 <=> O(I) is not a singleton",
        "ecc(I) = 2 <=> O(I) is a singleton and |X| > 2",
        "ecc(I) = 1 <=> O(I) is a singleton and |X| = 2",
    };
    for (std::size_t k = 3; k >= 1; --k)
      add("prop.ecc." + std::string(1, char('a' + 3 - k)), dist, ecc_text[3 - k], kRuleDiscrete, disc,
          [k](SpaceContext& c) {
            return ag_vertex_sweep(c, "eccentricity matches the set condition", [&c, k](std::size_t u, json& w) {
              const auto e = c.ag_analysis().ecc[u];
              const int predicted = ecc_classifier(c.x(), c.ag().label(u));
              w = both(to_json(e), predicted);
              return (e == DistanceValue::of(k)) == (predicted == static_cast<int>(k));
            });
          });
    add("cor.star", dist, "|X| = 2 <=> AG(X) is a star", kRuleDiscrete, disc, [](SpaceContext& c) {
      if (auto na = needs_ag(c)) return *na;
      return ag_equation(c, c.ag_analysis().scalars.is_star, c.n() == 2, "star iff |X| = 2");
    });
    add("thm.radius", dist, "Rad(AG(X)) = 1 if |X| = 2; 2 if |X| > 2 with an isolated point; 3 if |X| > 2 without",
        kRuleDiscrete, disc, [](SpaceContext& c) {
          if (auto na = needs_ag(c)) return *na;
          return ag_equation(c, to_json(c.ag_analysis().scalars.radius),
                             radius_predictor(c.n(), c.cls().has_isolated_point), "radius matches the prediction");
        });

    // ----- leaves, gi, girth, triangles ------------------------------------
    const std::string cyc = "Leaves, cycles and triangles of AG(X)";
    add("prop.leaf", cyc, "I is a leaf <=> X \\ cl O(I) is a singleton", kRuleDiscrete, disc, [](SpaceContext& c) {
      return ag_vertex_sweep(c, "leaf iff the complement of the closure is a singleton", [&c](std::size_t u, json& w) {
        bool lhs = c.ag_analysis().leaf[u], rhs = leaf_classifier(c.x(), c.ag().label(u));
        w = both(lhs, rhs);
        return lhs == rhs;
      });
    });
    struct GiCase {
      bool disjoint, dense, equal_closures, singleton;
    };
    auto gi_claim = [&](std::string part, std::string statement, std::function<bool(const GiCase&, DistanceValue)> holds,
                        bool literal_only = false) {
      add("lem.gi." + part, cyc, std::move(statement) + " (I, J not leaves)", literal_only ? kRuleExplore : kRuleDiscrete,
          literal_only ? std::function<Scope(const SpaceContext&)>(expl) : std::function<Scope(const SpaceContext&)>(disc),
          [holds](SpaceContext& c) {
            if (auto na = needs_ag(c)) return *na;
            const auto& a = c.ag_analysis_with_gi();
            const auto& g = c.ag();
            const auto& t = c.x();
            Sweep sw;
            for (std::size_t u = 0; u < g.size(); ++u)
              for (std::size_t v = u + 1; v < g.size(); ++v) {
                if (a.leaf[u] || a.leaf[v]) continue;
                auto G = g.label(u), H = g.label(v);
                GiCase k{!G.intersects(H), t.is_dense(G | H), t.closure(G) == t.closure(H),
                         t.closure(G | H).complement(t.size()).size() == 1};
                json w{{"I", js(G)}, {"J", js(H)}, {"lhs", to_json(a.gi[u][v])},
                       {"case", {{"disjoint", k.disjoint}, {"dense_union", k.dense},
                                 {"equal_closures", k.equal_closures}, {"singleton_gap", k.singleton}}}};
                if (!sw.check(holds(k, a.gi[u][v]), [&] {
                      w["graph"] = graph_witness(g);
                      return w;
                    }))
                  return sw.result("gi matches the case analysis");
              }
            return sw.result("gi matches the case analysis");
          });
    };
    auto is = [](DistanceValue d, std::size_t k) { return d == DistanceValue::of(k); };
    gi_claim("a", "O(I) ∩ O(J) = ∅ and cl(O(I) ∪ O(J)) ≠ X <=> gi(I,J) = 3",
             [is](const GiCase& k, DistanceValue d) { return (k.disjoint && !k.dense) == is(d, 3); });
    gi_claim("b", "O(I) ∩ O(J) = ∅ and cl(O(I) ∪ O(J)) = X => gi(I,J) = 4",
             [is](const GiCase& k, DistanceValue d) { return !(k.disjoint && k.dense) || is(d, 4); });
    gi_claim("c", "O(I) ∩ O(J) ≠ ∅ and cl O(I) = cl O(J) => gi(I,J) = 4",
             [is](const GiCase& k, DistanceValue d) { return !(!k.disjoint && k.equal_closures) || is(d, 4); });
    // Read literally, (d) also covers an empty X \ cl(O(I) ∪ O(J)); there the
    // two vertices share no neighbour and gi is 6 (first at |X| = 5).
    gi_claim("d.literal",
             "if O(I) ∩ O(J) ≠ ∅ and cl O(I) ≠ cl O(J): X \\ cl(O(I) ∪ O(J)) not a singleton <=> gi(I,J) = 4",
             [is](const GiCase& k, DistanceValue d) {
               return !(!k.disjoint && !k.equal_closures) || (!k.singleton == is(d, 4));
             },
             true);
    gi_claim("d.repaired",
             "if O(I) ∩ O(J) ≠ ∅ and cl O(I) ≠ cl O(J): X \\ cl(O(I) ∪ O(J)) has at least two points <=> gi(I,J) = 4, "
             "and it is empty => gi(I,J) = 6",
             [is](const GiCase& k, DistanceValue d) {
               if (k.disjoint || k.equal_closures) return true;
               if (k.dense) return is(d, 6);
               return !k.singleton == is(d, 4);
             });
    gi_claim("e", "O(I) ∩ O(J) ≠ ∅, cl O(I) ≠ cl O(J) and X \\ cl(O(I) ∪ O(J)) a singleton <=> gi(I,J) = 5",
             [is](const GiCase& k, DistanceValue d) {
               return (!k.disjoint && !k.equal_closures && k.singleton) == is(d, 5);
             });
    add("thm.girth", cyc, "|X| > 2 => girth(AG(X)) = 3 (and no cycle when |X| = 2)", kRuleDiscrete, disc,
        [](SpaceContext& c) {
          if (auto na = needs_ag(c)) return *na;
          return ag_equation(c, to_json(c.ag_analysis().scalars.girth), to_json(girth_predictor(c.n())),
                             "girth matches the prediction");
        });
    add("thm.triangulated", cyc,
        "X has an isolated point <=> AG(X) has a leaf <=> AG(X) is not triangulated", kRuleDiscrete, disc,
        [](SpaceContext& c) {
          if (auto na = needs_ag(c)) return *na;
          const auto& a = c.ag_analysis();
          bool has_leaf = std::any_of(a.leaf.begin(), a.leaf.end(), [](char l) { return l != 0; });
          json vals{{"isolated_point", c.cls().has_isolated_point},
                    {"has_leaf", has_leaf},
                    {"not_triangulated", !a.scalars.is_triangulated},
                    {"predictor", !triangulated_predictor(c.x())}};
          bool same = vals["has_leaf"] == vals["isolated_point"] && vals["not_triangulated"] == vals["isolated_point"] &&
                      vals["predictor"] == vals["isolated_point"];
          if (same) return Outcome::pass("all statements agree", vals);
          return Outcome::fail("all statements agree", vals, {{"lhs", vals}, {"graph", graph_witness(c.ag())}});
        });

    // ----- domination, cliques, colorings ----------------------------------
    const std::string dom = "Domination, cliques and colorings of AG(X)";
    add("thm.dt.bounds", dom, "c(X) <= dt(AG(X)) <= w(X)", kRuleDiscreteThree, disc3, [](SpaceContext& c) {
      if (auto na = needs_ag(c)) return *na;
      const auto dt = c.ag_analysis().scalars.dominating_number;
      const auto cx = cellularity(c.x()), wx = weight(c.x());
      json computed{{"c", cx}, {"dt", dt}, {"w", wx}};
      if (cx <= dt && dt <= wx) return Outcome::pass("c <= dt <= w", computed);
      return Outcome::fail("c <= dt <= w", computed, {{"lhs", computed}, {"graph", graph_witness(c.ag())}});
    });
    add("cor.dt.discrete", dom, "X discrete => dt(AG(X)) = |X|", kRuleDiscreteThree, disc3, [](SpaceContext& c) {
      if (auto na = needs_ag(c)) return *na;
      if (!c.discrete()) return Outcome::not_applicable("X is not discrete");
      return ag_equation(c, c.ag_analysis().scalars.dominating_number, c.n(), "dt = |X|");
    });
    add("thm.dt.finite", dom, "dt(AG(X)) finite <=> X finite, and then dt(AG(X)) = |X| (finite side)",
        kRuleDiscreteThree, disc3, [](SpaceContext& c) {
          if (auto na = needs_ag(c)) return *na;
          return ag_equation(c, c.ag_analysis().scalars.dominating_number, c.n(), "dt = |X|");
        });
    add("thm.chi.clique.c", dom, "chi(AG(X)) = clique(AG(X)) = c(X)", kRuleDiscrete, disc, [](SpaceContext& c) {
      if (auto na = needs_ag(c)) return *na;
      const auto& s = c.ag_analysis().scalars;
      json lhs{{"chi", s.chromatic_number}, {"clique", s.clique_number}};
      const auto cx = cellularity(c.x());
      return ag_equation(c, lhs, json{{"chi", cx}, {"clique", cx}}, "chi = clique = c(X)");
    });

    // ----- the disjoint open set graph ------------------------------------
    const std::string dg = "The disjoint open set graph DG(X)";
    add("dg.coincide", dg, "DG(X) = AG(X), labels O(I) and edges identical", kRuleDiscrete, disc, [](SpaceContext& c) {
      if (auto na = needs_two_points(c)) return *na;
      const auto& d = c.dg();
      const auto& a = c.ag();
      if (d == a) return Outcome::pass("identical graphs", {{"vertices", d.size()}, {"edges", d.edge_count()}});
      return Outcome::fail("identical graphs", {{"dg_vertices", d.size()}, {"ag_vertices", a.size()}},
                           {{"lhs", graph_to_json(d)}, {"rhs", graph_to_json(a)}});
    });
    add("ag.complemented", dg, "AG(X) is complemented", kRuleDiscrete, disc, [](SpaceContext& c) {
      if (auto na = needs_ag(c)) return *na;
      return ag_equation(c, c.ag_analysis().scalars.is_complemented, true, "complemented");
    });
    for (char part : kHomParts) {
      add(std::string("lem.hom.") + part, "Vertex maps between graphs",
          std::string("twin expansion G of DG(X) onto G' = DG(X): ") +
              compare_hom_parts({}, {})[part - 'a'].relation,
          hom_part_guaranteed(part) ? kRuleAll : kRuleExplore,
          hom_part_guaranteed(part) ? std::function<Scope(const SpaceContext&)>(all)
                                    : std::function<Scope(const SpaceContext&)>(expl),
          [part](SpaceContext& c) { return hom_on_dg(c, part); });
    }
    add("dg.thm.a", dg, "diam(DG(X)) = 1 if |X| = 2, 3 if |X| > 2", kRuleDiscrete, disc, [](SpaceContext& c) {
      if (auto na = needs_dg(c)) return *na;
      return dg_equation(c, to_json(c.dg_scalars().diameter), c.n() == 2 ? 1 : 3, "diameter matches the prediction");
    });
    add("dg.thm.b", dg, "|X| = 2 <=> DG(X) is a star", kRuleDiscrete, disc, [](SpaceContext& c) {
      if (auto na = needs_dg(c)) return *na;
      return dg_equation(c, c.dg_scalars().is_star, c.n() == 2, "star iff |X| = 2");
    });
    add("dg.thm.c", dg, "Rad(DG(X)) = 1 if |X| = 2; 2 if |X| > 2 with an isolated point; 3 if |X| > 2 without",
        kRuleDiscrete, disc, [](SpaceContext& c) {
          if (auto na = needs_dg(c)) return *na;
          return dg_equation(c, to_json(c.dg_scalars().radius), radius_predictor(c.n(), c.cls().has_isolated_point),
                             "radius matches the prediction");
        });
    add("dg.thm.d", dg, "|X| > 2 => girth(DG(X)) = 3", kRuleDiscrete, disc, [](SpaceContext& c) {
      if (auto na = needs_dg(c)) return *na;
      if (c.n() <= 2) return Outcome::not_applicable("|X| = 2");
      return dg_equation(c, to_json(c.dg_scalars().girth), 3, "girth = 3");
    });
    add("dg.thm.e", dg, "chi(DG(X)) = clique(DG(X)) = c(X)", kRuleDiscrete, disc, [](SpaceContext& c) {
      if (auto na = needs_dg(c)) return *na;
      const auto& s = c.dg_scalars();
      const auto cx = cellularity(c.x());
      return dg_equation(c, json{{"chi", s.chromatic_number}, {"clique", s.clique_number}},
                         json{{"chi", cx}, {"clique", cx}}, "chi = clique = c(X)");
    });
    add("dg.thm.g", dg, "DG(X) is complemented", kRuleDiscrete, disc, [](SpaceContext& c) {
      if (auto na = needs_dg(c)) return *na;
      return dg_equation(c, c.dg_scalars().is_complemented, true, "complemented");
    });
    return v;
  }();
  return claims;
}

inline const Claim& find_claim(const std::string& id) {
  for (const auto& c : registry())
    if (c.id == id) return c;
  throw UnknownClaim("unknown claim id: " + id);
}

/// Claims matching any of the shell-style patterns (e.g. "lem.gi.*"), in
/// registry order. Empty pattern list selects everything. A pattern that
/// matches nothing is an error.
inline std::vector<const Claim*> select_claims(const std::vector<std::string>& patterns) {
  std::vector<const Claim*> out;
  std::vector<char> used(patterns.size(), 0);
  for (const auto& c : registry()) {
    bool take = patterns.empty();
    for (std::size_t i = 0; i < patterns.size(); ++i)
      if (fnmatch(patterns[i].c_str(), c.id.c_str(), 0) == 0) take = used[i] = 1;
    if (take) out.push_back(&c);
  }
  for (std::size_t i = 0; i < patterns.size(); ++i)
    if (!used[i]) throw UnknownClaim("no claim matches: " + patterns[i]);
  return out;
}

}  // namespace aig::veritas
