// Acceptance checks, one line per criterion: `acceptance` runs all of them,
// `acceptance 3 7` runs a subset. Exit status is 0 iff every selected
// criterion passed.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "../oracles.hpp"
#include "aig/cli.hpp"

using namespace aig;
using namespace aig::veritas;

namespace {

struct Result {
  bool ok = true;
  std::string detail;
};

/// Accumulates failures with the first few messages kept for the report.
class Check {
 public:
  void expect(bool cond, const std::string& what) {
    ++total_;
    if (cond) return;
    ++failed_;
    if (failed_ <= 3) msgs_ += (msgs_.empty() ? "" : "; ") + what;
  }
  Result result(const std::string& summary) const {
    if (!failed_) return {true, summary};
    return {false, std::to_string(failed_) + "/" + std::to_string(total_) + " checks failed: " + msgs_};
  }

 private:
  std::size_t total_ = 0, failed_ = 0;
  std::string msgs_;
};

UGraph<std::size_t> unlabeled(const UGraph<PointSet>& g) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(u, v);
  return make_graph(g.size(), edges);
}

std::string str(const DistanceValue& d) { return to_string(d); }

// 1. AG-model(2) is a single edge.
Result c1() {
  Check c;
  auto g = build_ag_discrete(2);
  auto s = compute_scalars(g);
  c.expect(s.vertices == 2, "vertices " + std::to_string(s.vertices));
  c.expect(s.edges == 1, "edges " + std::to_string(s.edges));
  c.expect(s.is_star, "not a star");
  c.expect(s.diameter == DistanceValue::of(1), "diameter " + str(s.diameter));
  c.expect(s.radius == DistanceValue::of(1), "radius " + str(s.radius));
  return c.result("2 vertices, 1 edge, star, diameter 1, radius 1");
}

// 2. Invariants of AG-model(3..5).
Result c2() {
  Check c;
  for (int n = 3; n <= 5; ++n) {
    auto g = build_ag_discrete(n);
    auto s = compute_scalars(g);
    const auto cx = cellularity(Topology::discrete(n));
    const std::string at = "n=" + std::to_string(n) + ": ";
    c.expect(s.diameter == DistanceValue::of(3), at + "diameter " + str(s.diameter));
    c.expect(s.radius == DistanceValue::of(2), at + "radius " + str(s.radius));
    c.expect(s.girth == DistanceValue::of(3), at + "girth " + str(s.girth));
    c.expect(s.dominating_number == std::size_t(n), at + "dt " + std::to_string(s.dominating_number));
    c.expect(s.clique_number == std::size_t(n), at + "clique " + std::to_string(s.clique_number));
    c.expect(s.chromatic_number == std::size_t(n), at + "chi " + std::to_string(s.chromatic_number));
    c.expect(cx == std::size_t(n), at + "c(X) " + std::to_string(cx));
    c.expect(!s.is_triangulated, at + "triangulated");
    c.expect(s.is_complemented, at + "not complemented");
    if (n <= 4) {
      // Subset-enumeration oracles are affordable up to 14 vertices.
      auto u = unlabeled(g);
      c.expect(oracle::dominating_number(u) == s.dominating_number, at + "dt disagrees with oracle");
      c.expect(oracle::clique_number(u) == s.clique_number, at + "clique disagrees with oracle");
      c.expect(oracle::chromatic_number(u) == s.chromatic_number, at + "chi disagrees with oracle");
    }
  }
  return c.result("n=3,4,5: diameter 3, radius 2, girth 3, dt = clique = chi = c(X) = n, not triangulated, "
                  "complemented");
}

// 3. Set-level classifiers against BFS and exhaustive cycle search.
Result c3() {
  Check c;
  std::size_t gi_pairs = 0, gi_mismatch = 0, repaired_mismatch = 0;
  std::string first_mismatch;
  for (int n = 3; n <= 5; ++n) {
    auto t = Topology::discrete(n);
    auto g = build_ag_discrete(n);
    auto dist = distance_matrix(g);
    for (std::size_t u = 0; u < g.size(); ++u) {
      const auto ecc = eccentricity(g, u);
      c.expect(DistanceValue::of(ecc_classifier(t, g.label(u))) == ecc, "ecc " + to_string(g.label(u)));
      c.expect(leaf_classifier(t, g.label(u)) == is_leaf(g, u), "leaf " + to_string(g.label(u)));
      for (std::size_t v = u + 1; v < g.size(); ++v)
        c.expect(std::size_t(distance_classifier(t, g.label(u), g.label(v))) == dist[u][v],
                 "distance " + to_string(g.label(u)) + " " + to_string(g.label(v)));
    }
    if (n < 4) continue;
    for (std::size_t u = 0; u < g.size(); ++u) {
      if (is_leaf(g, u)) continue;
      // Cycles up to length 7 cover every value a classifier can predict.
      auto best = oracle::gi_from_by_enumeration(g, u, 7);
      for (std::size_t v = u + 1; v < g.size(); ++v) {
        if (is_leaf(g, v)) continue;
        ++gi_pairs;
        const auto lit = std::size_t(gi_classifier(t, g.label(u), g.label(v)));
        if (lit != best[v]) {
          if (!gi_mismatch++)
            first_mismatch = "n=" + std::to_string(n) + " " + to_string(g.label(u)) + " vs " + to_string(g.label(v)) +
                             ": predicted " + std::to_string(lit) + ", shortest cycle " + std::to_string(best[v]);
        }
        repaired_mismatch += std::size_t(gi_classifier_repaired(t, g.label(u), g.label(v))) != best[v];
      }
    }
  }
  c.expect(gi_mismatch == 0, "gi_classifier disagrees on " + std::to_string(gi_mismatch) + "/" +
                                 std::to_string(gi_pairs) + " non-leaf pairs of AG-model(4..5), first " +
                                 first_mismatch + " (repaired classifier mismatches: " +
                                 std::to_string(repaired_mismatch) + ")");
  return c.result("distance, ecc, leaf on AG-model(3..5) and gi on " + std::to_string(gi_pairs) +
                  " non-leaf pairs of AG-model(4..5) agree with brute force");
}

// 4. Open-set identities over every labeled topology with n <= 4.
Result c4() {
  Check c;
  std::size_t spaces = 0;
  for (int n = 1; n <= 4; ++n)
    for (const auto& t : enumerate_topologies(n)) {
      ++spaces;
      const auto key = to_text(t);
      for (auto g : t.opens())
        c.expect(ann_open(t, ann_open(t, ann_open(t, g))) == ann_open(t, g), key + " ann^3 at " + to_string(g));
      for (auto g : t.opens())
        for (auto h : t.opens())
          c.expect((t.closure(g) == t.closure(h)) == (ann_open(t, g) == ann_open(t, h)),
                   key + " closures vs ann at " + to_string(g) + "," + to_string(h));
      for_each_subset(n, [&](PointSet u) {
        // interior(X \ U) from the definition, not through the library.
        const auto iu = oracle::interior_by_scan(t, u.complement(n));
        c.expect(i_of_set(t, u) == iu, key + " i(U) at " + to_string(u));
        c.expect(i_of_set(t, u) == i_of_set(t, t.closure(u)), key + " i(U) vs i(cl U) at " + to_string(u));
        for_each_subset(n, [&](PointSet v) {
          const bool disjoint = !i_of_set(t, u).intersects(i_of_set(t, v));
          c.expect(disjoint == t.is_dense(u | v), key + " dense union at " + to_string(u) + "," + to_string(v));
        });
      });
    }
  return c.result(std::to_string(spaces) + " topologies, all subsets: four identities hold");
}

// 5. Strictness witnesses by exhaustive search.
Result c5() {
  Check c;
  std::string found;
  for (const char* id : {"prop.O.cap.b.strict", "prop.I.cap.e.strict"}) {
    auto r = search_counterexample(find_claim(id), 3);
    c.expect(r.has_value(), std::string("no witness for ") + id);
    if (!r) continue;
    c.expect(parse_topology_text(r->topology).size() <= 3, std::string("witness too large for ") + id);
    auto w = r->outcome.witness;
    w.erase("graph");
    found += (found.empty() ? "" : "; ") + std::string(id) + " on " + r->topology + " " + w.dump();
  }
  return c.result(found);
}

// 6. Enumeration counts against generate-and-filter.
Result c6() {
  Check c;
  const std::size_t expected[] = {0, 1, 4, 29, 355};
  std::string counts;
  for (int n = 2; n <= 4; ++n) {
    const auto got = enumerate_topologies(n).size();
    const auto ref = oracle::count_topologies_generate_and_filter(n);
    c.expect(got == ref && got == expected[n], "n=" + std::to_string(n) + ": " + std::to_string(got) +
                                                   " vs oracle " + std::to_string(ref));
    counts += (counts.empty() ? "" : ", ") + std::to_string(got);
  }
  return c.result("n=2,3,4 -> " + counts + " (oracle agrees)");
}

// 7. DG of a discrete space is AG-model.
Result c7() {
  Check c;
  for (int n = 2; n <= 5; ++n) {
    auto d = build_dg(Topology::discrete(n));
    auto a = build_ag_discrete(n);
    c.expect(d.labels() == a.labels(), "n=" + std::to_string(n) + " vertex labels differ");
    c.expect(d == a, "n=" + std::to_string(n) + " edges differ");
  }
  return c.result("DG(discrete n) == AG-model(n) for n = 2..5");
}

// 8. Reflection soundness and the guaranteed suite on reflected spaces.
Result c8() {
  Check c;
  std::vector<Topology> spaces;
  for (int n = 1; n <= 4; ++n)
    for (auto& t : enumerate_topologies(n)) spaces.push_back(std::move(t));
  for (const auto& t : spaces) {
    const auto m = classify(t).component_count;
    c.expect(oracle::continuous_binary_by_preimages(t) == (std::size_t{1} << m),
             to_text(t) + " binary functions vs 2^" + std::to_string(m));
    if (m >= 2) {
      auto lifted = build_ag(t);
      auto model = build_ag_discrete(m);
      c.expect(lifted.size() == model.size() && lifted.edge_count() == model.edge_count() &&
                   compute_scalars(lifted) == compute_scalars(model),
               to_text(t) + " AG(C(X)) differs from AG-model(" + std::to_string(m) + ")");
    }
  }
  auto reports = run_suite(spaces, select_claims({}), {Selection::guaranteed, true, 4, nullptr});
  std::size_t checked = 0;
  for (const auto& r : reports) {
    checked += r.outcome.verdict == Verdict::pass;
    c.expect(r.outcome.verdict != Verdict::fail, r.claim + " fails on reflection of " + r.topology);
  }
  return c.result(std::to_string(spaces.size()) + " topologies: binary functions = 2^components; guaranteed "
                  "suite on reflections: " + std::to_string(checked) + " passes, 0 failures");
}

// 9. Vertex-map lemma trials.
Result c9() {
  Check c;
  HomTrialConfig cfg{1000, 1, 8, 3};
  auto rep = run_hom_trials(cfg);
  for (std::size_t i = 0; i < kHomParts.size(); ++i) {
    const auto& p = rep.parts[i];
    c.expect(p.pass + p.fail == cfg.trials, std::string("part ") + kHomParts[i] + " trial count");
    if (hom_part_guaranteed(kHomParts[i]))
      c.expect(p.fail == 0, std::string("part ") + kHomParts[i] + " failed " + std::to_string(p.fail) + " times");
  }
  c.expect(rep.probe.contains("girth_G") && rep.probe.contains("girth_G'"), "probe lacks girth values");
  c.expect(rep.probe["girth_G"] == 4 && rep.probe["girth_G'"] == "inf", "probe girths " + rep.probe.dump());
  c.expect(run_hom_trials(cfg).to_json() == rep.to_json(), "trials not deterministic");
  std::ostringstream findings;
  for (std::size_t i = 0; i < kHomParts.size(); ++i)
    findings << (i ? " " : "") << kHomParts[i] << "=" << rep.parts[i].pass << "/" << cfg.trials;
  return c.result("1000 trials: " + findings.str() + "; K2->C4 probe girth 4 vs inf");
}

// 10. Explore-mode DG sweep and findings table.
Result c10() {
  Check c;
  auto rows = dg_findings(4);
  c.expect(rows.size() == 7, "findings rows " + std::to_string(rows.size()));
  std::size_t degenerate_rows = 0, two_block_rows = 0;
  for (const auto& f : rows) {
    if (f.claim.empty()) continue;
    degenerate_rows += f.landmarks.at(0) == "degenerate";
    two_block_rows += f.landmarks.at(1) == "pass" || f.landmarks.at(1) == "fail";
  }
  c.expect(degenerate_rows == 6, "Sierpinski not degenerate on every DG part");
  c.expect(two_block_rows == 6, "two-block space missing from the table");
  std::ostringstream out, err;
  const char* verify[] = {"aig", "verify", "--suite", "explore", "--n-range", "1..4", "--claims", "dg.*", "--quiet"};
  c.expect(cli::run(9, verify, out, err) == 0, "explore sweep exit code nonzero: " + err.str());
  const char* table[] = {"aig", "dg-findings", "--max-n", "4"};
  c.expect(cli::run(4, table, out, err) == 0, "findings table exit code nonzero: " + err.str());
  std::string summary;
  for (const auto& f : rows)
    summary += (summary.empty() ? "" : " ") + f.part + ":" +
               (f.claim.empty() ? "absent" : std::to_string(f.pass) + "p/" + std::to_string(f.fail) + "f");
  return c.result("parts " + summary + "; Sierpinski degenerate, two-block space recorded");
}

struct Criterion {
  int id;
  const char* name;
  double limit_s;  // 0 = no limit
  std::function<Result()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> all{
      {1, "AG-model(2) single edge", 1, c1},
      {2, "AG-model(3..5) invariants", 60, c2},
      {3, "classifiers vs brute force", 0, c3},
      {4, "operator identities n<=4", 60, c4},
      {5, "strictness witnesses n<=3", 0, c5},
      {6, "enumeration counts", 30, c6},
      {7, "DG(discrete) == AG-model", 0, c7},
      {8, "reflection soundness", 0, c8},
      {9, "vertex-map lemma trials", 0, c9},
      {10, "explore DG sweep", 0, c10},
  };
  std::vector<int> pick;
  for (int i = 1; i < argc; ++i) pick.push_back(std::atoi(argv[i]));
  bool ok = true;
  for (const auto& cr : all) {
    if (!pick.empty() && std::find(pick.begin(), pick.end(), cr.id) == pick.end()) continue;
    const auto start = std::chrono::steady_clock::now();
    Result r;
    try {
      r = cr.run();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (cr.limit_s > 0 && secs > cr.limit_s) {
      r.ok = false;
      r.detail += " (over the " + std::to_string(int(cr.limit_s)) + " s limit)";
    }
    ok = ok && r.ok;
    std::printf("%s  C%-2d %-28s %7.2fs  %s\n", r.ok ? "PASS" : "FAIL", cr.id, cr.name, secs, r.detail.c_str());
    std::fflush(stdout);
  }
  return ok ? 0 : 1;
}
