#pragma once

#include <algorithm>
#include <atomic>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "aig/enumerate.hpp"
#include "aig/veritas/registry.hpp"

namespace aig::veritas {

enum class Selection { guaranteed, explore, all };

inline Selection parse_selection(const std::string& s) {
  if (s == "guaranteed") return Selection::guaranteed;
  if (s == "explore") return Selection::explore;
  if (s == "all") return Selection::all;
  throw std::invalid_argument("unknown suite: " + s + " (expected guaranteed, explore or all)");
}

struct SuiteOptions {
  Selection selection = Selection::all;
  bool reflect = false;
  unsigned parallelism = 1;
  const ScalarCache* cache = nullptr;
};

/// Every topology with lo <= n <= hi: one per homeomorphism class unless
/// `labeled`, optionally filtered.
inline std::vector<Topology> spaces_in_range(int lo, int hi, bool labeled, const TopologyFilter& filter = {},
                                             int cap = kDefaultEnumerationCap) {
  if (lo < 1 || hi < lo) throw std::invalid_argument("bad size range");
  std::vector<Topology> out;
  for (int n = lo; n <= hi; ++n) {
    auto batch = labeled ? enumerate_topologies(n, filter, cap) : enumerate_canonical(n, filter, cap);
    out.insert(out.end(), std::make_move_iterator(batch.begin()), std::make_move_iterator(batch.end()));
  }
  return out;
}

/// Evaluates one claim on one prepared space. Checker exceptions become
/// failures so a bug in one claim cannot hide the rest of the run.
inline TheoremReport evaluate(const Claim& claim, SpaceContext& ctx) {
  TheoremReport r{claim.id, ctx.key(), to_text(ctx.original()), ctx.reflected(), claim.scope(ctx), {}};
  try {
    r.outcome = claim.check(ctx);
  } catch (const std::exception& e) {
    r.outcome = Outcome::fail("no error", "error", {{"error", e.what()}});
  }
  return r;
}

/// Runs the selected claims over the given spaces. Spaces are split across
/// workers; results come back sorted by (claim, space, topology), so output
/// does not depend on the worker count.
inline std::vector<TheoremReport> run_suite(const std::vector<Topology>& spaces,
                                            const std::vector<const Claim*>& claims, const SuiteOptions& opt) {
  AgLibrary lib(opt.cache);
  std::vector<std::vector<TheoremReport>> per_space(spaces.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < spaces.size();) {
      SpaceContext ctx(spaces[i], opt.reflect, lib, opt.cache);
      for (const Claim* c : claims) {
        auto r = evaluate(*c, ctx);
        const bool keep = opt.selection == Selection::all ||
                          (opt.selection == Selection::guaranteed) == (r.scope == Scope::guaranteed);
        if (keep) per_space[i].push_back(std::move(r));
      }
    }
  };
  const unsigned workers = std::max(1u, std::min<unsigned>(opt.parallelism, static_cast<unsigned>(spaces.size())));
  std::vector<std::jthread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  pool.clear();

  std::vector<TheoremReport> out;
  for (auto& v : per_space) std::move(v.begin(), v.end(), std::back_inserter(out));
  std::stable_sort(out.begin(), out.end(), [](const TheoremReport& a, const TheoremReport& b) {
    return std::tie(a.claim, a.space, a.topology) < std::tie(b.claim, b.space, b.topology);
  });
  return out;
}

inline void write_jsonl(std::ostream& out, const std::vector<TheoremReport>& reports) {
  for (const auto& r : reports) out << r.to_json().dump() << '\n';
}

struct ClaimSummary {
  std::string claim;
  std::size_t pass = 0, fail = 0, degenerate = 0, not_applicable = 0;
  std::size_t guaranteed_failures = 0;
  std::string first_failure;  // space key of the first failing report
};

/// Per-claim tallies in registry order (claims with no reports are skipped).
inline std::vector<ClaimSummary> summarize(const std::vector<TheoremReport>& reports) {
  std::map<std::string, ClaimSummary> by_id;
  for (const auto& r : reports) {
    auto& s = by_id[r.claim];
    s.claim = r.claim;
    switch (r.outcome.verdict) {
      case Verdict::pass: ++s.pass; break;
      case Verdict::degenerate: ++s.degenerate; break;
      case Verdict::not_applicable: ++s.not_applicable; break;
      case Verdict::fail:
        ++s.fail;
        if (r.scope == Scope::guaranteed) ++s.guaranteed_failures;
        if (s.first_failure.empty()) s.first_failure = r.space;
        break;
    }
  }
  std::vector<ClaimSummary> out;
  for (const auto& c : registry())
    if (auto it = by_id.find(c.id); it != by_id.end()) out.push_back(it->second);
  return out;
}

inline std::size_t guaranteed_failures(const std::vector<TheoremReport>& reports) {
  return std::count_if(reports.begin(), reports.end(), [](const TheoremReport& r) {
    return r.scope == Scope::guaranteed && r.outcome.verdict == Verdict::fail;
  });
}

inline void print_summary(std::ostream& out, const std::vector<ClaimSummary>& rows) {
  std::size_t width = 5;
  for (const auto& r : rows) width = std::max(width, r.claim.size());
  auto pad = [](std::string s, std::size_t w) {
    s.resize(std::max(s.size(), w), ' ');
    return s;
  };
  out << pad("claim", width) << "  pass  fail  degen  n/a  g-fail  first failure\n";
  for (const auto& r : rows) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "  %4zu  %4zu  %5zu  %3zu  %6zu  ", r.pass, r.fail, r.degenerate,
                  r.not_applicable, r.guaranteed_failures);
    out << pad(r.claim, width) << buf << (r.first_failure.empty() ? "-" : r.first_failure) << '\n';
  }
}

/// First failing report for `claim` over canonical spaces of size 1..max_n,
/// in enumeration order, regardless of scope.
inline std::optional<TheoremReport> search_counterexample(const Claim& claim, int max_n,
                                                          const TopologyFilter& filter = {}, bool reflect = false) {
  AgLibrary lib;
  for (int n = 1; n <= max_n; ++n)
    for (const auto& t : enumerate_canonical(n, filter)) {
      SpaceContext ctx(t, reflect, lib);
      auto r = evaluate(claim, ctx);
      if (r.outcome.verdict == Verdict::fail) return r;
    }
  return std::nullopt;
}

/// How each part of the DG statements fares on the canonical spaces of size
/// 1..max_n: which parts hold on all non-degenerate spaces and where the
/// first failure or degenerate case sits.
struct DgFinding {
  std::string part;
  std::string claim;  // empty when the part has no checker
  std::size_t pass = 0, fail = 0, degenerate = 0, not_applicable = 0;
  std::string first_failure, first_degenerate;
  std::string note;
  /// Verdicts on the landmark spaces, in dg_landmarks() order.
  std::vector<std::string> landmarks;
};

/// Spaces every findings table reports on by name: the Sierpiński space
/// (empty DG) and two disjoint open pairs on four points (no isolated point).
inline const std::vector<std::pair<std::string, Topology>>& dg_landmarks() {
  static const std::vector<std::pair<std::string, Topology>> spaces{
      {"sierpinski", Topology::sierpinski()},
      {"two_blocks", Topology::from_opens(4, {PointSet{}, PointSet{0, 1}, PointSet{2, 3}, PointSet::full(4)})},
  };
  return spaces;
}

inline std::vector<DgFinding> dg_findings(int max_n) {
  static const std::vector<std::pair<std::string, std::string>> parts{
      {"a", "dg.thm.a"}, {"b", "dg.thm.b"}, {"c", "dg.thm.c"}, {"d", "dg.thm.d"},
      {"e", "dg.thm.e"}, {"f", ""},         {"g", "dg.thm.g"}};
  std::vector<const Claim*> claims;
  for (const auto& [part, id] : parts)
    if (!id.empty()) claims.push_back(&find_claim(id));
  auto reports = run_suite(spaces_in_range(1, max_n, false), claims, {});
  std::vector<Topology> marks;
  for (const auto& [name, t] : dg_landmarks()) marks.push_back(t);
  auto mark_reports = run_suite(marks, claims, {});
  std::vector<DgFinding> out;
  for (const auto& [part, id] : parts) {
    DgFinding f{part, id};
    for (const auto& t : marks) {
      std::string verdict = "-";
      for (const auto& r : mark_reports)
        if (r.claim == id && r.topology == to_text(t)) verdict = to_string(r.outcome.verdict);
      f.landmarks.push_back(verdict);
    }
    if (id.empty()) {
      f.note = "no statement (f) in the DG list";
      out.push_back(f);
      continue;
    }
    for (const auto& r : reports) {
      if (r.claim != id) continue;
      switch (r.outcome.verdict) {
        case Verdict::pass: ++f.pass; break;
        case Verdict::not_applicable: ++f.not_applicable; break;
        case Verdict::degenerate:
          ++f.degenerate;
          if (f.first_degenerate.empty()) f.first_degenerate = r.space;
          break;
        case Verdict::fail:
          ++f.fail;
          if (f.first_failure.empty()) f.first_failure = r.space;
          break;
      }
    }
    f.note = f.fail ? "fails beyond discrete spaces" : "holds on every non-degenerate space checked";
    out.push_back(f);
  }
  return out;
}

inline json to_json(const DgFinding& f) {
  return {{"part", f.part},
          {"claim", f.claim.empty() ? json() : json(f.claim)},
          {"pass", f.pass},
          {"fail", f.fail},
          {"degenerate", f.degenerate},
          {"not_applicable", f.not_applicable},
          {"first_failure", f.first_failure.empty() ? json() : json(f.first_failure)},
          {"first_degenerate", f.first_degenerate.empty() ? json() : json(f.first_degenerate)},
          {"note", f.note},
          {"landmarks", [&] {
             json m = json::object();
             for (std::size_t i = 0; i < f.landmarks.size(); ++i) m[dg_landmarks()[i].first] = f.landmarks[i];
             return m;
           }()}};
}

/// Markdown listing of the registry, used for docs/claims.md.
inline std::string claims_markdown() {
  std::string out = "# Claims\n\nGenerated by `aig claims --markdown`.\n";
  std::string topic;
  auto cell = [](const std::string& s) {
    std::string out;
    for (char ch : s) {
      if (ch == '|') out += '\\';
      out += ch;
    }
    return out;
  };
  for (const auto& c : registry()) {
    if (c.topic != topic) {
      topic = c.topic;
      out += "\n## " + topic + "\n\n| id | statement | scope |\n|---|---|---|\n";
    }
    out += "| `" + c.id + "` | " + cell(c.statement) + " | " + c.scope_rule + " |\n";
  }
  return out;
}

}  // namespace aig::veritas
