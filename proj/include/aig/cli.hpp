#pragma once

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "aig/veritas/harness.hpp"

namespace aig::cli {

using nlohmann::json;

inline constexpr int kExitOk = 0;
inline constexpr int kExitGuaranteedFailure = 1;
inline constexpr int kExitUsage = 2;

/// Raised for bad selectors, ranges and files; maps to exit code 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A topology given as a preset (`sierpinski`, `discrete:<n>`,
/// `indiscrete:<n>`), a file in either topology format, or an inline text or
/// JSON topology.
inline Topology resolve_topology(const std::string& ref) {
  auto sized = [&](const std::string& prefix) -> std::optional<int> {
    if (ref.rfind(prefix, 0) != 0) return std::nullopt;
    try {
      std::size_t used = 0;
      int n = std::stoi(ref.substr(prefix.size()), &used);
      if (used + prefix.size() == ref.size() && n >= 1 && n <= kMaxPoints) return n;
    } catch (const std::exception&) {
    }
    throw UsageError("bad point count in '" + ref + "'");
  };
  if (ref == "sierpinski") return Topology::sierpinski();
  if (auto n = sized("discrete:")) return Topology::discrete(*n);
  if (auto n = sized("indiscrete:")) return Topology::indiscrete(*n);
  std::error_code ec;
  if (std::filesystem::is_regular_file(ref, ec)) {
    std::ifstream in(ref);
    auto ts = read_topologies(in);
    if (ts.size() != 1)
      throw UsageError("'" + ref + "' holds " + std::to_string(ts.size()) + " topologies, expected exactly one");
    return ts.front();
  }
  std::istringstream in(ref);
  auto ts = read_topologies(in);
  if (ts.size() != 1) throw UsageError("cannot read a topology from '" + ref + "'");
  return ts.front();
}

/// `ag-discrete:<n>`, `ag:<ref>` (AG(C(X)) via the reflection, labels lifted
/// into X) or `dg:<ref>`.
inline UGraph<PointSet> resolve_model(const std::string& sel) {
  auto colon = sel.find(':');
  if (colon == std::string::npos) throw UsageError("model selector needs a kind: '" + sel + "'");
  const auto kind = sel.substr(0, colon), arg = sel.substr(colon + 1);
  if (kind == "ag-discrete") {
    int n = 0;
    try {
      std::size_t used = 0;
      n = std::stoi(arg, &used);
      if (used != arg.size()) n = 0;
    } catch (const std::exception&) {
    }
    if (n < 1) throw UsageError("ag-discrete needs a positive point count, got '" + arg + "'");
    return build_ag_discrete(n);
  }
  if (kind == "ag") return build_ag(resolve_topology(arg));
  if (kind == "dg") return build_dg(resolve_topology(arg));
  throw UsageError("unknown model kind '" + kind + "' (expected ag-discrete, ag or dg)");
}

/// "a..b" or a single "n".
inline std::pair<int, int> parse_range(const std::string& s) {
  try {
    auto dots = s.find("..");
    std::size_t used = 0;
    if (dots == std::string::npos) {
      int n = std::stoi(s, &used);
      if (used == s.size()) return {n, n};
    } else {
      auto lo_s = s.substr(0, dots), hi_s = s.substr(dots + 2);
      int lo = std::stoi(lo_s, &used);
      if (used == lo_s.size()) {
        int hi = std::stoi(hi_s, &used);
        if (used == hi_s.size() && lo >= 1 && lo <= hi) return {lo, hi};
      }
    }
  } catch (const std::exception&) {
  }
  throw UsageError("bad range '" + s + "' (expected a..b with 1 <= a <= b)");
}

/// Writes to `path`, or to `fallback` when `path` is empty.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : out_(&fallback) {
    if (path.empty()) return;
    file_.open(path);
    if (!file_) throw UsageError("cannot write '" + path + "'");
    out_ = &file_;
  }
  std::ostream& get() { return *out_; }

 private:
  std::ofstream file_;
  std::ostream* out_;
};

/// Runs the command line and returns the exit code. All output goes to the
/// given streams so the tests can drive it in-process.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Annihilating-ideal graphs of finite spaces: build, measure, verify", "aig"};
  app.require_subcommand(1);

  // topo enum
  auto* topo = app.add_subcommand("topo", "Finite topologies");
  topo->require_subcommand(1);
  auto* en = topo->add_subcommand("enum", "List every topology on N points, one per line");
  int enum_n = 0, enum_cap = kDefaultEnumerationCap;
  bool enum_canonical = false, enum_json = false;
  std::string enum_filter;
  en->add_option("N", enum_n, "Number of points")->required();
  en->add_flag("--canonical", enum_canonical, "One representative per homeomorphism class");
  en->add_option("--filter", enum_filter,
                 "all, discrete, non-discrete, t0, t1, isolated, no-isolated or connected");
  en->add_option("--cap", enum_cap, "Largest N accepted (hard limit 8)");
  en->add_flag("--json", enum_json, "JSON lines instead of the text format");

  // graph
  auto* graph = app.add_subcommand("graph", "Build AG or DG and report on it");
  std::string model, export_fmt, graph_out, graph_cache;
  bool invariants = false;
  graph->add_option("model", model, "ag-discrete:<n>, ag:<space> or dg:<space>")->required();
  graph->add_flag("--invariants", invariants, "Compute the full invariant report");
  graph->add_option("--export", export_fmt, "Write the graph as dot, dimacs or json")
      ->check(CLI::IsMember({"dot", "dimacs", "json"}));
  graph->add_option("--out", graph_out, "File for the export (default stdout)");
  graph->add_option("--cache-dir", graph_cache, std::string("Scalar cache directory (or $") + kCacheDirEnv + ")");

  // verify
  auto* verify = app.add_subcommand("verify", "Check claims over a family of spaces");
  std::string suite = "all", n_range = "2..4", spaces_file, verify_out, verify_cache;
  std::vector<std::string> claim_patterns;
  bool labeled = false, reflect = false, quiet = false;
  unsigned parallelism = 1;
  verify->add_option("--suite", suite, "guaranteed, explore or all")
      ->check(CLI::IsMember({"guaranteed", "explore", "all"}));
  verify->add_option("--n-range", n_range, "Space sizes a..b (default 2..4)");
  verify->add_option("--claims", claim_patterns, "Claim id patterns, e.g. 'lem.gi.*'")->delimiter(',');
  verify->add_flag("--labeled", labeled, "Every labeled topology instead of one per class");
  verify->add_flag("--reflect", reflect, "Evaluate on the Tychonoff reflection of each space");
  verify->add_option("--spaces", spaces_file, "Read spaces from a file instead of enumerating");
  verify->add_option("--out", verify_out, "JSON lines report file (default stdout)");
  verify->add_option("--parallelism", parallelism, "Worker threads")->check(CLI::Range(1u, 256u));
  verify->add_option("--cache-dir", verify_cache, std::string("Scalar cache directory (or $") + kCacheDirEnv + ")");
  verify->add_flag("--quiet", quiet, "No summary table on stderr");

  // search
  auto* search = app.add_subcommand("search", "First counterexample to a claim, smallest spaces first");
  std::string search_claim, search_filter;
  int max_n = 4;
  bool search_reflect = false;
  search->add_option("claim", search_claim, "Claim id")->required();
  search->add_option("--max-n", max_n, "Largest space size")->check(CLI::Range(1, kDefaultEnumerationCap));
  search->add_option("--filter", search_filter, "Space filter, as for topo enum");
  search->add_flag("--reflect", search_reflect, "Evaluate on the Tychonoff reflection");

  // hom
  auto* hom = app.add_subcommand("hom", "Seeded twin-expansion trials of the vertex-map lemma");
  veritas::HomTrialConfig hom_cfg;
  hom->add_option("--trials", hom_cfg.trials, "Number of trials");
  hom->add_option("--seed", hom_cfg.seed, "RNG seed");
  hom->add_option("--max-base", hom_cfg.max_base, "Largest base graph")->check(CLI::Range(1, 12));
  hom->add_option("--max-multiplicity", hom_cfg.max_multiplicity, "Largest twin class")->check(CLI::Range(1, 6));

  // dg-findings
  auto* findings = app.add_subcommand("dg-findings", "How each DG statement fares on all small spaces");
  int findings_n = 4;
  bool findings_json = false;
  findings->add_option("--max-n", findings_n, "Largest space size")->check(CLI::Range(1, kDefaultEnumerationCap));
  findings->add_flag("--json", findings_json, "JSON lines instead of a table");

  // claims
  auto* claims = app.add_subcommand("claims", "List the claim registry");
  bool markdown = false;
  claims->add_flag("--markdown", markdown, "Markdown table (docs/claims.md)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    // Subcommand help requests surface as ParseError subclasses too.
    if (e.get_exit_code() == 0) {
      out << e.what() << '\n';
      return kExitOk;
    }
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*en) {
      if (enum_cap > kCanonicalHardCap) throw UsageError("--cap above " + std::to_string(kCanonicalHardCap));
      auto filter = filter_by_name(enum_filter);
      auto ts = enum_canonical ? enumerate_canonical(enum_n, filter, enum_cap)
                               : enumerate_topologies(enum_n, filter, enum_cap);
      for (const auto& t : ts) out << (enum_json ? to_json(t).dump() : to_text(t)) << '\n';
      return kExitOk;
    }

    if (*graph) {
      auto g = resolve_model(model);
      if (!export_fmt.empty()) {
        Sink sink(graph_out, out);
        if (export_fmt == "dot") write_dot(sink.get(), g, model);
        if (export_fmt == "dimacs") write_dimacs(sink.get(), g);
        if (export_fmt == "json") sink.get() << graph_to_json(g).dump() << '\n';
        // The export owns stdout when it has no file of its own.
        if (graph_out.empty()) return kExitOk;
      }
      json j{{"model", model}};
      if (invariants) {
        auto cache = ScalarCache::open(graph_cache);
        std::optional<ScalarInvariants> scalars;
        // Only label-independent models can share cache entries across spaces.
        if (cache && model.rfind("ag-discrete:", 0) == 0)
          scalars = cache->get_or_compute(model, "graph", [&] { return compute_scalars(g); });
        j.update(to_json(compute_report(g, scalars ? &*scalars : nullptr)));
      } else {
        j["vertices"] = g.size();
        j["edges"] = g.edge_count();
        j["degenerate"] = g.size() < 2;
        j["graph"] = graph_to_json(g);
      }
      out << j.dump() << '\n';
      return kExitOk;
    }

    if (*verify) {
      std::vector<Topology> spaces;
      if (!spaces_file.empty()) {
        std::ifstream in(spaces_file);
        if (!in) throw UsageError("cannot read '" + spaces_file + "'");
        spaces = read_topologies(in);
      } else {
        auto [lo, hi] = parse_range(n_range);
        spaces = veritas::spaces_in_range(lo, hi, labeled);
      }
      auto selected = veritas::select_claims(claim_patterns);
      auto cache = ScalarCache::open(verify_cache);
      veritas::SuiteOptions opt{veritas::parse_selection(suite), reflect, parallelism, cache.get()};
      auto reports = veritas::run_suite(spaces, selected, opt);
      {
        Sink sink(verify_out, out);
        veritas::write_jsonl(sink.get(), reports);
      }
      if (!quiet) veritas::print_summary(err, veritas::summarize(reports));
      const auto failures = veritas::guaranteed_failures(reports);
      if (!quiet)
        err << spaces.size() << " spaces, " << reports.size() << " reports, " << failures
            << " guaranteed failures\n";
      return failures ? kExitGuaranteedFailure : kExitOk;
    }

    if (*search) {
      const auto& claim = veritas::find_claim(search_claim);
      auto r = veritas::search_counterexample(claim, max_n, filter_by_name(search_filter), search_reflect);
      out << (r ? r->to_json().dump() : std::string("none")) << '\n';
      return kExitOk;
    }

    if (*hom) {
      auto rep = veritas::run_hom_trials(hom_cfg);
      out << rep.to_json().dump() << '\n';
      return rep.guaranteed_ok() ? kExitOk : kExitGuaranteedFailure;
    }

    if (*findings) {
      auto rows = veritas::dg_findings(findings_n);
      if (findings_json) {
        for (const auto& f : rows) out << veritas::to_json(f).dump() << '\n';
      } else {
        out << "part  claim     pass  fail  degen  n/a  sierpinski      two_blocks      first failure / note\n";
        for (const auto& f : rows) {
          char buf[128];
          std::snprintf(buf, sizeof buf, "%-4s  %-8s  %4zu  %4zu  %5zu  %3zu  %-14s  %-14s  ", f.part.c_str(),
                        f.claim.empty() ? "-" : f.claim.c_str(), f.pass, f.fail, f.degenerate, f.not_applicable,
                        f.landmarks[0].c_str(), f.landmarks[1].c_str());
          out << buf << (f.first_failure.empty() ? "" : f.first_failure + "; ") << f.note << '\n';
        }
      }
      return kExitOk;
    }

    if (*claims) {
      if (markdown) {
        out << veritas::claims_markdown();
      } else {
        for (const auto& c : veritas::registry()) out << c.id << '\t' << c.statement << '\n';
      }
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const veritas::UnknownClaim& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace aig::cli
