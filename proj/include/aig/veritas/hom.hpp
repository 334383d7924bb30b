#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "aig/ideal_graph.hpp"
#include "aig/report.hpp"
#include "aig/veritas/types.hpp"

namespace aig::veritas {

/// One part of the homomorphism lemma for a witness φ: G -> G'.
struct HomPart {
  char part = 'a';
  std::string relation;  // how G' and G are compared
  bool holds = false;
  json source_value;     // value on G
  json target_value;     // value on G'
};

inline constexpr std::array<char, 7> kHomParts{'a', 'b', 'c', 'd', 'e', 'f', 'g'};

/// Parts proved to hold for every valid φ; the rest are reported as findings.
inline bool hom_part_guaranteed(char part) { return part == 'd' || part == 'e' || part == 'f'; }

/// Compares each part of the lemma given the invariants of G (source) and G' (target).
inline std::array<HomPart, 7> compare_hom_parts(const ScalarInvariants& g, const ScalarInvariants& gp) {
  auto le = [](DistanceValue a, DistanceValue b) { return a == b || a < b; };
  return {{
      {'a', "diam(G') = diam(G)", gp.diameter == g.diameter, to_json(g.diameter), to_json(gp.diameter)},
      {'b', "Rad(G') = Rad(G)", gp.radius == g.radius, to_json(g.radius), to_json(gp.radius)},
      {'c', "girth(G') <= girth(G)", le(gp.girth, g.girth), to_json(g.girth), to_json(gp.girth)},
      {'d', "dt(G') <= dt(G)", gp.dominating_number <= g.dominating_number, g.dominating_number,
       gp.dominating_number},
      {'e', "clique(G') = clique(G)", gp.clique_number == g.clique_number, g.clique_number, gp.clique_number},
      {'f', "chi(G') = chi(G)", gp.chromatic_number == g.chromatic_number, g.chromatic_number,
       gp.chromatic_number},
      {'g', "G complemented <=> G' complemented", gp.is_complemented == g.is_complemented,
       g.is_complemented, gp.is_complemented},
  }};
}

/// Validates the witness, then evaluates every part. `target` may supply
/// precomputed invariants of G'.
template <class SL, class TL>
std::array<HomPart, 7> check_hom_lemma(const HomWitness<SL, TL>& w, const ScalarInvariants* target = nullptr) {
  w.validate();
  return compare_hom_parts(compute_scalars(w.source), target ? *target : compute_scalars(w.target));
}

inline json hom_part_json(const HomPart& p) {
  return {{"part", std::string(1, p.part)},
          {"relation", p.relation},
          {"holds", p.holds},
          {"G", p.source_value},
          {"G'", p.target_value}};
}

struct HomTrialConfig {
  std::size_t trials = 1000;
  std::uint64_t seed = 1;
  std::size_t max_base = 8;
  std::size_t max_multiplicity = 3;
};

struct HomPartTally {
  std::size_t pass = 0, fail = 0;
  json first_failure;  // null when every trial passed
};

struct HomTrialReport {
  HomTrialConfig config;
  std::array<HomPartTally, 7> parts;
  json probe;

  /// Every guaranteed part passed on every trial.
  bool guaranteed_ok() const {
    for (std::size_t i = 0; i < kHomParts.size(); ++i)
      if (hom_part_guaranteed(kHomParts[i]) && parts[i].fail) return false;
    return true;
  }

  json to_json() const {
    json ps = json::array();
    for (std::size_t i = 0; i < kHomParts.size(); ++i)
      ps.push_back({{"part", std::string(1, kHomParts[i])},
                    {"scope", to_string(hom_part_guaranteed(kHomParts[i]) ? Scope::guaranteed : Scope::explore)},
                    {"pass", parts[i].pass},
                    {"fail", parts[i].fail},
                    {"first_failure", parts[i].first_failure}});
    return {{"schema", kSchema},
            {"trials", config.trials},
            {"seed", config.seed},
            {"max_base", config.max_base},
            {"max_multiplicity", config.max_multiplicity},
            {"parts", ps},
            {"probe", probe}};
  }
};

/// K2 with both vertices doubled is C4: the smallest twin expansion where the
/// girth comparison fails as written.
inline json k2_c4_probe() {
  auto k2 = make_graph(2, {{0, 1}});
  auto w = twin_expansion(k2, {2, 2});
  auto parts = check_hom_lemma(w);
  json ps = json::array();
  for (const auto& p : parts) ps.push_back(hom_part_json(p));
  return {{"base", graph_to_json(k2)},
          {"multiplicities", {2, 2}},
          {"expanded", graph_to_json(w.source)},
          {"girth_G", to_json(girth(w.source))},
          {"girth_G'", to_json(girth(k2))},
          {"parts", ps}};
}

/// Seeded twin-expansion trials. Draws use raw mt19937_64 output so the
/// sequence is identical across standard libraries.
inline HomTrialReport run_hom_trials(const HomTrialConfig& cfg) {
  if (cfg.max_base == 0 || cfg.max_multiplicity == 0) throw std::invalid_argument("trial bounds must be positive");
  HomTrialReport report{cfg, {}, k2_c4_probe()};
  std::mt19937_64 rng(cfg.seed);
  auto draw = [&](std::uint64_t bound) { return rng() % bound; };
  for (std::size_t trial = 0; trial < cfg.trials; ++trial) {
    const std::size_t n = 1 + draw(cfg.max_base);
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = u + 1; v < n; ++v)
        if (draw(2)) edges.emplace_back(u, v);
    std::vector<std::size_t> mult(n);
    for (auto& k : mult) k = 1 + draw(cfg.max_multiplicity);
    auto base = make_graph(n, edges);
    auto parts = check_hom_lemma(twin_expansion(base, mult));
    for (std::size_t i = 0; i < parts.size(); ++i) {
      auto& tally = report.parts[i];
      if (parts[i].holds) {
        ++tally.pass;
      } else if (++tally.fail == 1) {
        tally.first_failure = {{"trial", trial},
                               {"base", graph_to_json(base)},
                               {"multiplicities", mult},
                               {"check", hom_part_json(parts[i])}};
      }
    }
  }
  return report;
}

}  // namespace aig::veritas
