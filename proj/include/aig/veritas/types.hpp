#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

namespace aig::veritas {

using nlohmann::json;

inline constexpr std::string_view kSchema = "veritas/1";

enum class Verdict { pass, fail, degenerate, not_applicable };
enum class Scope { guaranteed, explore };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::degenerate: return "degenerate";
    case Verdict::not_applicable: return "not-applicable";
  }
  return "?";
}

inline std::string to_string(Scope s) { return s == Scope::guaranteed ? "guaranteed" : "explore"; }

/// What a checker returns for one space.
struct Outcome {
  Verdict verdict = Verdict::pass;
  json expected;
  json computed;
  json witness;  // null unless verdict is fail

  static Outcome pass(json expected, json computed) {
    return {Verdict::pass, std::move(expected), std::move(computed), nullptr};
  }
  static Outcome fail(json expected, json computed, json witness) {
    return {Verdict::fail, std::move(expected), std::move(computed), std::move(witness)};
  }
  static Outcome degenerate(std::string why) { return {Verdict::degenerate, nullptr, std::move(why), nullptr}; }
  static Outcome not_applicable(std::string why) {
    return {Verdict::not_applicable, nullptr, std::move(why), nullptr};
  }
};

/// One line of the report stream.
struct TheoremReport {
  std::string claim;
  std::string space;     // canonical key of the space
  std::string topology;  // the space as evaluated (differs from `space` for labeled runs)
  bool reflected = false;
  Scope scope = Scope::guaranteed;
  Outcome outcome;

  json to_json() const {
    json j{{"schema", kSchema},
           {"claim", claim},
           {"space", space},
           {"topology", topology},
           {"scope", to_string(scope)},
           {"verdict", to_string(outcome.verdict)},
           {"expected", outcome.expected},
           {"computed", outcome.computed}};
    if (reflected) j["reflected"] = true;
    if (!outcome.witness.is_null()) j["witness"] = outcome.witness;
    return j;
  }
};

}  // namespace aig::veritas
