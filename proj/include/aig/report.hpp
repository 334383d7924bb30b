#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "aig/graph.hpp"
#include "aig/invariants.hpp"

namespace aig {

struct VertexData {
  std::string label;
  std::size_t degree = 0;
  DistanceValue eccentricity;
  bool is_leaf = false;
};

/// Graph-level invariants that do not depend on vertex labeling. These are
/// the expensive part of a report and the part that is cached.
struct ScalarInvariants {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  DistanceValue diameter, radius, girth;
  std::size_t dominating_number = 0, clique_number = 0, chromatic_number = 0;
  bool is_star = false, is_triangulated = false, is_hypertriangulated = false,
       is_complemented = false, is_bipartite = false, is_complete_bipartite = false;

  bool operator==(const ScalarInvariants&) const = default;
};

/// Everything computed for one graph. `degenerate` marks graphs with fewer
/// than two vertices, where radius, diameter and girth are undefined.
struct InvariantReport {
  ScalarInvariants scalars;
  bool degenerate = false;
  std::vector<VertexData> per_vertex;
};

template <class L>
ScalarInvariants compute_scalars(const UGraph<L>& g) {
  ScalarInvariants s;
  s.vertices = g.size();
  s.edges = g.edge_count();
  s.diameter = diameter(g);
  s.radius = radius(g);
  s.girth = girth(g);
  s.dominating_number = dominating_number(g);
  s.clique_number = clique_number(g);
  s.chromatic_number = chromatic_number(g);
  s.is_star = is_star(g);
  s.is_triangulated = is_triangulated(g);
  s.is_hypertriangulated = is_hypertriangulated(g);
  s.is_complemented = is_complemented(g);
  s.is_bipartite = is_bipartite(g);
  s.is_complete_bipartite = is_complete_bipartite(g);
  return s;
}

template <class L>
std::vector<VertexData> compute_vertex_data(const UGraph<L>& g) {
  std::vector<VertexData> out;
  for (std::size_t u = 0; u < g.size(); ++u)
    out.push_back({render_label(g.label(u)), g.degree(u), eccentricity(g, u), is_leaf(g, u)});
  return out;
}

/// `cached` skips the expensive scalar pass when the caller already has it.
template <class L>
InvariantReport compute_report(const UGraph<L>& g, const ScalarInvariants* cached = nullptr) {
  InvariantReport r;
  r.scalars = cached ? *cached : compute_scalars(g);
  r.degenerate = g.size() < 2;
  r.per_vertex = compute_vertex_data(g);
  return r;
}

inline nlohmann::json to_json(DistanceValue d) {
  if (d.is_finite()) return d.value();
  return to_string(d);
}

inline DistanceValue distance_from_json(const nlohmann::json& j) {
  if (j.is_number_unsigned()) return DistanceValue::of(j.get<std::size_t>());
  if (j == "inf") return DistanceValue::inf();
  if (j == "degenerate") return DistanceValue::degenerate();
  throw std::invalid_argument("bad distance value in JSON");
}

inline nlohmann::json to_json(const ScalarInvariants& s) {
  return {{"vertices", s.vertices},
          {"edges", s.edges},
          {"diameter", to_json(s.diameter)},
          {"radius", to_json(s.radius)},
          {"girth", to_json(s.girth)},
          {"dt", s.dominating_number},
          {"clique", s.clique_number},
          {"chi", s.chromatic_number},
          {"is_star", s.is_star},
          {"is_triangulated", s.is_triangulated},
          {"is_hypertriangulated", s.is_hypertriangulated},
          {"is_complemented", s.is_complemented},
          {"is_bipartite", s.is_bipartite},
          {"is_complete_bipartite", s.is_complete_bipartite}};
}

inline ScalarInvariants scalars_from_json(const nlohmann::json& j) {
  ScalarInvariants s;
  s.vertices = j.at("vertices");
  s.edges = j.at("edges");
  s.diameter = distance_from_json(j.at("diameter"));
  s.radius = distance_from_json(j.at("radius"));
  s.girth = distance_from_json(j.at("girth"));
  s.dominating_number = j.at("dt");
  s.clique_number = j.at("clique");
  s.chromatic_number = j.at("chi");
  s.is_star = j.at("is_star");
  s.is_triangulated = j.at("is_triangulated");
  s.is_hypertriangulated = j.at("is_hypertriangulated");
  s.is_complemented = j.at("is_complemented");
  s.is_bipartite = j.at("is_bipartite");
  s.is_complete_bipartite = j.at("is_complete_bipartite");
  return s;
}

inline nlohmann::json to_json(const InvariantReport& r) {
  auto j = to_json(r.scalars);
  j["degenerate"] = r.degenerate;
  auto vs = nlohmann::json::array();
  for (const auto& v : r.per_vertex)
    vs.push_back({{"label", v.label},
                  {"degree", v.degree},
                  {"eccentricity", to_json(v.eccentricity)},
                  {"is_leaf", v.is_leaf}});
  j["per_vertex"] = vs;
  return j;
}

// ---------------------------------------------------------------------------
// Exports
// ---------------------------------------------------------------------------

template <class L>
void write_dot(std::ostream& os, const UGraph<L>& g, const std::string& name = "G") {
  os << "graph \"" << name << "\" {\n";
  for (std::size_t u = 0; u < g.size(); ++u)
    os << "  v" << u << " [label=\"" << render_label(g.label(u)) << "\"];\n";
  for (auto [u, v] : g.edges()) os << "  v" << u << " -- v" << v << ";\n";
  os << "}\n";
}

/// DIMACS edge format, 1-based vertices; labels go in comment lines.
template <class L>
void write_dimacs(std::ostream& os, const UGraph<L>& g) {
  for (std::size_t u = 0; u < g.size(); ++u)
    os << "c v " << (u + 1) << ' ' << render_label(g.label(u)) << '\n';
  os << "p edge " << g.size() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) os << "e " << (u + 1) << ' ' << (v + 1) << '\n';
}

template <class L>
nlohmann::json graph_to_json(const UGraph<L>& g) {
  auto labels = nlohmann::json::array();
  for (const auto& l : g.labels()) labels.push_back(render_label(l));
  auto edges = nlohmann::json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return {{"vertices", labels}, {"edges", edges}};
}

}  // namespace aig
