#pragma once

#include <cctype>
#include <charconv>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "aig/errors.hpp"
#include "aig/topology.hpp"

namespace aig {

// Text form, one topology per line:
//
//   n=<k>; opens=<hex>,<hex>,...
//
// Masks are lowercase hex without prefix, ascending. The reader also accepts
// a 0x prefix, upper case, arbitrary order and extra whitespace. The JSON
// form mirrors it: {"n": k, "opens": ["0", "1", ...]}.

inline std::string to_hex(PointSet s) {
  std::ostringstream os;
  os << std::hex << s.mask();
  return os.str();
}

inline std::string to_text(const Topology& t) {
  std::string out = "n=" + std::to_string(t.size()) + "; opens=";
  bool first = true;
  for (auto g : t.opens()) {
    if (!first) out += ',';
    out += to_hex(g);
    first = false;
  }
  return out;
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline PointSet parse_hex_mask(std::string_view tok) {
  tok = trim(tok);
  if (tok.size() > 2 && tok[0] == '0' && (tok[1] == 'x' || tok[1] == 'X')) tok.remove_prefix(2);
  PointSet::mask_type v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v, 16);
  if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size())
    throw ParseError("bad hex mask '" + std::string(tok) + "'");
  return PointSet(v);
}

inline Topology build_parsed(int n, std::vector<PointSet> opens) {
  try {
    return Topology::from_opens(n, std::move(opens));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("not a topology: ") + e.what());
  }
}

}  // namespace detail

inline Topology parse_topology_text(std::string_view line) {
  auto semi = line.find(';');
  if (semi == std::string_view::npos) throw ParseError("expected 'n=<k>; opens=<masks>'");
  auto lhs = detail::trim(line.substr(0, semi));
  auto rhs = detail::trim(line.substr(semi + 1));
  if (lhs.substr(0, 2) != "n=" || rhs.substr(0, 6) != "opens=")
    throw ParseError("expected 'n=<k>; opens=<masks>'");
  auto nstr = detail::trim(lhs.substr(2));
  int n = 0;
  auto [p, ec] = std::from_chars(nstr.data(), nstr.data() + nstr.size(), n);
  if (ec != std::errc{} || p != nstr.data() + nstr.size()) throw ParseError("bad point count");
  std::vector<PointSet> opens;
  auto list = rhs.substr(6);
  while (!list.empty()) {
    auto comma = list.find(',');
    opens.push_back(detail::parse_hex_mask(list.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    list.remove_prefix(comma + 1);
  }
  return detail::build_parsed(n, std::move(opens));
}

inline nlohmann::json to_json(const Topology& t) {
  nlohmann::json opens = nlohmann::json::array();
  for (auto g : t.opens()) opens.push_back(to_hex(g));
  return {{"n", t.size()}, {"opens", opens}};
}

inline Topology topology_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("opens") || !j["opens"].is_array())
    throw ParseError("topology JSON needs 'n' and an 'opens' array");
  std::vector<PointSet> opens;
  for (const auto& o : j["opens"]) {
    if (o.is_string())
      opens.push_back(detail::parse_hex_mask(o.get<std::string>()));
    else if (o.is_number_unsigned())
      opens.push_back(PointSet(o.get<PointSet::mask_type>()));
    else
      throw ParseError("open masks must be hex strings or unsigned integers");
  }
  return detail::build_parsed(j["n"].get<int>(), std::move(opens));
}

/// Reads topologies in either format: a JSON object, a JSON array of objects,
/// JSON lines, or text lines. Blank lines and lines starting with '#' are
/// skipped in the line-oriented forms.
inline std::vector<Topology> read_topologies(std::istream& in) {
  std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  auto body = detail::trim(content);
  std::vector<Topology> out;
  if (!body.empty() && body.front() == '[') {
    nlohmann::json arr;
    try {
      arr = nlohmann::json::parse(body);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(e.what());
    }
    for (const auto& j : arr) out.push_back(topology_from_json(j));
    return out;
  }
  if (!body.empty() && body.front() == '{') {
    // A single (possibly pretty-printed) object; otherwise JSON lines below.
    auto j = nlohmann::json::parse(body, nullptr, /*allow_exceptions=*/false);
    if (!j.is_discarded()) return {topology_from_json(j)};
  }
  std::istringstream lines{std::string(body)};
  std::string line;
  while (std::getline(lines, line)) {
    auto s = detail::trim(line);
    if (s.empty() || s.front() == '#') continue;
    if (s.front() == '{') {
      try {
        out.push_back(topology_from_json(nlohmann::json::parse(s)));
      } catch (const nlohmann::json::exception& e) {
        throw ParseError(e.what());
      }
    } else {
      out.push_back(parse_topology_text(s));
    }
  }
  return out;
}

}  // namespace aig
