// File formats: map files, catalog and invariants JSON, graph exports.

#pragma once

#include <array>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "ebm/census.hpp"
#include "ebm/coset.hpp"
#include "ebm/map.hpp"
#include "ebm/presentation.hpp"
#include "json.hpp"

namespace ebm {

using Json = nlohmann::ordered_json;

class IoError : public Error {
 public:
  using Error::Error;
};

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// ---------------------------------------------------------------------------
// Map files

struct MapFile {
  Presentation presentation;
  std::array<std::string, 4> marks;
};

inline MapFile parse_map_file(std::string_view text) {
  auto parsed = detail::parse_lines(text, true);
  if (!parsed.marks) throw ParseError(1, 1, "missing 'mark' line");
  if (parsed.marks->size() != 4)
    throw InvalidMap(MapDefect::WrongArity,
                     "'mark' names " + std::to_string(parsed.marks->size()) + " generators, expected 4");
  MapFile f{std::move(parsed.presentation), {}};
  for (std::size_t i = 0; i < 4; ++i) f.marks[i] = (*parsed.marks)[i];
  return f;
}

/// Builds the carrier from the presentation and marks the named generators.
inline EdgeBiregularMap load_map(const MapFile& f, std::size_t max_cosets = kDefaultMaxCosets) {
  MarkedGroup g = group_from_presentation(f.presentation, max_cosets);
  MarkedGroup carrier{g.group, {}};
  for (const auto& name : f.marks) carrier.marked.push_back(g.marked[*f.presentation.generator_index(name)]);
  return new_map(std::move(carrier));
}

inline EdgeBiregularMap load_map(std::string_view text, std::size_t max_cosets = kDefaultMaxCosets) {
  return load_map(parse_map_file(text), max_cosets);
}

inline std::string map_file_text(const Presentation& p, const std::array<std::string, 4>& marks) {
  return p.to_text() + "mark " + marks[0] + " " + marks[1] + " " + marks[2] + " " + marks[3] + "\n";
}

// ---------------------------------------------------------------------------
// JSON

inline Json invariants_json(const MapInvariants& inv) {
  Json j;
  j["group_order"] = inv.group_order;
  j["type"] = Json::array({inv.type.k, inv.type.l});
  j["vertices"] = inv.vertices;
  j["edges"] = inv.edges;
  j["faces"] = inv.faces;
  j["chi"] = inv.chi;
  j["orientable"] = inv.orientable;
  j["fully_regular"] = inv.fully_regular;
  j["self_dual"] = inv.self_dual;
  return j;
}

inline Json catalog_entry_json(const CatalogEntry& e) {
  Json j = invariants_json(e.invariants);
  j["family"] = e.family ? Json(*e.family) : Json(nullptr);
  j["presentation"] = e.presentation.to_text();
  j["marks"] = Json::array({e.marks[0], e.marks[1], e.marks[2], e.marks[3]});
  return j;
}

inline Json catalog_json(const std::vector<CatalogEntry>& entries) {
  Json j = Json::array();
  for (const auto& e : entries) j.push_back(catalog_entry_json(e));
  return j;
}

// ---------------------------------------------------------------------------
// Graph exports

namespace detail {

/// x bold, y thin, s long dashes, t short dashes.
inline constexpr std::array<const char*, 4> kEdgeStyles{
    "style=bold", "penwidth=0.5", "style=dashed", "style=dotted"};

}  // namespace detail

/// Cayley graph on the marked generators: one arc h -> h g per element and generator.
inline std::string cayley_dot(const EdgeBiregularMap& m) {
  const FiniteGroup& g = m.group();
  std::ostringstream out;
  out << "digraph cayley {\n";
  for (Element h = 0; h < g.order(); ++h) out << "  " << h << ";\n";
  for (Element h = 0; h < g.order(); ++h)
    for (std::size_t i = 0; i < 4; ++i)
      out << "  " << h << " -> " << g.mul(h, m.marks()[i]) << " [label=\"" << kMarkNames[i] << "\", "
          << detail::kEdgeStyles[i] << "];\n";
  out << "}\n";
  return out.str();
}

inline Json cayley_json(const EdgeBiregularMap& m) {
  const FiniteGroup& g = m.group();
  Json j;
  j["nodes"] = g.order();
  j["edges"] = Json::array();
  for (Element h = 0; h < g.order(); ++h)
    for (std::size_t i = 0; i < 4; ++i)
      j["edges"].push_back(Json{{"source", h}, {"target", g.mul(h, m.marks()[i])}, {"label", kMarkNames[i]}});
  return j;
}

namespace detail {

inline std::vector<std::tuple<Element, Element, const char*>> flag_edges(const FlagStructure& f) {
  std::vector<std::tuple<Element, Element, const char*>> out;
  const std::array<std::pair<const Perm*, const char*>, 3> rhos{
      {{&f.rho0, "rho0"}, {&f.rho1, "rho1"}, {&f.rho2, "rho2"}}};
  for (Element a = 0; a < f.flag_count; ++a)
    for (const auto& [rho, name] : rhos)
      if (a < (*rho)[a]) out.emplace_back(a, (*rho)[a], name);
  return out;
}

inline std::string flag_name(Element a, std::size_t n) {
  return std::to_string(a % n) + (a < n ? "+" : "-");
}

}  // namespace detail

/// Flag graph: 2|H| flags, one undirected edge per pair swapped by rho0, rho1, rho2.
inline std::string flags_dot(const EdgeBiregularMap& m) {
  const FlagStructure f = flag_structure(m);
  const std::size_t n = m.group().order();
  std::ostringstream out;
  out << "graph flags {\n";
  for (Element a = 0; a < f.flag_count; ++a) out << "  " << a << " [label=\"" << detail::flag_name(a, n) << "\"];\n";
  for (const auto& [a, b, name] : detail::flag_edges(f))
    out << "  " << a << " -- " << b << " [label=\"" << name << "\"];\n";
  out << "}\n";
  return out.str();
}

inline Json flags_json(const EdgeBiregularMap& m) {
  const FlagStructure f = flag_structure(m);
  const std::size_t n = m.group().order();
  Json j;
  j["nodes"] = Json::array();
  for (Element a = 0; a < f.flag_count; ++a) j["nodes"].push_back(Json{{"id", a}, {"label", detail::flag_name(a, n)}});
  j["edges"] = Json::array();
  for (const auto& [a, b, name] : detail::flag_edges(f))
    j["edges"].push_back(Json{{"source", a}, {"target", b}, {"label", name}});
  return j;
}

}  // namespace ebm
