// Edge-biregular maps in canonical form (H; x, y, s, t).
//
// x, y are the reflections along and across an edge of the first edge orbit,
// s, t the same for the second orbit. The four are distinct involutions with
// [x, y] = [s, t] = 1 that generate H. The map has type (k, l) with
// k = 2 ord(ty) (vertex valency) and l = 2 ord(sx) (face length).

#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "ebm/coset.hpp"
#include "ebm/group.hpp"

namespace ebm {

enum class MapDefect { NotInvolution, NotDistinct, PairNotCommuting, NotGenerating, WrongArity };

inline const char* to_string(MapDefect d) {
  switch (d) {
    case MapDefect::NotInvolution: return "NotInvolution";
    case MapDefect::NotDistinct: return "NotDistinct";
    case MapDefect::PairNotCommuting: return "PairNotCommuting";
    case MapDefect::NotGenerating: return "NotGenerating";
    case MapDefect::WrongArity: return "WrongArity";
  }
  return "?";
}

class InvalidMap : public Error {
 public:
  InvalidMap(MapDefect defect, const std::string& detail)
      : Error(std::string(to_string(defect)) + ": " + detail), defect_(defect) {}
  MapDefect defect() const { return defect_; }

 private:
  MapDefect defect_;
};

inline constexpr std::array<const char*, 4> kMarkNames{"x", "y", "s", "t"};

struct MapType {
  std::size_t k = 0;
  std::size_t l = 0;

  MapType normalized() const { return k <= l ? *this : MapType{l, k}; }
  MapType swapped() const { return MapType{l, k}; }
  friend auto operator<=>(const MapType&, const MapType&) = default;
};

struct MapCounts {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t faces = 0;
  friend bool operator==(const MapCounts&, const MapCounts&) = default;
};

class EdgeBiregularMap {
 public:
  /// Validates the canonical-form conditions; throws InvalidMap naming the
  /// first one that fails.
  static EdgeBiregularMap from(MarkedGroup carrier) {
    if (carrier.marked.size() != 4)
      throw InvalidMap(MapDefect::WrongArity,
                       "expected 4 marked elements, got " + std::to_string(carrier.marked.size()));
    const FiniteGroup& g = carrier.g();
    for (std::size_t i = 0; i < 4; ++i)
      if (!g.is_involution(carrier.marked[i]))
        throw InvalidMap(MapDefect::NotInvolution, std::string(kMarkNames[i]) + " is not an involution");
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = i + 1; j < 4; ++j)
        if (carrier.marked[i] == carrier.marked[j])
          throw InvalidMap(MapDefect::NotDistinct,
                           std::string(kMarkNames[i]) + " and " + kMarkNames[j] + " coincide");
    if (!g.commute(carrier.marked[0], carrier.marked[1]))
      throw InvalidMap(MapDefect::PairNotCommuting, "x and y do not commute");
    if (!g.commute(carrier.marked[2], carrier.marked[3]))
      throw InvalidMap(MapDefect::PairNotCommuting, "s and t do not commute");
    if (!generates(g, carrier.marked))
      throw InvalidMap(MapDefect::NotGenerating, "x, y, s, t do not generate the group");
    EdgeBiregularMap m;
    m.carrier_ = std::move(carrier);
    return m;
  }

  const MarkedGroup& carrier() const { return carrier_; }
  const FiniteGroup& group() const { return carrier_.g(); }
  const std::vector<Element>& marks() const { return carrier_.marked; }
  Element x() const { return carrier_.marked[0]; }
  Element y() const { return carrier_.marked[1]; }
  Element s() const { return carrier_.marked[2]; }
  Element t() const { return carrier_.marked[3]; }

  /// Same group object, marks permuted: result[i] = marks[perm[i]].
  EdgeBiregularMap remarked(std::array<std::size_t, 4> perm) const {
    EdgeBiregularMap m;
    m.carrier_.group = carrier_.group;
    for (std::size_t i : perm) m.carrier_.marked.push_back(carrier_.marked[i]);
    return m;
  }

 private:
  EdgeBiregularMap() = default;
  MarkedGroup carrier_;
};

inline EdgeBiregularMap new_map(MarkedGroup carrier) { return EdgeBiregularMap::from(std::move(carrier)); }

inline MapType type_of(const EdgeBiregularMap& m) {
  const FiniteGroup& g = m.group();
  return MapType{2 * g.element_order(g.mul(m.t(), m.y())), 2 * g.element_order(g.mul(m.s(), m.x()))};
}

inline MapCounts counts(const EdgeBiregularMap& m) {
  const std::size_t n = m.group().order();
  const MapType ty = type_of(m);
  if (n % ty.k != 0 || n % ty.l != 0 || n % 2 != 0) throw Error("map counts are not integral");
  return MapCounts{n / ty.k, n / 2, n / ty.l};
}

inline long long euler_characteristic(const EdgeBiregularMap& m) {
  MapCounts c = counts(m);
  return (long long)c.vertices - (long long)c.edges + (long long)c.faces;
}

inline EdgeBiregularMap dual(const EdgeBiregularMap& m) { return m.remarked({1, 0, 3, 2}); }
inline EdgeBiregularMap twin(const EdgeBiregularMap& m) { return m.remarked({2, 3, 0, 1}); }

// ---------------------------------------------------------------------------
// Flags

/// Flags are H x {+, -}: flag h is (h, +) and flag |H| + h is (h, -).
struct FlagStructure {
  std::size_t flag_count = 0;
  Perm rho0, rho1, rho2;
};

inline FlagStructure flag_structure(const EdgeBiregularMap& m) {
  const FiniteGroup& g = m.group();
  const std::size_t n = g.order();
  FlagStructure f;
  f.flag_count = 2 * n;
  f.rho0.resize(2 * n);
  f.rho1.resize(2 * n);
  f.rho2.resize(2 * n);
  for (Element h = 0; h < n; ++h) {
    f.rho0[h] = g.mul(h, m.x());
    f.rho0[n + h] = Element(n + g.mul(h, m.s()));
    f.rho2[h] = g.mul(h, m.y());
    f.rho2[n + h] = Element(n + g.mul(h, m.t()));
    f.rho1[h] = Element(n + h);
    f.rho1[n + h] = h;
  }
  return f;
}

/// Number of orbits of the group generated by `perms` (all of one degree).
inline std::size_t orbit_count(std::initializer_list<const Perm*> perms) {
  const std::size_t n = (*perms.begin())->size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  std::size_t orbits = n;
  for (const Perm* p : perms)
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t a = find(i), b = find((*p)[i]);
      if (a != b) {
        parent[std::max(a, b)] = std::min(a, b);
        --orbits;
      }
    }
  return orbits;
}

/// Vertices, edges and faces as orbits on flags.
inline MapCounts flag_orbit_counts(const FlagStructure& f) {
  return MapCounts{orbit_count({&f.rho1, &f.rho2}), orbit_count({&f.rho0, &f.rho2}), orbit_count({&f.rho0, &f.rho1})};
}

/// Two-colourability of the flag graph (edges flag -- rho_i(flag)).
inline bool is_flag_graph_bipartite(const FlagStructure& f) {
  std::vector<int> colour(f.flag_count, -1);
  std::vector<Element> stack;
  for (Element start = 0; start < f.flag_count; ++start) {
    if (colour[start] >= 0) continue;
    colour[start] = 0;
    stack.push_back(start);
    while (!stack.empty()) {
      Element a = stack.back();
      stack.pop_back();
      for (const Perm* p : {&f.rho0, &f.rho1, &f.rho2}) {
        Element b = (*p)[a];
        if (colour[b] < 0) {
          colour[b] = 1 - colour[a];
          stack.push_back(b);
        } else if (colour[b] == colour[a]) {
          return false;
        }
      }
    }
  }
  return true;
}

inline bool is_orientable(const EdgeBiregularMap& m) { return index_of_even_subgroup(m.carrier()) == 2; }

// ---------------------------------------------------------------------------
// Isomorphism and symmetry

inline bool is_map_isomorphic(const EdgeBiregularMap& a, const EdgeBiregularMap& b) {
  return extends_to_isomorphism(a.carrier(), b.carrier());
}

inline bool is_fully_regular(const EdgeBiregularMap& m) { return is_map_isomorphic(m, twin(m)); }
inline bool is_self_dual(const EdgeBiregularMap& m) { return is_map_isomorphic(m, dual(m)); }

/// True iff b is isomorphic to a, dual(a), twin(a) or dual(twin(a)).
inline bool is_equivalent_up_to_duality_and_twin(const EdgeBiregularMap& a, const EdgeBiregularMap& b) {
  if (a.group().order() != b.group().order()) return false;
  if (type_of(a).normalized() != type_of(b).normalized()) return false;
  for (const auto& c : {a, dual(a), twin(a), dual(twin(a))})
    if (is_map_isomorphic(c, b)) return true;
  return false;
}

struct MapInvariants {
  MapType type;
  std::size_t group_order = 0;
  std::size_t vertices = 0, edges = 0, faces = 0;
  long long chi = 0;
  bool orientable = false, fully_regular = false, self_dual = false;
  friend bool operator==(const MapInvariants&, const MapInvariants&) = default;
};

inline MapInvariants invariants(const EdgeBiregularMap& m) {
  MapInvariants inv;
  inv.type = type_of(m);
  inv.group_order = m.group().order();
  MapCounts c = counts(m);
  inv.vertices = c.vertices;
  inv.edges = c.edges;
  inv.faces = c.faces;
  inv.chi = euler_characteristic(m);
  inv.orientable = is_orientable(m);
  inv.fully_regular = is_fully_regular(m);
  inv.self_dual = is_self_dual(m);
  return inv;
}

// ---------------------------------------------------------------------------
// Semi-edges
//
// A fully regular map (G; r0, r1, r2) becomes an edge-biregular map with a
// semi-edge in every corner by reading x = r0, y = r2, s = t = r1. Requiring
// ord(r0 r2) = 2 rules out maps whose edges are themselves semi-edges, and
// with them the one-vertex semi-star.

class SemiEdgeMap {
 public:
  /// Marks (x, y, r).
  static SemiEdgeMap from(MarkedGroup carrier) {
    if (carrier.marked.size() != 3)
      throw InvalidMap(MapDefect::WrongArity, "semi-edge map needs marks (x, y, r)");
    const FiniteGroup& g = carrier.g();
    static constexpr std::array<const char*, 3> names{"x", "y", "r"};
    for (std::size_t i = 0; i < 3; ++i)
      if (!g.is_involution(carrier.marked[i]))
        throw InvalidMap(MapDefect::NotInvolution, std::string(names[i]) + " is not an involution");
    if (carrier.marked[0] == carrier.marked[1] || carrier.marked[0] == carrier.marked[2] ||
        carrier.marked[1] == carrier.marked[2])
      throw InvalidMap(MapDefect::NotDistinct, "x, y, r must be distinct");
    if (!g.commute(carrier.marked[0], carrier.marked[1]))
      throw InvalidMap(MapDefect::PairNotCommuting, "x and y do not commute");
    if (!generates(g, carrier.marked)) throw InvalidMap(MapDefect::NotGenerating, "x, y, r do not generate");
    SemiEdgeMap m;
    m.carrier_ = std::move(carrier);
    return m;
  }

  const MarkedGroup& carrier() const { return carrier_; }
  const FiniteGroup& group() const { return carrier_.g(); }
  Element x() const { return carrier_.marked[0]; }
  Element y() const { return carrier_.marked[1]; }
  Element r() const { return carrier_.marked[2]; }

 private:
  SemiEdgeMap() = default;
  MarkedGroup carrier_;
};

/// (r0, r1, r2) -> marks (x, y, r) = (r0, r2, r1).
inline SemiEdgeMap insert_semi_edges(const MarkedGroup& regular) {
  if (regular.marked.size() != 3) throw InvalidMap(MapDefect::WrongArity, "regular map needs marks (r0, r1, r2)");
  return SemiEdgeMap::from(MarkedGroup{regular.group, {regular.marked[0], regular.marked[2], regular.marked[1]}});
}

/// Marks (x, y, r) -> (r0, r1, r2) = (x, r, y).
inline MarkedGroup delete_semi_edges(const SemiEdgeMap& m) {
  return MarkedGroup{m.carrier().group, {m.x(), m.r(), m.y()}};
}

/// Type of the edge-biregular reading s = t = r: (2 ord(ry), 2 ord(rx)).
inline MapType type_of(const SemiEdgeMap& m) {
  const FiniteGroup& g = m.group();
  return MapType{2 * g.element_order(g.mul(m.r(), m.y())), 2 * g.element_order(g.mul(m.r(), m.x()))};
}

/// Type (ord(r1 r2), ord(r0 r1)) of a fully regular map.
inline MapType regular_type(const MarkedGroup& r) {
  const FiniteGroup& g = r.g();
  return MapType{g.element_order(g.mul(r.marked[1], r.marked[2])), g.element_order(g.mul(r.marked[0], r.marked[1]))};
}

struct SemiEdgeCounts {
  std::size_t vertices = 0, edges = 0, semi_edges = 0, faces = 0;
  long long chi = 0;
};

/// Semi-edges do not contribute to the Euler characteristic.
inline SemiEdgeCounts semi_edge_counts(const SemiEdgeMap& m) {
  const std::size_t n = m.group().order();
  const MapType ty = type_of(m);
  SemiEdgeCounts c;
  c.vertices = n / ty.k;
  c.edges = n / 4;
  c.semi_edges = n / 2;
  c.faces = n / ty.l;
  c.chi = (long long)c.vertices - (long long)c.edges + (long long)c.faces;
  return c;
}

}  // namespace ebm
