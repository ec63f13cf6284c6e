// Exhaustive map enumeration over small groups and the classification of
// edge-biregular maps with chi = -p.

#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "ebm/atlas.hpp"
#include "ebm/families.hpp"
#include "ebm/group.hpp"
#include "ebm/map.hpp"
#include "ebm/presentation.hpp"

namespace ebm {

// ---------------------------------------------------------------------------
// Admissible types

struct AdmissibleType {
  std::size_t order = 0;
  MapType type;
  /// nu = 2kl / (kl - 2(k + l)) as a reduced fraction; |H| = nu p.
  long long nu_num = 0, nu_den = 1;
  friend bool operator==(const AdmissibleType&, const AdmissibleType&) = default;
};

/// All (n, k, l) with 4 | n, k <= l even, k >= 4, l >= 6, k | n, l | n and
/// n (1/k - 1/2 + 1/l) = -p, for n up to 12p.
inline std::vector<AdmissibleType> admissible_types(long long p) {
  if (!is_prime(p)) throw Error("admissible_types: p must be prime, got " + std::to_string(p));
  std::vector<AdmissibleType> out;
  for (long long n = 4; n <= 12 * p; n += 4)
    for (long long k = 4; k <= n; k += 2) {
      if (n % k != 0) continue;
      for (long long l = std::max<long long>(k, 6); l <= n; l += 2) {
        if (n % l != 0) continue;
        if (n * (k * l - 2 * k - 2 * l) != 2 * p * k * l) continue;
        long long num = 2 * k * l, den = k * l - 2 * (k + l);
        long long g = std::gcd(num, den);
        out.push_back(AdmissibleType{std::size_t(n), MapType{std::size_t(k), std::size_t(l)}, num / g, den / g});
      }
    }
  return out;
}

inline std::vector<std::size_t> admissible_orders(long long p) {
  std::vector<std::size_t> orders;
  for (const auto& a : admissible_types(p)) orders.push_back(a.order);
  std::sort(orders.begin(), orders.end());
  orders.erase(std::unique(orders.begin(), orders.end()), orders.end());
  return orders;
}

// ---------------------------------------------------------------------------
// Enumeration

namespace detail {

/// True iff `gens` generate g; stops as soon as the closure passes |g|/2.
inline bool generates_fast(const FiniteGroup& g, std::span<const Element> gens, std::vector<char>& in,
                           std::vector<Element>& queue) {
  const std::size_t n = g.order();
  std::fill(in.begin(), in.end(), 0);
  queue.clear();
  queue.push_back(g.identity());
  in[g.identity()] = 1;
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (Element s : gens) {
      Element h = g.mul(queue[i], s);
      if (!in[h]) {
        in[h] = 1;
        queue.push_back(h);
        if (2 * queue.size() > n) return true;
      }
    }
  return queue.size() == n;
}

using Quad = std::array<Element, 4>;

struct DedupKey {
  MapType type;
  MapCounts counts;
  bool orientable;
  auto tie() const {
    return std::make_tuple(type.k, type.l, counts.vertices, counts.edges, counts.faces, orientable);
  }
  bool operator<(const DedupKey& o) const { return tie() < o.tie(); }
};

inline DedupKey dedup_key(const EdgeBiregularMap& m) {
  MapType t = type_of(m);
  MapCounts c = counts(m);
  if (t.k > t.l) std::swap(c.vertices, c.faces);
  return DedupKey{t.normalized(), c, is_orientable(m)};
}

/// Keeps the first map of each class in input order.
class ClassCollector {
 public:
  bool add(const EdgeBiregularMap& m) {
    auto& bucket = buckets_[dedup_key(m)];
    for (std::size_t i : bucket)
      if (is_equivalent_up_to_duality_and_twin(reps_[i], m)) return false;
    bucket.push_back(reps_.size());
    reps_.push_back(m);
    return true;
  }
  std::vector<EdgeBiregularMap> take() { return std::move(reps_); }

 private:
  std::map<DedupKey, std::vector<std::size_t>> buckets_;
  std::vector<EdgeBiregularMap> reps_;
};

inline Quad quad_of(const EdgeBiregularMap& m) { return Quad{m.x(), m.y(), m.s(), m.t()}; }

}  // namespace detail

/// One map per class under isomorphism, duality and twinning, each given by
/// the lexicographically least quadruple (x, y, s, t) of its class. The
/// result does not depend on `jobs`.
///
/// The least quadruple of a class is no larger than its dual, twin and
/// dual-twin images, which forces x < y, s, t; only such quadruples are visited.
inline std::vector<EdgeBiregularMap> enumerate_maps(const GroupPtr& group, std::optional<long long> want_chi = {},
                                                    std::size_t jobs = 1) {
  const FiniteGroup& g = *group;
  const std::size_t n = g.order();
  const std::vector<Element> invs = g.involutions();
  std::vector<std::vector<Element>> partners(n);
  for (Element a : invs)
    for (Element b : invs)
      if (a != b && g.commute(a, b)) partners[a].push_back(b);

  auto chi_ok = [&](std::size_t k, std::size_t l) {
    if (n % k != 0 || n % l != 0) return false;
    if (!want_chi) return true;
    // n (1/k - 1/2 + 1/l) = chi  <=>  n (2l - kl + 2k) = 2 chi k l
    long long kk = (long long)k, ll = (long long)l;
    return (long long)n * (2 * ll - kk * ll + 2 * kk) == 2 * *want_chi * kk * ll;
  };

  jobs = std::max<std::size_t>(1, std::min(jobs, std::max<std::size_t>(1, invs.size())));
  std::vector<std::vector<EdgeBiregularMap>> shard_out(jobs);
  auto work = [&](std::size_t shard) {
    detail::ClassCollector collector;
    std::vector<char> in(n);
    std::vector<Element> queue;
    queue.reserve(n);
    for (std::size_t xi = shard; xi < invs.size(); xi += jobs) {
      const Element x = invs[xi];
      for (Element y : partners[x]) {
        if (y < x) continue;
        for (Element s : invs) {
          if (s <= x || s == y) continue;
          const std::size_t l = 2 * g.element_order(g.mul(s, x));
          for (Element t : partners[s]) {
            if (t <= x || t == y) continue;
            const std::size_t k = 2 * g.element_order(g.mul(t, y));
            if (!chi_ok(k, l)) continue;
            const Element quad[4] = {x, y, s, t};
            if (!detail::generates_fast(g, quad, in, queue)) continue;
            collector.add(new_map(MarkedGroup{group, {x, y, s, t}}));
          }
        }
      }
    }
    shard_out[shard] = collector.take();
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (std::size_t i = 0; i < jobs; ++i) threads.emplace_back(work, i);
    for (auto& th : threads) th.join();
  }

  std::vector<EdgeBiregularMap> all;
  for (auto& v : shard_out)
    for (auto& m : v) all.push_back(std::move(m));
  std::sort(all.begin(), all.end(),
            [](const EdgeBiregularMap& a, const EdgeBiregularMap& b) { return detail::quad_of(a) < detail::quad_of(b); });
  detail::ClassCollector merged;
  for (const auto& m : all) merged.add(m);
  return merged.take();
}

// ---------------------------------------------------------------------------
// Presentations read off a finite group

/// Presentation of the carrier on generators x, y, s, t: the four involution
/// relators plus, for each Cayley-graph edge outside a breadth-first spanning
/// tree, the closed walk through it.
inline Presentation spanning_tree_presentation(const EdgeBiregularMap& m) {
  const FiniteGroup& g = m.group();
  const std::size_t n = g.order();
  std::vector<Word> path(n);
  std::vector<Element> parent(n, kNoElement);
  std::vector<int> via(n, -1);
  std::vector<Element> order{g.identity()};
  parent[g.identity()] = g.identity();
  for (std::size_t q = 0; q < order.size(); ++q)
    for (int gi = 0; gi < 4; ++gi) {
      Element h = g.mul(order[q], m.marks()[std::size_t(gi)]);
      if (parent[h] == kNoElement) {
        parent[h] = order[q];
        via[h] = gi;
        path[h] = path[order[q]];
        path[h].push_back(gi);
        order.push_back(h);
      }
    }
  static const char* names[4] = {"x", "y", "s", "t"};
  Presentation p;
  p.generator_names = {"x", "y", "s", "t"};
  for (int gi = 0; gi < 4; ++gi) {
    p.relators.push_back(Word{gi, gi});
    p.relator_text.push_back(std::string(names[gi]) + "^2");
  }
  for (Element e : order)
    for (int gi = 0; gi < 4; ++gi) {
      const Element f = g.mul(e, m.marks()[std::size_t(gi)]);
      if (f < e) continue;
      if ((parent[f] == e && via[f] == gi) || (parent[e] == f && via[e] == gi)) continue;
      Word w = path[e];
      w.push_back(gi);
      w.insert(w.end(), path[f].rbegin(), path[f].rend());
      // Free reduction; every generator is an involution.
      Word r;
      for (int c : w) {
        if (!r.empty() && r.back() == c) r.pop_back();
        else r.push_back(c);
      }
      if (r.empty()) continue;
      std::string text;
      for (std::size_t i = 0; i < r.size(); ++i) text += (i ? " " : "") + std::string(names[r[i]]);
      p.relators.push_back(std::move(r));
      p.relator_text.push_back(std::move(text));
    }
  return p;
}

// ---------------------------------------------------------------------------
// Classification

enum class Profile { Exhaustive, Constructive };

struct CatalogEntry {
  EdgeBiregularMap map;
  MapInvariants invariants;
  std::optional<std::string> family;
  Presentation presentation;
  /// Generator names of `presentation` giving (x, y, s, t) of `map`.
  std::array<std::string, 4> marks{"x", "y", "s", "t"};
};

namespace detail {

/// Dualizes if needed so that k <= l; marks follow.
inline CatalogEntry make_entry(const EdgeBiregularMap& m, std::optional<std::string> family, Presentation pres) {
  CatalogEntry e{m, {}, std::move(family), std::move(pres), {"x", "y", "s", "t"}};
  MapType t = type_of(m);
  if (t.k > t.l) {
    e.map = dual(m);
    e.marks = {"y", "x", "t", "s"};
  }
  e.invariants = invariants(e.map);
  return e;
}

inline void sort_catalog(std::vector<CatalogEntry>& c) {
  std::stable_sort(c.begin(), c.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
    return std::tie(a.invariants.group_order, a.invariants.type.k, a.invariants.type.l) <
           std::tie(b.invariants.group_order, b.invariants.type.k, b.invariants.type.l);
  });
}

}  // namespace detail

/// The classified maps for chi = -p, one per class under duality and twinning,
/// normalized to k <= l and sorted by (|H|, k, l).
inline std::vector<CatalogEntry> constructive_catalog(long long p, std::size_t max_cosets = kDefaultMaxCosets) {
  std::vector<Construction> cons = p == 2 ? chi_minus_2_catalog(max_cosets) : odd_prime_constructions(p, max_cosets);
  std::vector<CatalogEntry> out;
  for (const auto& c : cons) {
    bool dup = false;
    for (const auto& e : out)
      if (is_equivalent_up_to_duality_and_twin(e.map, c.map)) {
        dup = true;
        break;
      }
    if (!dup) out.push_back(detail::make_entry(c.map, c.label, c.presentation));
  }
  detail::sort_catalog(out);
  return out;
}

/// Every map with chi = -p over all groups of the admissible orders. Throws
/// UnsupportedOrder when an admissible order has no atlas.
inline std::vector<EdgeBiregularMap> exhaustive_maps(long long p, std::size_t jobs = 1) {
  const auto orders = admissible_orders(p);
  for (std::size_t n : orders)
    if (!atlas_supports(n)) throw UnsupportedOrder(n);
  std::vector<EdgeBiregularMap> out;
  for (std::size_t n : orders)
    for (const auto& entry : atlas(n))
      for (auto& m : enumerate_maps(entry.group, -p, jobs)) out.push_back(std::move(m));
  return out;
}

/// Exhaustive maps that match a constructive entry take over its label,
/// presentation and marks, so both profiles print identically when they agree.
/// Unmatched maps carry no family and a presentation read off their group.
inline std::vector<CatalogEntry> classify(long long p, Profile profile, std::size_t jobs = 1,
                                          std::size_t max_cosets = kDefaultMaxCosets) {
  if (!is_prime(p)) throw Error("classify: p must be prime, got " + std::to_string(p));
  if (profile == Profile::Constructive) return constructive_catalog(p, max_cosets);
  const auto found = exhaustive_maps(p, jobs);
  const auto reference = constructive_catalog(p, max_cosets);
  std::vector<std::pair<std::size_t, CatalogEntry>> keyed;
  for (const auto& m : found) {
    std::size_t match = reference.size();
    for (std::size_t i = 0; i < reference.size(); ++i)
      if (is_equivalent_up_to_duality_and_twin(reference[i].map, m)) {
        match = i;
        break;
      }
    if (match < reference.size())
      keyed.emplace_back(match, reference[match]);
    else
      keyed.emplace_back(match, detail::make_entry(m, std::nullopt, spanning_tree_presentation(m)));
  }
  std::stable_sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    const auto& x = a.second.invariants;
    const auto& y = b.second.invariants;
    return std::tie(x.group_order, x.type.k, x.type.l, a.first) < std::tie(y.group_order, y.type.k, y.type.l, b.first);
  });
  std::vector<CatalogEntry> out;
  for (auto& [i, e] : keyed) out.push_back(std::move(e));
  return out;
}

/// True iff the two catalogs list the same classes with the same multiplicity.
inline bool catalogs_agree(const std::vector<CatalogEntry>& a, const std::vector<CatalogEntry>& b) {
  if (a.size() != b.size()) return false;
  std::vector<char> used(b.size(), 0);
  for (const auto& e : a) {
    bool hit = false;
    for (std::size_t i = 0; i < b.size() && !hit; ++i)
      if (!used[i] && is_equivalent_up_to_duality_and_twin(e.map, b[i].map)) used[i] = hit = true;
    if (!hit) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Verification reports

struct GroupCount {
  std::string group;
  std::size_t order = 0;
  std::size_t maps = 0;
  bool flagged = false;
};

struct SearchReport {
  std::vector<GroupCount> groups;
  std::vector<std::string> unsupported;
  bool pass = true;
};

/// chi = -1 over every group of order 8 and 12: maps may occur only in the
/// dihedral groups of those orders.
inline SearchReport verify_no_maps_chi_minus_1(std::size_t jobs = 1) {
  SearchReport r;
  const auto d8 = dihedral(8), d12 = dihedral(12);
  for (std::size_t n : {8u, 12u})
    for (const auto& e : atlas(n)) {
      GroupCount c{e.name, n, enumerate_maps(e.group, -1, jobs).size(), false};
      const bool dihedral_group =
          are_isomorphic_groups(*e.group, d8.g()) || are_isomorphic_groups(*e.group, d12.g());
      c.flagged = c.maps > 0 && !dihedral_group;
      r.pass = r.pass && !c.flagged;
      r.groups.push_back(c);
    }
  return r;
}

/// Admissible orders divisible by p at chi = -p. For p >= 5 no group may
/// carry a map; for p = 3 the only map is H3.
inline SearchReport verify_p_divides_exclusions(long long p, std::size_t jobs = 1) {
  if (p < 3 || !is_prime(p)) throw Error("exclusions: p must be an odd prime");
  SearchReport r;
  std::vector<EdgeBiregularMap> maps;
  for (std::size_t n : admissible_orders(p)) {
    if (n % std::size_t(p) != 0) continue;
    if (!atlas_supports(n)) {
      r.unsupported.push_back(std::to_string(n));
      continue;
    }
    for (const auto& e : atlas(n)) {
      auto found = enumerate_maps(e.group, -p, jobs);
      GroupCount c{e.name, n, found.size(), p >= 5 && !found.empty()};
      r.pass = r.pass && !c.flagged;
      r.groups.push_back(c);
      maps.insert(maps.end(), found.begin(), found.end());
    }
  }
  if (p == 3) {
    const auto h3 = map_H3();
    r.pass = maps.size() == 1 && is_equivalent_up_to_duality_and_twin(maps[0], h3.map);
    for (auto& c : r.groups) c.flagged = c.maps > 0 && !(c.order == 36 && r.pass);
  }
  return r;
}

// ---------------------------------------------------------------------------
// C_p x| D_nu probe

/// Homomorphism D_nu -> Aut(C_p), given by whether each marked reflection
/// of dihedral(nu) inverts C_p.
struct DihedralAction {
  bool a_inverts = false;
  bool b_inverts = false;
  std::string label() const {
    if (!a_inverts && !b_inverts) return "trivial";
    if (a_inverts && b_inverts) return "rotations-kernel";
    return a_inverts ? "b-fixed" : "a-fixed";
  }
};

/// Actions compatible with the relation (ab)^(nu/2) = 1.
inline std::vector<DihedralAction> dihedral_actions(std::size_t nu) {
  std::vector<DihedralAction> out{{false, false}, {true, true}};
  if ((nu / 2) % 2 == 0) {
    out.push_back({false, true});
    out.push_back({true, false});
  }
  return out;
}

inline GroupPtr cp_dihedral(std::size_t p, std::size_t nu, const DihedralAction& act) {
  const MarkedGroup d = dihedral(nu);
  Perm inv(p);
  for (std::size_t i = 0; i < p; ++i) inv[i] = Element((p - i) % p);
  const Perm id = identity_perm(p);
  return share(semidirect(cyclic(p), d.g(),
                          action_from_generators(cyclic(p), d, {act.a_inverts ? inv : id, act.b_inverts ? inv : id})));
}

struct ProbeCase {
  std::size_t p = 0, nu = 0;
  std::string action;
  std::size_t classes = 0;
  /// Maps (counting dual and twin variants separately) to which the
  /// constraint applies: face length 2 lambda with lambda >= 3 and p
  /// dividing neither kappa nor lambda.
  std::size_t checked = 0;
  std::size_t counterexamples = 0;
  std::vector<std::string> types;
};

/// Checks one variant: returns nullopt if the constraint does not apply.
inline std::optional<bool> cp_dihedral_conforms(const EdgeBiregularMap& m, std::size_t p, std::size_t nu) {
  const MapType t = type_of(m);
  const long long kappa = (long long)t.k / 2, lambda = (long long)t.l / 2;
  const long long pp = (long long)p;
  if (lambda < 3 || kappa % pp == 0 || lambda % pp == 0) return std::nullopt;
  const long long chi = euler_characteristic(m);
  bool ok = (long long)nu == 2 * lambda && nu % 8 == 4;
  if (kappa == 2)
    ok = ok && 2 * chi == pp * (2 - lambda);
  else if (kappa == lambda)
    ok = ok && chi == pp * (2 - lambda);
  else
    ok = false;
  return ok;
}

inline ProbeCase cpd_semidirect_probe(std::size_t p, std::size_t nu, const DihedralAction& act, std::size_t jobs = 1) {
  ProbeCase c{p, nu, act.label(), 0, 0, 0, {}};
  const auto maps = enumerate_maps(cp_dihedral(p, nu, act), std::nullopt, jobs);
  c.classes = maps.size();
  for (const auto& m : maps) {
    MapType t = type_of(m);
    c.types.push_back("(" + std::to_string(t.k) + "," + std::to_string(t.l) + ")");
    for (const auto& v : {m, dual(m), twin(m), dual(twin(m))}) {
      auto r = cp_dihedral_conforms(v, p, nu);
      if (!r) continue;
      ++c.checked;
      if (!*r) ++c.counterexamples;
    }
  }
  return c;
}

struct ProbeReport {
  std::vector<ProbeCase> cases;
  std::size_t checked = 0, counterexamples = 0;
  bool pass() const { return counterexamples == 0; }
};

inline const std::vector<std::pair<std::size_t, std::size_t>>& default_probe_grid() {
  static const std::vector<std::pair<std::size_t, std::size_t>> g{{3, 5}, {5, 3}, {7, 3}, {7, 5}};
  return g;
}

/// For each (p, lambda) probes nu in {2 lambda, 4 lambda, 8 lambda} under every
/// action. With lambda odd, D_{2 lambda} has no Klein four-subgroup, so the
/// larger nu are where maps of face length 2 nu / 2 actually occur.
inline ProbeReport cp_dihedral_probe(const std::vector<std::pair<std::size_t, std::size_t>>& grid,
                                     std::size_t jobs = 1) {
  ProbeReport r;
  for (const auto& [p, lambda] : grid)
    for (std::size_t nu : {2 * lambda, 4 * lambda, 8 * lambda})
      for (const auto& act : dihedral_actions(nu)) {
        r.cases.push_back(cpd_semidirect_probe(p, nu, act, jobs));
        r.checked += r.cases.back().checked;
        r.counterexamples += r.cases.back().counterexamples;
      }
  return r;
}

}  // namespace ebm
