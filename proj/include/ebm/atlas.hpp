// Complete lists of groups of small order, built from constructor recipes.
//
// Core orders: 4, 8, 12, 16, 20, 24, 36. Extended orders 40, 56, 60, 84, 88,
// 132 are generated as all C_q x| K (q the largest prime factor, |K| = n/q)
// deduplicated up to isomorphism, plus the groups whose Sylow q-subgroup is
// not normal (A_5 at 60, AGL(1, 8) at 56). Every list is checked for pairwise
// non-isomorphism by the tests.

#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "ebm/group.hpp"

namespace ebm {

class UnsupportedOrder : public Error {
 public:
  explicit UnsupportedOrder(std::size_t order)
      : Error("no group atlas for order " + std::to_string(order)), order_(order) {}
  std::size_t order() const { return order_; }

 private:
  std::size_t order_;
};

struct AtlasEntry {
  std::string name;
  GroupPtr group;
};

inline const std::vector<std::size_t>& atlas_core_orders() {
  static const std::vector<std::size_t> v{4, 8, 12, 16, 20, 24, 36};
  return v;
}

inline const std::vector<std::size_t>& atlas_extended_orders() {
  static const std::vector<std::size_t> v{40, 56, 60, 84, 88, 132};
  return v;
}

/// Number of isomorphism classes of groups of each supported order.
inline std::size_t atlas_expected_count(std::size_t order) {
  static const std::map<std::size_t, std::size_t> counts{{4, 2},   {8, 5},   {12, 5},  {16, 14}, {20, 5},
                                                         {24, 15}, {36, 14}, {40, 14}, {56, 13}, {60, 13},
                                                         {84, 15}, {88, 12}, {132, 10}};
  auto it = counts.find(order);
  if (it == counts.end()) throw UnsupportedOrder(order);
  return it->second;
}

namespace atlas_detail {

inline GroupPtr C(std::size_t n) { return share(cyclic(n)); }
inline GroupPtr D(std::size_t n) { return dihedral(n).group; }
inline GroupPtr M(std::size_t m, std::size_t n, std::size_t r, std::size_t k) { return metacyclic(m, n, r, k).group; }
inline GroupPtr X(const GroupPtr& a, const GroupPtr& b) { return share(direct_product(*a, *b)); }
inline GroupPtr X(const GroupPtr& a, const GroupPtr& b, const GroupPtr& c) { return X(X(a, b), c); }

inline MarkedGroup cyclic_marked(std::size_t n) { return MarkedGroup{C(n), {Element(1 % n)}}; }

/// A x| B where B's marked generators act by the given automorphisms of A.
inline GroupPtr SD(const GroupPtr& a, const MarkedGroup& b, const std::vector<Perm>& gen_autos) {
  return share(semidirect(*a, b.g(), action_from_generators(*a, b, gen_autos)));
}

/// Element (i, j) of C_m x C_n (direct_product encoding).
inline Element pair(std::size_t i, std::size_t j, std::size_t n) { return Element(i * n + j); }

/// Automorphism of C_m x C_n given by images of (1, 0) and (0, 1).
inline Perm abelian2_auto(std::size_t m, std::size_t n, Element img_a, Element img_b) {
  MarkedGroup g{X(C(m), C(n)), {pair(1, 0, n), pair(0, 1, n)}};
  return automorphism_from_images(g, std::vector<Element>{img_a, img_b});
}

/// x -> x^e on C_n.
inline Perm power_auto(std::size_t n, std::size_t e) {
  Perm p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = Element(i * e % n);
  return p;
}

/// V_4 x| C_3 = A_4 (C_3 cycles the three involutions).
inline GroupPtr A4() {
  // Involutions of C_2 x C_2 are 1, 2, 3.
  return SD(X(C(2), C(2)), cyclic_marked(3), {Perm{0, 2, 3, 1}});
}

inline GroupPtr S4() { return share(symmetric(4)); }

inline GroupPtr Q8() { return M(4, 2, 2, 3); }

inline GroupPtr SL23() {
  MarkedGroup q8 = metacyclic(4, 2, 2, 3);
  const FiniteGroup& g = q8.g();
  const Element i = q8.marked[0], j = q8.marked[1];
  Perm phi = automorphism_from_images(q8, std::vector<Element>{j, g.mul(i, j)});
  return SD(q8.group, cyclic_marked(3), {phi});
}

/// Marked group of order 60 isomorphic to A_5.
inline GroupPtr A5() {
  return from_permutations({Perm{1, 2, 0, 3, 4}, Perm{0, 1, 3, 4, 2}, Perm{1, 2, 3, 4, 0}}).marked.group;
}

/// AGL(1, 8) = C_2^3 x| C_7, the Frobenius group of order 56.
inline GroupPtr AGL18() {
  // GF(8) = GF(2)[a]/(a^3 + a + 1); multiplication by a on bit vectors.
  auto times_a = [](Element v) {
    Element r = Element(v << 1);
    if (r & 8) r ^= 0b1011;
    return r;
  };
  Perm mult(8);
  for (Element v = 0; v < 8; ++v) mult[v] = times_a(v);
  return SD(X(C(2), C(2), C(2)), cyclic_marked(7), {mult});
}

inline std::vector<AtlasEntry> core(std::size_t n) {
  switch (n) {
    case 4:
      return {{"C4", C(4)}, {"V4", D(4)}};
    case 8:
      return {{"C8", C(8)}, {"C4xC2", X(C(4), C(2))}, {"C2^3", X(C(2), C(2), C(2))}, {"D8", D(8)}, {"Q8", Q8()}};
    case 12:
      return {{"C12", C(12)}, {"C6xC2", X(C(6), C(2))}, {"D12", D(12)}, {"A4", A4()}, {"Dic12", M(6, 2, 3, 5)}};
    case 16: {
      // C_4 x C_2 with a = (1, 0), b = (0, 1).
      const Element a = pair(1, 0, 2), b = pair(0, 1, 2);
      const GroupPtr c4c2 = X(C(4), C(2));
      const Element ab = c4c2->mul(a, b), a2b = c4c2->mul(c4c2->mul(a, a), b);
      return {{"C16", C(16)},
              {"C4xC4", X(C(4), C(4))},
              {"C4:C4", M(4, 4, 0, 3)},
              {"C8xC2", X(C(8), C(2))},
              {"M16", M(8, 2, 0, 5)},
              {"D16", D(16)},
              {"SD16", M(8, 2, 0, 3)},
              {"Q16", M(8, 2, 4, 7)},
              {"(C4xC2):C2", SD(c4c2, cyclic_marked(2), {abelian2_auto(4, 2, ab, b)})},
              {"C4oD8", SD(c4c2, cyclic_marked(2), {abelian2_auto(4, 2, a, a2b)})},
              {"C4xC2xC2", X(C(4), C(2), C(2))},
              {"D8xC2", X(D(8), C(2))},
              {"Q8xC2", X(Q8(), C(2))},
              {"C2^4", X(X(C(2), C(2)), X(C(2), C(2)))}};
    }
    case 20:
      return {{"C20", C(20)},
              {"C10xC2", X(C(10), C(2))},
              {"D20", D(20)},
              {"Dic20", M(10, 2, 5, 9)},
              {"F20", M(5, 4, 0, 2)}};
    case 24: {
      // D_8 marked (a, b): a acts trivially, b inverts, so the kernel is <r^2, a>.
      const GroupPtr c3 = C(3);
      return {{"C3:C8", M(3, 8, 0, 2)},
              {"C24", C(24)},
              {"SL(2,3)", SL23()},
              {"Dic24", M(12, 2, 6, 11)},
              {"C4xS3", X(C(4), D(6))},
              {"D24", D(24)},
              {"C2xDic12", X(C(2), M(6, 2, 3, 5))},
              {"C3:D8", SD(c3, dihedral(8), {identity_perm(3), power_auto(3, 2)})},
              {"C12xC2", X(C(12), C(2))},
              {"C3xD8", X(C(3), D(8))},
              {"C3xQ8", X(C(3), Q8())},
              {"S4", S4()},
              {"C2xA4", X(C(2), A4())},
              {"S3xV4", X(D(6), D(4))},
              {"C6xC2xC2", X(C(6), C(2), C(2))}};
    }
    case 36: {
      const GroupPtr c3c3 = X(C(3), C(3));
      const Element b = pair(0, 1, 3), a_inv = pair(2, 0, 3), b_inv = pair(0, 2, 3);
      const Perm invert = abelian2_auto(3, 3, a_inv, b_inv);
      const Perm rotate = abelian2_auto(3, 3, b, a_inv);
      return {{"Dic36", M(18, 2, 9, 17)},
              {"C36", C(36)},
              {"V4:C9", SD(X(C(2), C(2)), cyclic_marked(9), {Perm{0, 2, 3, 1}})},
              {"D36", D(36)},
              {"C18xC2", X(C(18), C(2))},
              {"C3xDic12", X(C(3), M(6, 2, 3, 5))},
              {"(C3xC3):C4", SD(c3c3, cyclic_marked(4), {invert})},
              {"C12xC3", X(C(12), C(3))},
              {"(C3xC3):C4'", SD(c3c3, cyclic_marked(4), {rotate})},
              {"S3xS3", X(D(6), D(6))},
              {"C3xA4", X(C(3), A4())},
              {"C6xS3", X(C(6), D(6))},
              {"C2x((C3xC3):C2)", X(C(2), SD(c3c3, cyclic_marked(2), {invert}))},
              {"C6xC6", X(C(6), C(6))}};
    }
    default:
      throw UnsupportedOrder(n);
  }
}

/// All C_q x| K for K in `complements`, over every homomorphism K -> Aut(C_q),
/// keeping one group per isomorphism class.
inline std::vector<AtlasEntry> cyclic_extensions(std::size_t q, const std::vector<AtlasEntry>& complements) {
  std::vector<AtlasEntry> out;
  const GroupPtr cq = C(q);
  // Aut(C_q) for prime q: x -> x^e, e in 1..q-1.
  for (const auto& k : complements) {
    const MarkedGroup km{k.group, greedy_generating_set(*k.group)};
    const std::size_t gens = km.marked.size();
    std::vector<std::size_t> exps(gens, 1);
    for (;;) {
      std::vector<Perm> autos;
      for (std::size_t e : exps) autos.push_back(power_auto(q, e));
      try {
        GroupPtr g = SD(cq, km, autos);
        bool seen = false;
        for (const auto& e : out)
          if (are_isomorphic_groups(*e.group, *g)) {
            seen = true;
            break;
          }
        if (!seen) {
          std::string name = "C" + std::to_string(q) + ":" + k.name + "[";
          for (std::size_t i = 0; i < gens; ++i) name += (i ? "," : "") + std::to_string(exps[i]);
          out.push_back({name + "]", g});
        }
      } catch (const Error&) {
        // Not a homomorphism K -> Aut(C_q).
      }
      std::size_t i = 0;
      while (i < gens && ++exps[i] == q) exps[i++] = 1;
      if (i == gens) break;
    }
  }
  return out;
}

inline std::vector<AtlasEntry> extended(std::size_t n) {
  std::vector<AtlasEntry> out;
  switch (n) {
    case 40: out = cyclic_extensions(5, core(8)); break;
    case 56:
      out = cyclic_extensions(7, core(8));
      out.push_back({"AGL(1,8)", AGL18()});
      break;
    case 60:
      out = cyclic_extensions(5, core(12));
      out.push_back({"A5", A5()});
      break;
    case 84: out = cyclic_extensions(7, core(12)); break;
    case 88: out = cyclic_extensions(11, core(8)); break;
    case 132: out = cyclic_extensions(11, core(12)); break;
    default: throw UnsupportedOrder(n);
  }
  return out;
}

}  // namespace atlas_detail

inline bool atlas_supports(std::size_t order) {
  for (auto v : {atlas_core_orders(), atlas_extended_orders()})
    for (std::size_t o : v)
      if (o == order) return true;
  return false;
}

/// Pairwise non-isomorphic groups of the given order, in a fixed order.
/// Lists are built once and cached; safe to call from several threads.
inline const std::vector<AtlasEntry>& atlas(std::size_t order) {
  static std::mutex mu;
  static std::map<std::size_t, std::vector<AtlasEntry>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(order);
  if (it != cache.end()) return it->second;
  if (!atlas_supports(order)) throw UnsupportedOrder(order);
  std::vector<AtlasEntry> groups;
  bool is_core = false;
  for (std::size_t o : atlas_core_orders()) is_core |= o == order;
  groups = is_core ? atlas_detail::core(order) : atlas_detail::extended(order);
  return cache.emplace(order, std::move(groups)).first->second;
}

}  // namespace ebm
