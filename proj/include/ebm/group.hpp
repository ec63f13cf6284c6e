// Finite groups as explicit multiplication tables.
//
// Every group here is small (a few hundred elements at most), so elements are
// dense indices into an n x n table and every property is checked exactly.
//
// Naming convention: dihedral(n) is the dihedral group OF ORDER n (so D_4 is
// the Klein four-group and D_8 is the symmetry group of a square).

#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ebm {

/// Index of an element inside one specific FiniteGroup.
using Element = std::uint32_t;

/// A permutation of {0, ..., n-1} stored as its image list.
using Perm = std::vector<Element>;

inline constexpr Element kNoElement = std::numeric_limits<Element>::max();

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FiniteGroup {
 public:
  /// Validates that `table` (row-major, order x order) is a Latin square with a
  /// two-sided identity, then derives inverses and element orders.
  /// Associativity is not checked here; see is_associative().
  static FiniteGroup from_table(std::size_t order, std::vector<Element> table) {
    if (order == 0) throw Error("group order must be positive");
    if (table.size() != order * order)
      throw Error("multiplication table has " + std::to_string(table.size()) +
                  " entries, expected " + std::to_string(order * order));
    FiniteGroup g;
    g.n_ = order;
    g.mul_ = std::move(table);

    std::vector<char> seen(order);
    for (std::size_t a = 0; a < order; ++a) {
      std::fill(seen.begin(), seen.end(), 0);
      for (std::size_t b = 0; b < order; ++b) {
        Element c = g.mul_[a * order + b];
        if (c >= order || seen[c]) throw Error("multiplication table row is not a permutation");
        seen[c] = 1;
      }
    }
    for (std::size_t b = 0; b < order; ++b) {
      std::fill(seen.begin(), seen.end(), 0);
      for (std::size_t a = 0; a < order; ++a) {
        Element c = g.mul_[a * order + b];
        if (seen[c]) throw Error("multiplication table column is not a permutation");
        seen[c] = 1;
      }
    }

    g.id_ = kNoElement;
    for (Element e = 0; e < order && g.id_ == kNoElement; ++e) {
      bool ok = true;
      for (Element a = 0; a < order && ok; ++a)
        ok = g.mul(e, a) == a && g.mul(a, e) == a;
      if (ok) g.id_ = e;
    }
    if (g.id_ == kNoElement) throw Error("multiplication table has no identity");

    g.inv_.assign(order, kNoElement);
    for (Element a = 0; a < order; ++a) {
      for (Element b = 0; b < order; ++b) {
        if (g.mul(a, b) == g.id_) {
          if (g.mul(b, a) != g.id_) throw Error("left and right inverses differ");
          g.inv_[a] = b;
          break;
        }
      }
    }

    g.ord_.assign(order, 0);
    for (Element a = 0; a < order; ++a) {
      std::uint32_t m = 1;
      Element p = a;
      while (p != g.id_) {
        p = g.mul(p, a);
        ++m;
        if (m > order) throw Error("element has no finite order; table is not a group");
      }
      g.ord_[a] = m;
    }
    return g;
  }

  std::size_t order() const { return n_; }
  Element identity() const { return id_; }
  Element mul(Element a, Element b) const { return mul_[std::size_t(a) * n_ + b]; }
  Element inv(Element a) const { return inv_[a]; }
  std::uint32_t element_order(Element a) const { return ord_[a]; }

  Element pow(Element a, long long e) const {
    long long m = ord_[a];
    e %= m;
    if (e < 0) e += m;
    Element r = id_;
    for (long long i = 0; i < e; ++i) r = mul(r, a);
    return r;
  }

  /// Product of a sequence of elements, left to right.
  Element product(std::initializer_list<Element> xs) const {
    Element r = id_;
    for (Element x : xs) r = mul(r, x);
    return r;
  }

  bool is_involution(Element a) const { return ord_[a] == 2; }

  std::vector<Element> involutions() const {
    std::vector<Element> out;
    for (Element a = 0; a < n_; ++a)
      if (ord_[a] == 2) out.push_back(a);
    return out;
  }

  bool commute(Element a, Element b) const { return mul(a, b) == mul(b, a); }

  bool is_abelian() const {
    for (Element a = 0; a < n_; ++a)
      for (Element b = a + 1; b < n_; ++b)
        if (!commute(a, b)) return false;
    return true;
  }

  /// counts[m] = number of elements of order m (index 0 unused).
  std::vector<std::size_t> order_statistics() const {
    std::vector<std::size_t> counts(n_ + 1, 0);
    for (auto m : ord_) ++counts[m];
    return counts;
  }

  bool is_associative() const {
    for (Element a = 0; a < n_; ++a)
      for (Element b = 0; b < n_; ++b) {
        Element ab = mul(a, b);
        for (Element c = 0; c < n_; ++c)
          if (mul(ab, c) != mul(a, mul(b, c))) return false;
      }
    return true;
  }

  bool is_associative_sampled(std::size_t samples, std::uint64_t seed) const {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Element> pick(0, Element(n_ - 1));
    for (std::size_t i = 0; i < samples; ++i) {
      Element a = pick(rng), b = pick(rng), c = pick(rng);
      if (mul(mul(a, b), c) != mul(a, mul(b, c))) return false;
    }
    return true;
  }

  /// Exhaustive below 100 elements, 10^5 random triples above.
  bool passes_associativity_check() const {
    return n_ <= 100 ? is_associative() : is_associative_sampled(100000, 0x5eed);
  }

  const std::vector<Element>& table() const { return mul_; }

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.n_ == b.n_ && a.mul_ == b.mul_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Element> mul_;
  Element id_ = 0;
  std::vector<Element> inv_;
  std::vector<std::uint32_t> ord_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

inline GroupPtr share(FiniteGroup g) { return std::make_shared<const FiniteGroup>(std::move(g)); }

/// A group together with an ordered list of distinguished elements, e.g. the
/// canonical generators (x, y, s, t) of a map or (r0, r1, r2) of a regular map.
/// Whether `marked` generates `group` is checked by the consumers that need it.
struct MarkedGroup {
  GroupPtr group;
  std::vector<Element> marked;

  const FiniteGroup& g() const { return *group; }
};

/// Smallest subgroup containing `gens`, as a sorted list of element indices.
inline std::vector<Element> subgroup_closure(const FiniteGroup& g, std::span<const Element> gens) {
  std::vector<char> in(g.order(), 0);
  std::vector<Element> queue{g.identity()};
  in[g.identity()] = 1;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (Element s : gens) {
      Element h = g.mul(queue[i], s);
      if (!in[h]) {
        in[h] = 1;
        queue.push_back(h);
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

inline std::size_t closure_size(const FiniteGroup& g, std::span<const Element> gens) {
  return subgroup_closure(g, gens).size();
}

inline bool generates(const FiniteGroup& g, std::span<const Element> gens) {
  return closure_size(g, gens) == g.order();
}

// ---------------------------------------------------------------------------
// Constructors

inline FiniteGroup cyclic(std::size_t n) {
  if (n == 0) throw Error("cyclic group order must be positive");
  std::vector<Element> t(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a * n + b] = Element((a + b) % n);
  return FiniteGroup::from_table(n, std::move(t));
}

/// Dihedral group of order n, marked with two reflections a, b where ab has
/// order n/2. Rotation r^i is index i, reflection r^i a is index n/2 + i, and
/// b = r a.
inline MarkedGroup dihedral(std::size_t n) {
  if (n < 2 || n % 2 != 0)
    throw Error("dihedral group order must be even and at least 2, got " + std::to_string(n));
  const std::size_t h = n / 2;
  std::vector<Element> t(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      std::size_t i = a % h, fa = a / h, j = b % h, fb = b / h;
      std::size_t rot = fa == 0 ? (i + j) % h : (i + h - j) % h;
      t[a * n + b] = Element(rot + h * (fa ^ fb));
    }
  }
  auto g = share(FiniteGroup::from_table(n, std::move(t)));
  return MarkedGroup{g, {Element(h), Element(h + (1 % h))}};
}

/// <a, b | a^m, b^n = a^r, b a b^-1 = a^k>, element a^i b^j at index i + m j.
/// Requires k^n = 1 and r(k - 1) = 0 modulo m.
inline MarkedGroup metacyclic(std::size_t m, std::size_t n, std::size_t r, std::size_t k) {
  if (m == 0 || n == 0) throw Error("metacyclic parameters must be positive");
  r %= m;
  k %= m;
  std::vector<std::size_t> kpow(n + 1, 1 % m);
  for (std::size_t j = 1; j <= n; ++j) kpow[j] = kpow[j - 1] * k % m;
  if (kpow[n] != 1 % m) throw Error("metacyclic: k^n must be 1 mod m");
  if ((r * k) % m != r) throw Error("metacyclic: b^n = a^r must commute with b");
  const std::size_t order = m * n;
  std::vector<Element> t(order * order);
  for (std::size_t x = 0; x < order; ++x) {
    for (std::size_t y = 0; y < order; ++y) {
      std::size_t i = x % m, j = x / m, i2 = y % m, j2 = y / m;
      std::size_t e = (i + kpow[j] * i2) % m;
      std::size_t f = j + j2;
      if (f >= n) {
        f -= n;
        e = (e + r) % m;
      }
      t[x * order + y] = Element(e + m * f);
    }
  }
  auto g = share(FiniteGroup::from_table(order, std::move(t)));
  return MarkedGroup{g, {Element(1 % m), Element(n > 1 ? m : r)}};
}

/// Element (a, b) is encoded as a * |B| + b.
inline FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const std::size_t na = a.order(), nb = b.order(), n = na * nb;
  std::vector<Element> t(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      t[x * n + y] = Element(a.mul(Element(x / nb), Element(y / nb)) * nb +
                             b.mul(Element(x % nb), Element(y % nb)));
  return FiniteGroup::from_table(n, std::move(t));
}

inline bool is_automorphism(const FiniteGroup& g, const Perm& phi) {
  if (phi.size() != g.order()) return false;
  std::vector<char> seen(g.order(), 0);
  for (Element v : phi) {
    if (v >= g.order() || seen[v]) return false;
    seen[v] = 1;
  }
  for (Element a = 0; a < g.order(); ++a)
    for (Element b = 0; b < g.order(); ++b)
      if (phi[g.mul(a, b)] != g.mul(phi[a], phi[b])) return false;
  return true;
}

/// A x| B with (a1, b1)(a2, b2) = (a1 action[b1](a2), b1 b2); element (a, b)
/// is encoded as a * |B| + b, so the trivial action reproduces direct_product.
/// Throws unless every action[b] is an automorphism of A and b -> action[b]
/// is a homomorphism.
inline FiniteGroup semidirect(const FiniteGroup& a, const FiniteGroup& b, const std::vector<Perm>& action) {
  const std::size_t na = a.order(), nb = b.order(), n = na * nb;
  if (action.size() != nb) throw Error("semidirect: action needs one permutation per element of B");
  for (const auto& phi : action)
    if (!is_automorphism(a, phi)) throw Error("semidirect: action element is not an automorphism");
  for (Element b1 = 0; b1 < nb; ++b1)
    for (Element b2 = 0; b2 < nb; ++b2) {
      const Perm& composed = action[b.mul(b1, b2)];
      for (Element x = 0; x < na; ++x)
        if (composed[x] != action[b1][action[b2][x]])
          throw Error("semidirect: action is not a homomorphism B -> Aut(A)");
    }
  std::vector<Element> t(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    Element a1 = Element(x / nb), b1 = Element(x % nb);
    for (std::size_t y = 0; y < n; ++y) {
      Element a2 = Element(y / nb), b2 = Element(y % nb);
      t[x * n + y] = Element(a.mul(a1, action[b1][a2]) * nb + b.mul(b1, b2));
    }
  }
  return FiniteGroup::from_table(n, std::move(t));
}

inline Perm identity_perm(std::size_t n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), Element(0));
  return p;
}

/// Right-action composition: apply p first, then q.
inline Perm compose(const Perm& p, const Perm& q) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = q[p[i]];
  return r;
}

/// Rank of a permutation of {0..n-1} in lexicographic order.
inline Element permutation_rank(const Perm& p) {
  const std::size_t n = p.size();
  std::size_t rank = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t smaller = 0;
    for (std::size_t j = i + 1; j < n; ++j)
      if (p[j] < p[i]) ++smaller;
    std::size_t f = 1;
    for (std::size_t j = 2; j < n - i; ++j) f *= j;
    rank += smaller * f;
  }
  return Element(rank);
}

/// S_n for n <= 5. Element index is the lexicographic rank of the permutation
/// (see permutation_rank); the product pq applies p first.
inline FiniteGroup symmetric(std::size_t n) {
  if (n < 1 || n > 5) throw Error("symmetric(n) supports 1 <= n <= 5, got " + std::to_string(n));
  std::vector<Perm> perms;
  Perm p = identity_perm(n);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  const std::size_t order = perms.size();
  std::vector<Element> t(order * order);
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b) t[a * order + b] = permutation_rank(compose(perms[a], perms[b]));
  return FiniteGroup::from_table(order, std::move(t));
}

/// Permutation group generated by `gens` (all of equal degree), as a table.
/// The identity is element 0; remaining elements follow breadth-first order.
/// The returned marking lists the generators' indices.
struct PermutationGroup {
  MarkedGroup marked;
  std::vector<Perm> elements;
};

inline PermutationGroup from_permutations(const std::vector<Perm>& gens) {
  if (gens.empty()) throw Error("from_permutations needs at least one generator");
  const std::size_t degree = gens.front().size();
  for (const auto& g : gens)
    if (g.size() != degree) throw Error("from_permutations: generators differ in degree");
  std::map<Perm, Element> index;
  std::vector<Perm> elems{identity_perm(degree)};
  index.emplace(elems.front(), 0);
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& g : gens) {
      Perm h = compose(elems[i], g);
      if (index.emplace(h, Element(elems.size())).second) elems.push_back(std::move(h));
    }
  }
  const std::size_t n = elems.size();
  std::vector<Element> t(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a * n + b] = index.at(compose(elems[a], elems[b]));
  PermutationGroup out;
  out.marked.group = share(FiniteGroup::from_table(n, std::move(t)));
  for (const auto& g : gens) out.marked.marked.push_back(index.at(g));
  out.elements = std::move(elems);
  return out;
}

// ---------------------------------------------------------------------------
// Homomorphisms and isomorphism testing

/// Propagates gens[i] -> images[i] along right multiplication from the
/// identity. Returns the induced map on <gens> (kNoElement elsewhere), or
/// nullopt if the assignment is inconsistent, i.e. does not define a
/// homomorphism. With `injective` set, a collision also rejects.
inline std::optional<std::vector<Element>> extend_homomorphism(const FiniteGroup& src, std::span<const Element> gens,
                                                               const FiniteGroup& dst,
                                                               std::span<const Element> images, bool injective) {
  if (gens.size() != images.size()) throw Error("generator and image lists differ in length");
  std::vector<Element> phi(src.order(), kNoElement);
  std::vector<char> hit(injective ? dst.order() : 0, 0);
  phi[src.identity()] = dst.identity();
  if (injective) hit[dst.identity()] = 1;
  std::vector<Element> queue{src.identity()};
  for (std::size_t q = 0; q < queue.size(); ++q) {
    Element h = queue[q];
    for (std::size_t i = 0; i < gens.size(); ++i) {
      Element hg = src.mul(h, gens[i]);
      Element img = dst.mul(phi[h], images[i]);
      if (phi[hg] == kNoElement) {
        if (injective) {
          if (hit[img]) return std::nullopt;
          hit[img] = 1;
        }
        phi[hg] = img;
        queue.push_back(hg);
      } else if (phi[hg] != img) {
        return std::nullopt;
      }
    }
  }
  return phi;
}

/// True iff src.marked[i] -> dst.marked[i] extends to a group isomorphism.
inline bool extends_to_isomorphism(const MarkedGroup& src, const MarkedGroup& dst) {
  if (src.marked.size() != dst.marked.size())
    throw Error("extends_to_isomorphism: marked sequences differ in length");
  if (src.g().order() != dst.g().order()) return false;
  for (std::size_t i = 0; i < src.marked.size(); ++i)
    if (src.g().element_order(src.marked[i]) != dst.g().element_order(dst.marked[i])) return false;
  auto phi = extend_homomorphism(src.g(), src.marked, dst.g(), dst.marked, true);
  if (!phi) return false;
  if (std::find(phi->begin(), phi->end(), kNoElement) != phi->end())
    throw Error("extends_to_isomorphism: source marking does not generate its group");
  return true;
}

/// The automorphism of `g` sending g.marked[i] to images[i]; throws if there is none.
inline Perm automorphism_from_images(const MarkedGroup& g, std::span<const Element> images) {
  auto phi = extend_homomorphism(g.g(), g.marked, g.g(), images, true);
  if (!phi || std::find(phi->begin(), phi->end(), kNoElement) != phi->end())
    throw Error("generator images do not define an automorphism");
  return *phi;
}

/// Action table of B on A from automorphisms assigned to B's marked
/// generators; throws if the assignment is not a homomorphism B -> Aut(A).
inline std::vector<Perm> action_from_generators(const FiniteGroup& a, const MarkedGroup& b,
                                                const std::vector<Perm>& gen_autos) {
  if (gen_autos.size() != b.marked.size()) throw Error("one automorphism per generator of B required");
  const FiniteGroup& bg = b.g();
  std::vector<Perm> act(bg.order());
  std::vector<char> done(bg.order(), 0);
  act[bg.identity()] = identity_perm(a.order());
  done[bg.identity()] = 1;
  std::vector<Element> queue{bg.identity()};
  for (std::size_t q = 0; q < queue.size(); ++q) {
    Element h = queue[q];
    for (std::size_t i = 0; i < b.marked.size(); ++i) {
      Element hg = bg.mul(h, b.marked[i]);
      // (a1, h)(a2, g) twists a2 by act[h] after act[g] acts on it: act[hg] = act[h] o act[g].
      Perm p(a.order());
      for (Element x = 0; x < a.order(); ++x) p[x] = act[h][gen_autos[i][x]];
      if (!done[hg]) {
        act[hg] = std::move(p);
        done[hg] = 1;
        queue.push_back(hg);
      } else if (act[hg] != p) {
        throw Error("generator automorphisms do not define an action");
      }
    }
  }
  if (queue.size() != bg.order()) throw Error("marked elements of B do not generate B");
  return act;
}

/// Deterministic small generating set: repeatedly add the element whose
/// inclusion enlarges the closure the most, lowest index first on ties.
inline std::vector<Element> greedy_generating_set(const FiniteGroup& g) {
  std::vector<Element> gens;
  std::size_t have = 1;
  while (have < g.order()) {
    Element best = kNoElement;
    std::size_t best_size = have;
    std::vector<Element> trial = gens;
    trial.push_back(0);
    for (Element e = 0; e < g.order(); ++e) {
      trial.back() = e;
      std::size_t sz = closure_size(g, trial);
      if (sz > best_size) {
        best_size = sz;
        best = e;
      }
    }
    gens.push_back(best);
    have = best_size;
  }
  return gens;
}

/// Abstract isomorphism test: fix a greedy generating set of A and search
/// order-compatible image tuples in B, pruning whenever the partial
/// assignment fails to be an injective homomorphism on its subgroup.
inline bool are_isomorphic_groups(const FiniteGroup& a, const FiniteGroup& b) {
  if (a.order() != b.order()) return false;
  if (a.order_statistics() != b.order_statistics()) return false;
  if (a.is_abelian() != b.is_abelian()) return false;

  const auto gens = greedy_generating_set(a);
  std::vector<std::vector<Element>> candidates(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (Element e = 0; e < b.order(); ++e)
      if (b.element_order(e) == a.element_order(gens[i])) candidates[i].push_back(e);

  std::vector<Element> images(gens.size());
  auto search = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == gens.size()) return true;
    for (Element c : candidates[depth]) {
      images[depth] = c;
      std::span<const Element> gs(gens.data(), depth + 1), is(images.data(), depth + 1);
      if (!extend_homomorphism(a, gs, b, is, true)) continue;
      if (self(self, depth + 1)) return true;
    }
    return false;
  };
  // An injective homomorphism between groups of equal order is an isomorphism.
  return search(search, 0);
}

}  // namespace ebm
