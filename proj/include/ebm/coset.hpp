// Todd-Coxeter coset enumeration for presentations on involutory generators.
//
// Strategy: HLT (relator-based definitions, cosets processed in creation
// order) with lookahead. When the table runs out of room every live coset is
// scanned against every relator without defining anything, coincidences are
// collapsed, the table is compacted, and enumeration resumes. Only if that
// frees nothing do we give up with CapacityExceeded.
//
// Since every generator is an involution, column g is its own inverse column:
// a deduction c.g = d always comes paired with d.g = c.

#pragma once

#include <cstddef>
#include <cstdint>
#include <deque>
#include <span>
#include <string>
#include <vector>

#include "ebm/group.hpp"
#include "ebm/presentation.hpp"

namespace ebm {

inline constexpr std::size_t kDefaultMaxCosets = 100000;

class CapacityExceeded : public Error {
 public:
  explicit CapacityExceeded(std::size_t max_cosets)
      : Error("coset enumeration exceeded " + std::to_string(max_cosets) +
              " cosets (index too large or infinite at this budget)"),
        max_cosets_(max_cosets) {}
  std::size_t max_cosets() const { return max_cosets_; }

 private:
  std::size_t max_cosets_;
};

/// Complete coset table. Coset 0 is the subgroup itself; cosets are numbered
/// in breadth-first order (generators tried in index order), so two runs on the
/// same input give identical tables.
struct CosetTable {
  std::size_t generator_count = 0;
  /// Flat row-major table: image(c, g) = rows[c * generator_count + g].
  std::vector<std::uint32_t> rows;
  std::vector<bool> live;
  std::size_t live_count = 0;

  std::size_t index() const { return live_count; }
  std::uint32_t image(std::size_t coset, std::size_t gen) const { return rows[coset * generator_count + gen]; }

  std::uint32_t apply(std::uint32_t coset, const Word& w) const {
    for (int g : w) coset = image(coset, std::size_t(g));
    return coset;
  }
};

namespace detail {

class Enumerator {
 public:
  Enumerator(const Presentation& p, std::size_t max_cosets)
      : gens_(p.generator_count()), rels_(p.relators), cap_(max_cosets) {
    if (max_cosets < 1) throw Error("max_cosets must be at least 1");
    if (gens_ == 0) throw Error("presentation has no generators");
    add_coset();
  }

  CosetTable run(std::span<const Word> subgroup) {
    for (;;) {
      try {
        for (const Word& w : subgroup)
          if (!w.empty()) scan_and_fill(0, w);
        break;
      } catch (const NoSpace&) {
        make_room();
      }
    }
    std::size_t c = 0;
    while (c < size()) {
      try {
        for (const Word& r : rels_) {
          if (!live_[c]) break;
          scan_and_fill(std::int32_t(c), r);
        }
        if (live_[c])
          for (std::size_t g = 0; g < gens_; ++g)
            if (at(std::int32_t(c), g) < 0) define(std::int32_t(c), g);
        ++c;
      } catch (const NoSpace&) {
        c = make_room(c);
      }
    }
    return standardized();
  }

 private:
  struct NoSpace {};

  std::size_t size() const { return live_.size(); }
  std::int32_t& at(std::int32_t c, std::size_t g) { return table_[std::size_t(c) * gens_ + g]; }

  std::int32_t add_coset() {
    table_.insert(table_.end(), gens_, -1);
    live_.push_back(true);
    parent_.push_back(std::int32_t(live_.size() - 1));
    ++live_count_;
    return std::int32_t(live_.size() - 1);
  }

  void define(std::int32_t c, std::size_t g) {
    if (size() >= cap_) throw NoSpace{};
    std::int32_t d = add_coset();
    at(c, g) = d;
    at(d, g) = c;
  }

  std::int32_t rep(std::int32_t c) {
    std::int32_t r = c;
    while (parent_[std::size_t(r)] != r) r = parent_[std::size_t(r)];
    while (parent_[std::size_t(c)] != r) {
      std::int32_t next = parent_[std::size_t(c)];
      parent_[std::size_t(c)] = r;
      c = next;
    }
    return r;
  }

  void merge(std::int32_t a, std::int32_t b, std::deque<std::int32_t>& queue) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[std::size_t(b)] = a;
    live_[std::size_t(b)] = false;
    --live_count_;
    queue.push_back(b);
  }

  void coincidence(std::int32_t a, std::int32_t b) {
    std::deque<std::int32_t> queue;
    merge(a, b, queue);
    while (!queue.empty()) {
      std::int32_t e = queue.front();
      queue.pop_front();
      for (std::size_t g = 0; g < gens_; ++g) {
        std::int32_t f = at(e, g);
        if (f < 0) continue;
        at(f, g) = -1;
        std::int32_t e1 = rep(e), f1 = rep(f);
        if (at(e1, g) >= 0) {
          merge(f1, at(e1, g), queue);
        } else if (at(f1, g) >= 0) {
          merge(e1, at(f1, g), queue);
        } else {
          at(e1, g) = f1;
          at(f1, g) = e1;
        }
      }
    }
  }

  /// Scans relator w at coset c; with `fill` it defines new cosets to close
  /// the gap, otherwise it only records a deduction or coincidence.
  void scan(std::int32_t c, const Word& w, bool fill) {
    std::int32_t f = c, b = c;
    std::ptrdiff_t i = 0, j = std::ptrdiff_t(w.size()) - 1;
    for (;;) {
      while (i <= j && at(f, std::size_t(w[std::size_t(i)])) >= 0) {
        f = at(f, std::size_t(w[std::size_t(i)]));
        ++i;
      }
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && at(b, std::size_t(w[std::size_t(j)])) >= 0) {
        b = at(b, std::size_t(w[std::size_t(j)]));
        --j;
      }
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        std::size_t g = std::size_t(w[std::size_t(i)]);
        at(f, g) = b;
        at(b, g) = f;
        return;
      }
      if (!fill) return;
      define(f, std::size_t(w[std::size_t(i)]));
    }
  }

  void scan_and_fill(std::int32_t c, const Word& w) { scan(c, w, true); }

  /// Lookahead then compaction. Returns the new position of old coset `c`.
  std::size_t make_room(std::size_t c = 0) {
    for (std::size_t d = 0; d < size(); ++d)
      for (const Word& r : rels_) {
        if (!live_[d]) break;
        scan(std::int32_t(d), r, false);
      }
    std::size_t new_c = 0;
    for (std::size_t d = 0; d < c && d < size(); ++d)
      if (live_[d]) ++new_c;
    compact();
    if (size() >= cap_) throw CapacityExceeded(cap_);
    return new_c;
  }

  /// Renumbers live cosets 0.. in their existing order.
  void compact() {
    std::vector<std::int32_t> remap(size(), -1);
    std::size_t n = 0;
    for (std::size_t d = 0; d < size(); ++d)
      if (live_[d]) remap[d] = std::int32_t(n++);
    std::vector<std::int32_t> table(n * gens_, -1);
    for (std::size_t d = 0; d < size(); ++d) {
      if (!live_[d]) continue;
      for (std::size_t g = 0; g < gens_; ++g) {
        std::int32_t v = table_[d * gens_ + g];
        table[std::size_t(remap[d]) * gens_ + g] = v < 0 ? -1 : remap[std::size_t(rep(v))];
      }
    }
    table_ = std::move(table);
    live_.assign(n, true);
    parent_.resize(n);
    for (std::size_t d = 0; d < n; ++d) parent_[d] = std::int32_t(d);
    live_count_ = n;
  }

  CosetTable standardized() {
    compact();
    std::size_t n = size();
    std::vector<std::int32_t> order{0}, pos(n, -1);
    pos[0] = 0;
    for (std::size_t q = 0; q < order.size(); ++q)
      for (std::size_t g = 0; g < gens_; ++g) {
        std::int32_t d = at(order[q], g);
        if (d < 0) throw Error("coset enumeration finished with an incomplete table");
        if (pos[std::size_t(d)] < 0) {
          pos[std::size_t(d)] = std::int32_t(order.size());
          order.push_back(d);
        }
      }
    if (order.size() != n) throw Error("coset table is not connected");
    CosetTable out;
    out.generator_count = gens_;
    out.rows.resize(n * gens_);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t g = 0; g < gens_; ++g)
        out.rows[i * gens_ + g] = std::uint32_t(pos[std::size_t(at(order[i], g))]);
    out.live.assign(n, true);
    out.live_count = n;
    return out;
  }

  std::size_t gens_;
  const std::vector<Word>& rels_;
  std::size_t cap_;
  std::vector<std::int32_t> table_;
  std::vector<bool> live_;
  std::vector<std::int32_t> parent_;
  std::size_t live_count_ = 0;
};

}  // namespace detail

/// Enumerates the cosets of the subgroup generated by `subgroup_gens`.
/// Throws CapacityExceeded if more than `max_cosets` cosets are ever needed at
/// once; that says nothing about whether the index is finite.
inline CosetTable coset_enumerate(const Presentation& p, std::span<const Word> subgroup_gens,
                                  std::size_t max_cosets = kDefaultMaxCosets) {
  for (const Word& r : p.relators)
    for (int g : r)
      if (g < 0 || std::size_t(g) >= p.generator_count()) throw Error("relator uses an unknown generator index");
  for (const Word& w : subgroup_gens)
    for (int g : w)
      if (g < 0 || std::size_t(g) >= p.generator_count()) throw Error("subgroup word uses an unknown generator index");
  return detail::Enumerator(p, max_cosets).run(subgroup_gens);
}

/// The regular representation of the presented group: element i is coset i of
/// the trivial subgroup, identity is 0, and marked[g] is the image of generator g.
inline MarkedGroup group_from_presentation(const Presentation& p, std::size_t max_cosets = kDefaultMaxCosets) {
  CosetTable t = coset_enumerate(p, {}, max_cosets);
  std::size_t n = t.index(), k = t.generator_count;
  // Spanning tree of the standardized table: each coset c > 0 is reached from
  // parent[c] by generator via[c], and parent[c] < c.
  std::vector<std::uint32_t> parent(n, 0), via(n, 0);
  std::vector<bool> seen(n, false);
  seen[0] = true;
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t g = 0; g < k; ++g) {
      std::uint32_t d = t.image(c, g);
      if (!seen[d]) {
        seen[d] = true;
        parent[d] = std::uint32_t(c);
        via[d] = std::uint32_t(g);
      }
    }
  // a * c = (word of a)(word of c) = a.(word of parent[c]).via[c].
  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    table[a * n] = Element(a);
    for (std::size_t c = 1; c < n; ++c) table[a * n + c] = t.image(table[a * n + parent[c]], via[c]);
  }
  auto g = share(FiniteGroup::from_table(n, std::move(table)));
  std::vector<Element> marked(k);
  for (std::size_t i = 0; i < k; ++i) marked[i] = t.image(0, i);
  return MarkedGroup{g, std::move(marked)};
}

/// Index (1 or 2) of the subgroup generated by all products of two marked
/// generators.
inline std::size_t index_of_even_subgroup(const MarkedGroup& m) {
  const FiniteGroup& g = m.g();
  for (Element e : m.marked)
    if (!g.is_involution(e)) throw Error("marked element " + std::to_string(e) + " is not an involution");
  std::vector<Element> products;
  for (Element a : m.marked)
    for (Element b : m.marked) products.push_back(g.mul(a, b));
  std::size_t sub = closure_size(g, products);
  if (g.order() % sub != 0) throw Error("even subgroup size does not divide the group order");
  return g.order() / sub;
}

/// Permutation action of the generators on the cosets in `t`.
inline PermutationGroup coset_action_group(const CosetTable& t) {
  std::vector<Perm> gens(t.generator_count, Perm(t.index()));
  for (std::size_t g = 0; g < t.generator_count; ++g)
    for (std::size_t c = 0; c < t.index(); ++c) gens[g][c] = t.image(c, g);
  return from_permutations(gens);
}

}  // namespace ebm
