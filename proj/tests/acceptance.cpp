// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <boost/rational.hpp>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>

#include "corpus.hpp"
#include "ebm/io.hpp"

using namespace ebm;
using Rational = boost::rational<long long>;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail << " first failure: ";
      else detail << "; ";
      detail << what;
    }
    pass = pass && ok;
  }
};

struct Criterion {
  int id;
  std::string name;
  double time_limit_s;
  std::function<void(Outcome&)> body;
};

std::string catalog_text(long long p, Profile profile, std::size_t jobs) {
  return catalog_json(classify(p, profile, jobs)).dump(2);
}

void exhaustive_p2(Outcome& o) {
  auto cat = classify(2, Profile::Exhaustive);
  o.require(cat.size() == 12, "expected 12 maps, got " + std::to_string(cat.size()));
  if (cat.size() != 12) return;
  const std::vector<std::size_t> orders{8, 12, 12, 16, 16, 16, 16, 16, 16, 24, 24, 24};
  const std::vector<MapType> types{{8, 8}, {4, 12}, {6, 6}, {4, 8}, {4, 8}, {4, 8},
                                   {4, 8}, {4, 8}, {4, 8}, {4, 6}, {4, 6}, {4, 6}};
  std::multiset<std::pair<std::size_t, std::pair<std::size_t, std::size_t>>> got, want;
  std::set<std::string> orientable, regular, labels;
  for (std::size_t i = 0; i < 12; ++i) {
    want.insert({orders[i], {types[i].k, types[i].l}});
    const auto& e = cat[i];
    got.insert({e.invariants.group_order, {e.invariants.type.k, e.invariants.type.l}});
    o.require(e.invariants.chi == -2, "chi");
    o.require(e.family.has_value(), "entry without catalog label");
    if (!e.family) continue;
    labels.insert(*e.family);
    if (e.invariants.orientable) orientable.insert(*e.family);
    if (e.invariants.fully_regular) regular.insert(*e.family);
  }
  o.require(got == want, "orders/types differ");
  o.require(labels.size() == 12, "labels not one-to-one");
  o.require(orientable == std::set<std::string>{"H2_1", "H2_3", "H2_4", "H2_7", "H2_11", "H2_12"}, "orientable set");
  o.require(regular == std::set<std::string>{"H2_1", "H2_3", "H2_7", "H2_10", "H2_12"}, "fully regular set");
  // Labels come from matching; confirm each match independently.
  for (const auto& e : cat)
    if (e.family) {
      const auto idx = std::stoul(e.family->substr(3));
      o.require(is_equivalent_up_to_duality_and_twin(e.map, chi_minus_2_map(idx).map), *e.family + " mismatch");
    }
  for (std::size_t i = 0; i < 12; ++i)
    for (std::size_t j = i + 1; j < 12; ++j)
      o.require(!is_equivalent_up_to_duality_and_twin(cat[i].map, cat[j].map), "duplicate classes");
}

void exhaustive_p3(Outcome& o) {
  auto ex = classify(3, Profile::Exhaustive);
  std::vector<Construction> expected{dihedral_family_1(3), dihedral_family_2(3), map_H3()};
  for (const auto& q : factorizations_of(3)) expected.push_back(family_Hpj(q));
  // Constructive side: the distinct classes among the listed constructions.
  std::vector<EdgeBiregularMap> classes;
  for (const auto& c : expected) {
    bool known = false;
    for (const auto& m : classes) known = known || is_equivalent_up_to_duality_and_twin(m, c.map);
    if (!known) classes.push_back(c.map);
  }
  o.require(ex.size() == classes.size(),
            "exhaustive " + std::to_string(ex.size()) + " vs constructive " + std::to_string(classes.size()));
  for (const auto& m : classes) {
    std::size_t hits = 0;
    for (const auto& e : ex) hits += is_equivalent_up_to_duality_and_twin(e.map, m);
    o.require(hits == 1, "construction not matched exactly once");
  }
  o.require(catalogs_agree(ex, classify(3, Profile::Constructive)), "catalog comparison");
}

std::size_t presented_order(const Construction& c) { return group_from_presentation(c.presentation).g().order(); }

void order_formulas(Outcome& o) {
  for (long long p : {3, 5, 7, 11, 13}) {
    o.require((long long)presented_order(dihedral_family_1(p)) == 4 * (p + 1), "dh1 p=" + std::to_string(p));
    o.require((long long)presented_order(dihedral_family_2(p)) == 4 * (p + 2), "dh2 p=" + std::to_string(p));
  }
  for (const auto& q : test_corpus::hpj_parameter_range(200))
    o.require((long long)presented_order(family_Hpj(q, HpjRoute::Presentation)) == 4 * q.kappa * q.lambda, q.label());
  for (long long m : {1, 3, 5})
    o.require((long long)presented_order(family_Hp(m)) == 24 * m, "Hp m=" + std::to_string(m));
}

void quotient_check(Outcome& o) {
  auto q = hp_quotient_check();
  o.require(q.index == 24, "index " + std::to_string(q.index));
  o.require(q.quotient.g().order() == 24, "quotient order");
  o.require(are_isomorphic_groups(q.quotient.g(), symmetric(4)), "quotient not S4");
}

void hpj_routes(Outcome& o) {
  std::size_t n = 0;
  for (const auto& q : test_corpus::hpj_parameter_range(200)) {
    ++n;
    o.require(is_map_isomorphic(family_Hpj(q, HpjRoute::Presentation).map, family_Hpj(q, HpjRoute::Semidirect).map),
              q.label());
  }
  o.detail << " (" << n << " parameter sets)";
}

void euler_identity(Outcome& o) {
  auto corpus = test_corpus::map_corpus();
  for (long long p : {2, 3, 5})
    for (auto& e : classify(p, Profile::Constructive)) corpus.push_back({"catalog", e.map});
  o.require(corpus.size() >= 40, "corpus too small");
  for (const auto& c : corpus) {
    const auto t = type_of(c.map);
    const long long n = (long long)c.map.group().order();
    const auto orbits = flag_orbit_counts(flag_structure(c.map));
    const Rational from_flags((long long)orbits.vertices - (long long)orbits.edges + (long long)orbits.faces);
    const Rational formula = Rational(n) * (Rational(1, (long long)t.k) - Rational(1, 2) + Rational(1, (long long)t.l));
    o.require(from_flags == formula, c.name + " Euler");
    o.require(is_orientable(c.map) == is_flag_graph_bipartite(flag_structure(c.map)), c.name + " orientability");
  }
  o.detail << " (" << corpus.size() << " maps)";
}

void non_regularity(Outcome& o) {
  for (const auto& q : test_corpus::hpj_parameter_range(200))
    o.require(!is_fully_regular(family_Hpj(q).map), q.label());
  for (long long m : {1, 3, 5}) o.require(!is_fully_regular(family_Hp(m).map), "Hp m=" + std::to_string(m));
  o.require(is_fully_regular(map_H3().map), "H3");
  std::set<std::size_t> regular;
  for (std::size_t i = 1; i <= 12; ++i)
    if (is_fully_regular(chi_minus_2_map(i).map)) regular.insert(i);
  o.require(regular == std::set<std::size_t>{1, 3, 7, 10, 12}, "chi=-2 regular set");
}

void chi_minus_one(Outcome& o) {
  auto r = verify_no_maps_chi_minus_1();
  o.require(r.pass, "report flagged a group");
  o.require(r.unsupported.empty(), "unsupported orders");
  std::size_t with_maps = 0;
  for (const auto& g : r.groups) {
    // Independent check of each group, not just the report's own verdict.
    if (g.maps == 0) continue;
    ++with_maps;
    bool dihedral_like = false;
    for (const auto& e : atlas(g.order))
      if (e.name == g.group) dihedral_like = are_isomorphic_groups(*e.group, dihedral(g.order).g());
    o.require(dihedral_like, g.group + " is not dihedral");
  }
  o.require(r.groups.size() == atlas(8).size() + atlas(12).size(), "not every group searched");
  o.detail << " (" << with_maps << " groups with maps)";
}

void probe(Outcome& o) {
  auto r = cp_dihedral_probe(default_probe_grid());
  o.require(r.pass(), std::to_string(r.counterexamples) + " counterexamples");
  o.require(r.checked > 0, "no maps were checked");
  o.detail << " (" << r.cases.size() << " cases, " << r.checked << " maps checked)";
}

void determinism(Outcome& o) {
  for (long long p : {2, 3}) {
    const auto a = catalog_text(p, Profile::Exhaustive, 1);
    const auto b = catalog_text(p, Profile::Exhaustive, 4);
    o.require(a == b, "p=" + std::to_string(p) + " JSON differs between runs");
  }
  o.require(catalog_text(3, Profile::Constructive, 1) == catalog_text(3, Profile::Constructive, 1),
            "constructive JSON differs");
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "chi=-2 exhaustive catalog", 60, exhaustive_p2},
      {2, "p=3 exhaustive equals constructive", 120, exhaustive_p3},
      {3, "presented group orders", 30, order_formulas},
      {4, "Hp quotient is S4 of index 24", 30, quotient_check},
      {5, "Hpj presentation and semidirect routes agree", 60, hpj_routes},
      {6, "Euler identity and orientability agreement", 120, euler_identity},
      {7, "full regularity claims", 60, non_regularity},
      {8, "chi=-1 maps only in dihedral groups", 30, chi_minus_one},
      {9, "C_p x| D_nu probe", 60, probe},
      {10, "catalog JSON determinism", 120, determinism},
  };
  bool all = true;
  for (const auto& c : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream limit;
    limit.precision(2);
    limit << std::fixed << secs << "s";
    o.require(secs < c.time_limit_s, "time " + limit.str() + " over " + std::to_string((int)c.time_limit_s) + "s");
    std::printf("%s %2d %s [%s]%s\n", o.pass ? "PASS" : "FAIL", c.id, c.name.c_str(), limit.str().c_str(),
                o.detail.str().c_str());
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
