// Maps collected from every constructor, shared by property tests and the
// acceptance runner.

#pragma once

#include <string>
#include <vector>

#include "ebm/atlas.hpp"
#include "ebm/census.hpp"
#include "ebm/families.hpp"

namespace ebm::test_corpus {

struct CorpusMap {
  std::string name;
  EdgeBiregularMap map;
};

/// H_{p,j} parameter sets with 4 kappa lambda <= bound.
inline std::vector<HpjParams> hpj_parameter_range(long long bound = 200) {
  std::vector<HpjParams> out;
  for (long long kappa = 1; 4 * kappa * 3 <= bound; kappa += 2)
    for (long long lambda = 3; 4 * kappa * lambda <= bound; lambda += 2) {
      if (std::gcd(kappa, lambda) != 1) continue;
      for (long long j : square_roots_of_unity(lambda)) out.push_back(HpjParams{kappa, lambda, j});
    }
  return out;
}

inline std::vector<CorpusMap> map_corpus() {
  std::vector<CorpusMap> out;
  for (const auto& c : chi_minus_2_catalog()) out.push_back({c.label, c.map});
  out.push_back({"H2_11 twin", h2_11_twin_presentation().map});
  for (long long p : {3, 5, 7, 11, 13}) {
    auto a = dihedral_family_1(p), b = dihedral_family_2(p);
    out.push_back({a.label, a.map});
    out.push_back({b.label, b.map});
  }
  for (const auto& q : hpj_parameter_range()) {
    auto c = family_Hpj(q);
    out.push_back({c.label, c.map});
  }
  for (long long m : {1, 3, 5}) {
    auto c = family_Hp(m);
    out.push_back({c.label, c.map});
  }
  out.push_back({"H3", map_H3().map});
  // Every map class on groups of order 8, 12 and 16, whatever its chi.
  for (std::size_t n : {8u, 12u, 16u})
    for (const auto& e : atlas(n)) {
      std::size_t i = 0;
      for (auto& m : enumerate_maps(e.group))
        out.push_back({e.name + "#" + std::to_string(i++), std::move(m)});
    }
  return out;
}

}  // namespace ebm::test_corpus
