#include <gtest/gtest.h>

#include <set>

#include "corpus.hpp"
#include "ebm/families.hpp"

using namespace ebm;

namespace {

std::set<std::pair<long long, long long>> kappa_lambda(const std::vector<HpjParams>& v) {
  std::set<std::pair<long long, long long>> out;
  for (const auto& q : v) out.insert({q.kappa, q.lambda});
  return out;
}

std::vector<long long> js_for(const std::vector<HpjParams>& v, long long kappa, long long lambda) {
  std::vector<long long> out;
  for (const auto& q : v)
    if (q.kappa == kappa && q.lambda == lambda) out.push_back(q.j);
  return out;
}

}  // namespace

TEST(DihedralFamilyOne, SmallestCase) {
  auto m = dihedral_family_1(3).map;
  EXPECT_EQ(m.group().order(), 16u);
  EXPECT_EQ(type_of(m), (MapType{16, 4}));
  EXPECT_EQ(counts(m).vertices, 1u);
  EXPECT_FALSE(is_fully_regular(m));
}

TEST(DihedralFamilyOne, OrderAndChi) {
  for (long long p : {3, 5, 7, 11, 13}) {
    auto m = dihedral_family_1(p).map;
    EXPECT_EQ((long long)m.group().order(), 4 * (p + 1));
    EXPECT_EQ(euler_characteristic(m), -p);
    EXPECT_TRUE(are_isomorphic_groups(m.group(), dihedral(std::size_t(4 * (p + 1))).g()));
  }
}

TEST(DihedralFamilyTwo, SmallestCase) {
  auto m = dihedral_family_2(3).map;
  EXPECT_EQ(m.group().order(), 20u);
  EXPECT_EQ(type_of(m), (MapType{10, 4}));
  EXPECT_EQ(counts(m).vertices, 2u);
}

TEST(DihedralFamilyTwo, OrderChiAndGroup) {
  for (long long p : {3, 5, 7, 11, 13}) {
    auto m = dihedral_family_2(p).map;
    EXPECT_EQ((long long)m.group().order(), 4 * (p + 2));
    EXPECT_EQ(euler_characteristic(m), -p);
    EXPECT_TRUE(are_isomorphic_groups(m.group(), dihedral(std::size_t(4 * (p + 2))).g()));
  }
}

TEST(DihedralFamilies, RejectNonPrimes) {
  EXPECT_THROW(dihedral_family_1(9), Error);
  EXPECT_THROW(dihedral_family_2(2), Error);
}

TEST(Hpj, Examples) {
  auto a = family_Hpj(HpjParams{1, 5, 4});
  EXPECT_EQ(a.map.group().order(), 20u);
  EXPECT_EQ(type_of(a.map), (MapType{4, 10}));
  auto b = family_Hpj(HpjParams{3, 5, 1});
  EXPECT_EQ(HpjParams({3, 5, 1}).p(), 19);
  EXPECT_EQ(b.map.group().order(), 60u);
  EXPECT_EQ(type_of(b.map), (MapType{12, 10}));
}

TEST(Hpj, EveryParameterSet) {
  for (const auto& q : test_corpus::hpj_parameter_range()) {
    auto m = family_Hpj(q).map;
    EXPECT_EQ((long long)m.group().order(), 4 * q.kappa * q.lambda) << q.label();
    EXPECT_EQ(euler_characteristic(m), -q.p()) << q.label();
    EXPECT_FALSE(is_fully_regular(m)) << q.label();
    EXPECT_FALSE(is_orientable(m)) << q.label();
    EXPECT_EQ(((q.a() * (q.j + 1)) % q.lambda), 0) << q.label();
  }
}

TEST(Hpj, RoutesAgree) {
  for (const auto& q : test_corpus::hpj_parameter_range()) {
    auto by_presentation = family_Hpj(q, HpjRoute::Presentation).map;
    auto by_semidirect = family_Hpj(q, HpjRoute::Semidirect).map;
    EXPECT_TRUE(is_map_isomorphic(by_presentation, by_semidirect)) << q.label();
  }
}

TEST(Hpj, InvalidParameters) {
  EXPECT_THROW(validate(HpjParams{2, 5, 1}), Error);  // kappa even
  EXPECT_THROW(validate(HpjParams{1, 4, 1}), Error);  // lambda even
  EXPECT_THROW(validate(HpjParams{3, 9, 1}), Error);  // not coprime
  EXPECT_THROW(validate(HpjParams{1, 5, 2}), Error);  // 2^2 != 1 mod 5
  EXPECT_THROW(validate(HpjParams{1, 5, 5}), Error);  // j out of range
  EXPECT_NO_THROW(validate(HpjParams{1, 5, 4}));
}

TEST(Factorizations, PThree) {
  auto f = factorizations_of(3);
  EXPECT_EQ(kappa_lambda(f), (std::set<std::pair<long long, long long>>{{1, 5}}));
  EXPECT_EQ(js_for(f, 1, 5), (std::vector<long long>{1, 4}));
}

TEST(Factorizations, PNineteen) {
  auto f = factorizations_of(19);
  EXPECT_EQ(kappa_lambda(f), (std::set<std::pair<long long, long long>>{{1, 21}, {3, 5}}));
  EXPECT_EQ(js_for(f, 1, 21), (std::vector<long long>{1, 8, 13, 20}));
  EXPECT_EQ(js_for(f, 3, 5), (std::vector<long long>{1, 4}));
}

TEST(Factorizations, PThirtyOne) {
  auto f = factorizations_of(31);
  EXPECT_EQ(kappa_lambda(f), (std::set<std::pair<long long, long long>>{{1, 33}}));
  EXPECT_EQ(js_for(f, 1, 33), (std::vector<long long>{1, 10, 23, 32}));
}

TEST(Factorizations, ReproduceP) {
  for (long long p : {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43})
    for (const auto& q : factorizations_of(p)) {
      EXPECT_EQ(q.p(), p);
      EXPECT_NO_THROW(validate(q));
    }
}

TEST(Factorizations, TrivialFactorCoincidesWithSecondDihedralFamily) {
  // b = 1 gives type (4, 2(p + 2)) on a group of order 4(p + 2). With
  // j = +-1 the map is the second dihedral one; other square roots of unity
  // (lambda composite, e.g. p = 13, lambda = 15, j = 4) give new maps.
  std::size_t distinct = 0;
  for (long long p : {3, 5, 7, 11, 13, 17, 19, 23})
    for (const auto& q : factorizations_of(p)) {
      if (q.kappa != 1) continue;
      const bool same = is_equivalent_up_to_duality_and_twin(family_Hpj(q).map, dihedral_family_2(p).map);
      const bool plus_minus_one = q.j == 1 || q.j == q.lambda - 1;
      EXPECT_EQ(same, plus_minus_one) << q.label();
      distinct += !same;
    }
  EXPECT_GT(distinct, 0u);
}

TEST(Hp, Examples) {
  auto m1 = family_Hp(1).map;
  EXPECT_EQ(m1.group().order(), 24u);
  EXPECT_EQ(type_of(m1), (MapType{8, 6}));
  EXPECT_EQ(euler_characteristic(m1), -5);
  EXPECT_FALSE(is_fully_regular(m1));
  auto m3 = family_Hp(3).map;
  EXPECT_EQ(m3.group().order(), 72u);
  EXPECT_EQ(euler_characteristic(m3), -23);
  EXPECT_EQ(family_Hp(5).map.group().order(), 120u);
}

TEST(Hp, Parameters) {
  EXPECT_THROW(family_Hp(2), Error);
  EXPECT_THROW(family_Hp(0), Error);
  EXPECT_FALSE(hp_composite_warning(1).has_value());
  EXPECT_FALSE(hp_composite_warning(5).has_value());  // 41
  EXPECT_TRUE(hp_composite_warning(9).has_value());   // 77 = 7 * 11
  EXPECT_TRUE(hp_composite_warning(11).has_value());  // 95 = 5 * 19
}

TEST(Hp, QuotientBySxCubedIsS4) {
  auto q = hp_quotient_check();
  EXPECT_EQ(q.index, 24u);
  EXPECT_TRUE(q.quotient_is_s4);
}

TEST(H3, Properties) {
  auto m = map_H3().map;
  EXPECT_EQ(m.group().order(), 36u);
  EXPECT_EQ(type_of(m), (MapType{4, 6}));
  EXPECT_EQ(euler_characteristic(m), -3);
  EXPECT_TRUE(is_fully_regular(m));
  EXPECT_FALSE(is_orientable(m));
}

TEST(ChiMinusTwo, Catalog) {
  const std::vector<std::size_t> orders{8, 12, 12, 16, 16, 16, 16, 16, 16, 24, 24, 24};
  const std::vector<MapType> types{{8, 8}, {4, 12}, {6, 6}, {4, 8}, {4, 8}, {4, 8},
                                   {4, 8}, {4, 8}, {4, 8}, {4, 6}, {4, 6}, {4, 6}};
  auto cat = chi_minus_2_catalog();
  ASSERT_EQ(cat.size(), 12u);
  std::set<std::size_t> orientable, regular;
  for (std::size_t i = 0; i < 12; ++i) {
    EXPECT_EQ(cat[i].map.group().order(), orders[i]) << i + 1;
    EXPECT_EQ(type_of(cat[i].map), types[i]) << i + 1;
    EXPECT_EQ(euler_characteristic(cat[i].map), -2) << i + 1;
    if (is_orientable(cat[i].map)) orientable.insert(i + 1);
    if (is_fully_regular(cat[i].map)) regular.insert(i + 1);
  }
  EXPECT_EQ(orientable, (std::set<std::size_t>{1, 3, 4, 7, 11, 12}));
  EXPECT_EQ(regular, (std::set<std::size_t>{1, 3, 7, 10, 12}));
  EXPECT_TRUE(are_isomorphic_groups(cat[9].map.group(), symmetric(4)));
  for (std::size_t i = 3; i < 9; ++i)
    EXPECT_TRUE(are_isomorphic_groups(cat[i].map.group(), direct_product(dihedral(8).g(), cyclic(2)))) << i + 1;
}

TEST(ChiMinusTwo, PairwiseInequivalent) {
  auto cat = chi_minus_2_catalog();
  for (std::size_t i = 0; i < cat.size(); ++i)
    for (std::size_t j = i + 1; j < cat.size(); ++j)
      EXPECT_FALSE(is_equivalent_up_to_duality_and_twin(cat[i].map, cat[j].map)) << i + 1 << " " << j + 1;
}

TEST(ChiMinusTwo, IndexRange) {
  EXPECT_THROW(chi_minus_2_map(0), Error);
  EXPECT_THROW(chi_minus_2_map(13), Error);
}

TEST(OddPrime, ConstructionsHaveChiMinusP) {
  for (long long p : {3, 5, 7, 11, 13, 23})
    for (const auto& c : odd_prime_constructions(p)) EXPECT_EQ(euler_characteristic(c.map), -p) << c.label;
}

TEST(OddPrime, HpOnlyWhenPIsNineMMinusFour) {
  auto has_hp = [](long long p) {
    for (const auto& c : odd_prime_constructions(p))
      if (c.label.rfind("Hp(", 0) == 0) return true;
    return false;
  };
  EXPECT_FALSE(has_hp(3));
  EXPECT_TRUE(has_hp(5));
  EXPECT_FALSE(has_hp(7));
  EXPECT_TRUE(has_hp(23));
}
