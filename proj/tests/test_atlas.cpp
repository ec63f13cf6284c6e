#include <gtest/gtest.h>

#include <map>

#include "ebm/atlas.hpp"

using namespace ebm;

namespace {

// Numbers of groups of each order from the standard small-group tables.
const std::map<std::size_t, std::size_t> kReferenceCounts{
    {4, 2}, {8, 5}, {12, 5}, {16, 14}, {20, 5}, {24, 15}, {36, 14},
    {40, 14}, {56, 13}, {60, 13}, {84, 15}, {88, 12}, {132, 10}};

class AtlasOrder : public ::testing::TestWithParam<std::size_t> {};

}  // namespace

TEST_P(AtlasOrder, CompleteAndPairwiseNonIsomorphic) {
  const std::size_t n = GetParam();
  const auto& groups = atlas(n);
  EXPECT_EQ(groups.size(), kReferenceCounts.at(n));
  EXPECT_EQ(groups.size(), atlas_expected_count(n));
  for (const auto& e : groups) {
    EXPECT_EQ(e.group->order(), n) << e.name;
    EXPECT_TRUE(e.group->is_associative()) << e.name;
  }
  for (std::size_t i = 0; i < groups.size(); ++i)
    for (std::size_t j = i + 1; j < groups.size(); ++j)
      EXPECT_FALSE(are_isomorphic_groups(*groups[i].group, *groups[j].group))
          << groups[i].name << " vs " << groups[j].name;
}

INSTANTIATE_TEST_SUITE_P(Core, AtlasOrder, ::testing::Values(4, 8, 12, 16, 20, 24, 36));
INSTANTIATE_TEST_SUITE_P(Extended, AtlasOrder, ::testing::Values(40, 56, 60, 84, 88, 132));

TEST(Atlas, OrderEightHasTwoNonAbelian) {
  std::size_t non_abelian = 0;
  for (const auto& e : atlas(8)) non_abelian += !e.group->is_abelian();
  EXPECT_EQ(non_abelian, 2u);
}

TEST(Atlas, OrderTwelveHasOneGroupWithSevenInvolutions) {
  std::size_t hits = 0;
  for (const auto& e : atlas(12))
    if (e.group->involutions().size() == 7) {
      ++hits;
      EXPECT_TRUE(are_isomorphic_groups(*e.group, dihedral(12).g()));
    }
  EXPECT_EQ(hits, 1u);
}

TEST(Atlas, OrderTwentyFourContainsS4) {
  std::size_t hits = 0;
  for (const auto& e : atlas(24)) hits += are_isomorphic_groups(*e.group, symmetric(4));
  EXPECT_EQ(hits, 1u);
}

TEST(Atlas, OrderSixtyContainsA5) {
  std::size_t simple_like = 0;
  for (const auto& e : atlas(60)) simple_like += e.group->involutions().size() == 15 && !e.group->is_abelian() &&
                                                 e.group->order_statistics()[5] == 24;
  EXPECT_EQ(simple_like, 1u);
}

TEST(Atlas, UnsupportedOrders) {
  EXPECT_FALSE(atlas_supports(48));
  EXPECT_THROW(atlas(48), UnsupportedOrder);
  try {
    atlas(28);
  } catch (const UnsupportedOrder& e) {
    EXPECT_EQ(e.order(), 28u);
  }
}

TEST(Atlas, CachedAndStable) {
  const auto* first = &atlas(16);
  EXPECT_EQ(first, &atlas(16));
}
