#include <gtest/gtest.h>

#include "helpers.hpp"
#include "oracles.hpp"

using frl::ErrorKind;

TEST(Shelling, StripIsShelledInListedOrder) {
  auto order = frl::is_shellable(strip_example());
  ASSERT_TRUE(order.has_value());
  EXPECT_EQ(*order, (std::vector<std::size_t>{0, 1, 2, 3, 4}));
}

TEST(Shelling, SmallCases) {
  EXPECT_TRUE(frl::is_shellable(cx({{1, 2, 3}})).has_value());
  EXPECT_FALSE(frl::is_shellable(cx({{1, 2}, {3, 4}})).has_value());
  EXPECT_FALSE(frl::is_shellable(nonchordal_example()).has_value());
  EXPECT_FRL_ERROR(frl::is_shellable(cx({{1, 2}, {3}})), ErrorKind::NotPure);
}

TEST(Shelling, NonpureVariant) {
  // Triangle first, then an edge meeting it in a vertex: the intersection is pure of dimension 0.
  EXPECT_TRUE(frl::is_shellable_nonpure(cx({{1, 2, 3}, {3, 4}})).has_value());
  EXPECT_TRUE(frl::is_shellable_nonpure(cx({{1, 2}, {3}})).has_value());
  EXPECT_FALSE(frl::is_shellable_nonpure(cx({{1, 2, 3}, {3, 4, 5}})).has_value());
  EXPECT_FALSE(frl::is_shellable_nonpure(cx({{1, 2, 3}, {4, 5}})).has_value());
  EXPECT_TRUE(frl::is_shellable_nonpure(strip_example()).has_value());
  auto order = frl::is_shellable_nonpure(cx({{3, 4}, {1, 2, 3}}));
  ASSERT_TRUE(order.has_value());
  EXPECT_EQ(*order, (std::vector<std::size_t>{0, 1}));  // facets sort as {1,2,3}, {3,4}
}

TEST(Shelling, WitnessSatisfiesTheExchangeCondition) {
  std::size_t checked = 0;
  for (int seed = 0; seed < 200; ++seed) {
    auto c = frl::random_pure_complex(6, 3, 3 + seed % 5, static_cast<std::uint64_t>(seed));
    auto order = frl::is_shellable(c);
    if (!order) continue;
    ++checked;
    const auto& f = c.facets();
    for (std::size_t j = 1; j < order->size(); ++j) {
      for (std::size_t i = 0; i < j; ++i) {
        bool found = false;
        for (auto v : f[(*order)[j]] - f[(*order)[i]]) {
          for (std::size_t l = 0; l < j; ++l) found = found || (f[(*order)[j]] - f[(*order)[l]]) == frl::FaceSet{v};
        }
        EXPECT_TRUE(found) << c.to_string() << " " << i << " " << j;
      }
    }
  }
  EXPECT_GT(checked, 20U);
}

TEST(Shelling, ClosedWindowStripsAreNotShellable) {
  // Annulus / Mobius strip: nonzero first homology below the top dimension.
  EXPECT_FALSE(frl::is_shellable(frl::make_cycle_complex(6, 3)).has_value());
  EXPECT_FALSE(frl::is_shellable(frl::make_cycle_complex(7, 3)).has_value());
}

class ShellingOracle : public ::testing::TestWithParam<int> {};

TEST_P(ShellingOracle, MatchesPermutationSearch) {
  const int r = 2 + GetParam() % 5;
  auto c = frl::random_pure_complex(6, 3, r, static_cast<std::uint64_t>(GetParam()) * 7 + 1);
  EXPECT_EQ(frl::is_shellable(c).has_value(), oracle::is_shellable(c)) << c.to_string();
}

INSTANTIATE_TEST_SUITE_P(Random, ShellingOracle, ::testing::Range(0, 150));
