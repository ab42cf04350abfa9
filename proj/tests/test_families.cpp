#include <gtest/gtest.h>

#include "helpers.hpp"

using frl::Graph;

TEST(Families, Cone) {
  auto c = frl::make_cone(3, 2);
  EXPECT_EQ(c.facets(), sets({{1, 4}, {2, 4}, {3, 4}}));
  for (int r = 3; r <= 7; ++r) {
    for (int d = 2; d <= 4; ++d) {
      auto cone = frl::make_cone(r, d);
      EXPECT_TRUE(cone.is_pure());
      EXPECT_EQ(cone.dimension(), d - 1);
      EXPECT_TRUE(frl::are_isomorphic(frl::line_graph(cone).graph, Graph::complete(static_cast<std::size_t>(r))));
      EXPECT_EQ(frl::characterize_complete(cone), frl::CompleteForm::Cone);
    }
  }
}

TEST(Families, SimplexSubsets) {
  for (int d = 2; d <= 5; ++d) {
    auto c = frl::make_simplex_subsets(d, d + 1);
    EXPECT_TRUE(frl::are_isomorphic(frl::line_graph(c).graph, Graph::complete(static_cast<std::size_t>(d + 1))));
    EXPECT_EQ(frl::characterize_complete(c), frl::CompleteForm::SimplexSubsets);
  }
  EXPECT_EQ(frl::make_simplex_subsets(2, 2).facets(), sets({{1, 2}, {1, 3}}));
  EXPECT_FRL_ERROR(frl::make_simplex_subsets(2, 4), frl::ErrorKind::BadParameters);
}

TEST(Families, TriangleJoins) {
  for (int d = 2; d <= 6; ++d) {
    for (auto which : {frl::TriangleJoinCase::Vertices, frl::TriangleJoinCase::Edges}) {
      auto c = frl::make_triangle_join(d, which);
      EXPECT_EQ(c.dimension(), d - 1);
      EXPECT_TRUE(frl::are_isomorphic(frl::line_graph(c).graph, Graph::cycle(3)));
    }
  }
  EXPECT_EQ(frl::make_triangle_join(2, frl::TriangleJoinCase::Vertices).facets(), sets({{1, 4}, {2, 4}, {3, 4}}));
  EXPECT_EQ(frl::make_triangle_join(2, frl::TriangleJoinCase::Edges).facets(), sets({{1, 2}, {1, 3}, {2, 3}}));
}

TEST(Families, CycleComplexWindowBranch) {
  EXPECT_EQ(frl::make_cycle_complex(5, 3).facets(), sets({{1, 2, 3}, {1, 2, 5}, {1, 4, 5}, {2, 3, 4}, {3, 4, 5}}));
  for (int r = 4; r <= 8; ++r) {
    for (int d = 2; d < r - 1; ++d) {
      auto c = frl::make_cycle_complex(r, d);
      EXPECT_TRUE(frl::are_isomorphic(frl::line_graph(c).graph, Graph::cycle(static_cast<std::size_t>(r))))
          << r << "," << d;
      EXPECT_TRUE(frl::matches_cycle_family(c));
    }
  }
}

// Every pair of (r-1)-windows of an r-cycle meets in r-2 vertices, so this branch gives K_r.
TEST(Families, CycleComplexPaddedBranchIsComplete) {
  for (int r = 4; r <= 8; ++r) {
    for (int d = r - 1; d <= r + 1; ++d) {
      auto c = frl::make_cycle_complex(r, d);
      EXPECT_EQ(c.dimension(), d - 1);
      EXPECT_TRUE(frl::are_isomorphic(frl::line_graph(c).graph, Graph::complete(static_cast<std::size_t>(r))));
    }
  }
}

TEST(Families, CycleFamilyRejectsCones) {
  // Cone over a 5-cycle: line graph C_5, but not a window complex.
  auto cone = cx({{1, 2, 3}, {1, 2, 4}, {1, 3, 5}, {1, 4, 6}, {1, 5, 6}});
  EXPECT_TRUE(frl::is_cycle_graph(frl::line_graph(cone).graph));
  EXPECT_FALSE(frl::matches_cycle_family(cone));
}

TEST(Realize, Examples) {
  auto k3 = frl::realizability_search(Graph::complete(3), 2, 4);
  ASSERT_TRUE(k3.has_value());
  EXPECT_TRUE(frl::are_isomorphic(frl::line_graph(*k3).graph, Graph::complete(3)));
  EXPECT_FALSE(frl::realizability_search(Graph::star(3), 2, 6).has_value());
  auto c4 = frl::realizability_search(Graph::cycle(4), 2, 4);
  ASSERT_TRUE(c4.has_value());
  EXPECT_TRUE(frl::are_isomorphic(frl::line_graph(*c4).graph, Graph::cycle(4)));
}

TEST(Realize, StarWithDPlusOneLeavesIsNeverRealized) {
  for (int d = 2; d <= 3; ++d) {
    EXPECT_FALSE(frl::realizability_search(Graph::star(static_cast<std::size_t>(d) + 1), d, 7).has_value());
    EXPECT_TRUE(frl::realizability_search(Graph::star(static_cast<std::size_t>(d)), d, 7).has_value());
  }
}
