#include <gtest/gtest.h>

#include <random>

#include "helpers.hpp"
#include "oracles.hpp"

using frl::ErrorKind;
using frl::FaceSet;
using frl::SimplicialComplex;

TEST(Complex, FromFacetsDropsDominatedFaces) {
  auto c = cx({{1, 2}, {2}, {2, 3}});
  EXPECT_EQ(c.facets(), sets({{1, 2}, {2, 3}}));
  EXPECT_EQ(c.ambient(), FaceSet({1, 2, 3}));
}

TEST(Complex, FromFacetsErrors) {
  EXPECT_FRL_ERROR(SimplicialComplex::from_facets({}), ErrorKind::EmptyInput);
  EXPECT_FRL_ERROR(cx({{1, 5}}, FaceSet{1, 2}), ErrorKind::OutOfAmbient);
}

TEST(Complex, DimensionAndPurity) {
  auto a = cx({{1, 2, 3}, {2, 3, 4}});
  EXPECT_EQ(a.dimension(), 2);
  EXPECT_TRUE(a.is_pure());
  auto b = cx({{1, 2}, {3}});
  EXPECT_EQ(b.dimension(), 1);
  EXPECT_FALSE(b.is_pure());
  auto strip = strip_example();
  EXPECT_EQ(strip.facet_count(), 5U);
  EXPECT_EQ(strip.dimension(), 2);
  EXPECT_TRUE(strip.is_pure());
  EXPECT_EQ(SimplicialComplex::void_complex(FaceSet{1, 2}).dimension(), -1);
}

TEST(Complex, ContainsFace) {
  auto c = cx({{1, 2, 3}, {3, 4}});
  EXPECT_TRUE(c.contains_face(FaceSet{1, 3}));
  EXPECT_TRUE(c.contains_face(FaceSet{}));
  EXPECT_FALSE(c.contains_face(FaceSet{1, 4}));
}

TEST(Complex, Join) {
  EXPECT_EQ(frl::join(cx({{1}, {2}, {3}}), cx({{4}})), cx({{1, 4}, {2, 4}, {3, 4}}));
  EXPECT_EQ(frl::join(cx({{1, 2}}), cx({{3, 4}})), cx({{1, 2, 3, 4}}));
  EXPECT_FRL_ERROR(frl::join(cx({{1}, {2}}), cx({{1}})), ErrorKind::OverlappingAmbients);
}

TEST(Complex, Complement) {
  auto c = frl::complement_complex(cx({{1, 2, 3}, {2, 3, 4}}, FaceSet{1, 2, 3, 4}));
  EXPECT_EQ(c.facets(), sets({{1}, {4}}));
  EXPECT_FRL_ERROR(frl::complement_complex(cx({{1, 2}}, FaceSet{1, 2})), ErrorKind::DegenerateComplement);
}

TEST(Complex, ComplementOfPureComplexIsPureOfComplementaryDimension) {
  for (int seed = 0; seed < 50; ++seed) {
    auto c = frl::random_pure_complex(7, 3, 4, static_cast<std::uint64_t>(seed));
    auto co = frl::complement_complex(c);
    EXPECT_TRUE(co.is_pure());
    EXPECT_EQ(co.dimension(), 7 - 3 - 1);
    EXPECT_EQ(frl::complement_complex(co), c);
  }
}

TEST(Complex, MinimalNonfacesAndDual) {
  auto c = cx({{1, 2}, {2, 3}});
  EXPECT_EQ(frl::minimal_nonfaces(c), sets({{1, 3}}));
  EXPECT_EQ(frl::alexander_dual(c), cx({{2}}, FaceSet{1, 2, 3}));
  auto simplex = cx({{1, 2, 3}});
  EXPECT_TRUE(frl::minimal_nonfaces(simplex).empty());
  EXPECT_TRUE(frl::alexander_dual(simplex).is_void());
}

TEST(Complex, DualSrIdealIsFacetIdealOfComplement) {
  auto strip = strip_example();
  auto dual_sr = frl::stanley_reisner_ideal(frl::alexander_dual(strip));
  EXPECT_EQ(dual_sr, frl::facet_ideal(frl::complement_complex(strip)));
}

TEST(Complex, IndependenceComplex) {
  auto triangle = frl::Clutter::from_circuits(sets({{1, 2}, {1, 3}, {2, 3}}));
  EXPECT_EQ(frl::independence_complex(triangle), cx({{1}, {2}, {3}}));
  auto single = frl::Clutter::from_circuits(sets({{1, 2}}), FaceSet{1, 2, 3});
  EXPECT_EQ(frl::independence_complex(single).facets(), sets({{1, 3}, {2, 3}}));
  EXPECT_FRL_ERROR(frl::Clutter::from_circuits(sets({{1, 2}, {1}})), ErrorKind::NotAntichain);
}

TEST(Complex, StanleyReisnerComplexOfFacetIdealIsIndependenceComplex) {
  auto strip = strip_example();
  EXPECT_EQ(frl::stanley_reisner_complex(frl::facet_ideal(strip)), frl::independence_complex(frl::clutter_of(strip)));
}

// Random complexes (not necessarily pure) on up to 7 vertices against subset enumeration.
class ComplexOracle : public ::testing::TestWithParam<int> {};

TEST_P(ComplexOracle, NonfacesDualAndIndependenceMatchEnumeration) {
  std::mt19937_64 rng(static_cast<std::uint64_t>(GetParam()));
  const int n = 3 + static_cast<int>(rng() % 5);
  std::vector<FaceSet> faces;
  int count = 1 + static_cast<int>(rng() % 5);
  for (int k = 0; k < count; ++k) {
    FaceSet f = FaceSet::from_bits(rng() & ((std::uint64_t{1} << n) - 1));
    if (f.empty()) f.insert(1);
    faces.push_back(f);
  }
  auto c = SimplicialComplex::from_facets(faces, FaceSet::interval(1, n));
  EXPECT_EQ(frl::minimal_nonfaces(c), oracle::minimal_nonfaces(c));
  auto dual = frl::alexander_dual(c);
  if (!dual.is_void()) {
    EXPECT_EQ(dual.facets(), oracle::alexander_dual_facets(c));
    EXPECT_EQ(frl::alexander_dual(dual), c);
  }
  auto clutter = frl::clutter_of(c);
  EXPECT_EQ(frl::independence_complex(clutter).facets(), oracle::independence_facets(c.facets(), c.ambient()));
}

INSTANTIATE_TEST_SUITE_P(Random, ComplexOracle, ::testing::Range(0, 150));
