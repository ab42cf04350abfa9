#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "frl/budget.hpp"
#include "frl/complex.hpp"
#include "frl/line_graph.hpp"

// Generators for the complexes whose line graphs are complete graphs or cycles,
// and the structural test for the cycle family.

namespace frl {

namespace detail {

inline void require(bool ok, const char* message) {
  if (!ok) throw Error(ErrorKind::BadParameters, message);
}

}  // namespace detail

/// r-cone: facets {i} ∪ H for i = 1..r with H = {r+1, ..., r+d-1}. L = K_r.
inline SimplicialComplex make_cone(int r, int d) {
  detail::require(r >= 1 && d >= 2, "make_cone needs r >= 1, d >= 2");
  detail::require(r + d - 1 <= FaceSet::max_vertex, "make_cone: too many vertices");
  FaceSet h = FaceSet::interval(r + 1, r + d - 1);
  std::vector<FaceSet> facets;
  for (Vertex i = 1; i <= r; ++i) facets.push_back(h | FaceSet{i});
  return SimplicialComplex::from_facets(std::move(facets));
}

/// The first `count` d-subsets (canonical order) of {1, ..., d+1}. L = K_count.
inline SimplicialComplex make_simplex_subsets(int d, int count) {
  detail::require(d >= 2 && count >= 1 && count <= d + 1, "make_simplex_subsets needs d >= 2, 1 <= count <= d+1");
  FaceSet simplex = FaceSet::interval(1, d + 1);
  std::vector<FaceSet> all;
  for (Vertex v : simplex) all.push_back(simplex.without(v));
  std::sort(all.begin(), all.end());
  all.resize(static_cast<std::size_t>(count));
  return SimplicialComplex::from_facets(std::move(all), simplex);
}

enum class TriangleJoinCase {
  Vertices,  ///< <{1},{2},{3}> * (d-2)-simplex
  Edges,     ///< <{1,2},{1,3},{2,3}> * (d-3)-simplex
};

/// The two three-facet complexes with L = C_3. For d = 2 the Edges case joins
/// with the empty simplex, i.e. it is the boundary of a triangle.
inline SimplicialComplex make_triangle_join(int d, TriangleJoinCase which) {
  detail::require(d >= 2 && d + 2 <= FaceSet::max_vertex, "make_triangle_join needs d >= 2");
  std::vector<FaceSet> base;
  FaceSet gamma;
  if (which == TriangleJoinCase::Vertices) {
    base = {FaceSet{1}, FaceSet{2}, FaceSet{3}};
    gamma = FaceSet::interval(4, d + 2);
  } else {
    base = {FaceSet{1, 2}, FaceSet{1, 3}, FaceSet{2, 3}};
    gamma = FaceSet::interval(4, d + 1);
  }
  std::vector<FaceSet> facets;
  for (FaceSet f : base) facets.push_back(f | gamma);
  return SimplicialComplex::from_facets(std::move(facets));
}

/// Complex built from the r-cycle 1..r as follows:
///   d <  r-1: the r cyclic windows of d consecutive vertices;
///   d >= r-1: the r cyclic windows of r-1 consecutive vertices, each joined
///             with H = {r+1, ..., d+1} (|H| = d-r+1).
inline SimplicialComplex make_cycle_complex(int r, int d) {
  detail::require(r >= 4 && d >= 2, "make_cycle_complex needs r >= 4, d >= 2");
  detail::require(std::max(r, d + 1) <= FaceSet::max_vertex, "make_cycle_complex: too many vertices");
  const int window = d < r - 1 ? d : r - 1;
  FaceSet h = d < r - 1 ? FaceSet{} : FaceSet::interval(r + 1, d + 1);
  std::vector<FaceSet> facets;
  for (int start = 0; start < r; ++start) {
    FaceSet f = h;
    for (int k = 0; k < window; ++k) f.insert((start + k) % r + 1);
    facets.push_back(f);
  }
  return SimplicialComplex::from_facets(std::move(facets));
}

/// Whether a pure complex with r >= 4 facets has the shape of the cycle family:
/// for d < r-1 its facets are the d-windows of some cyclic order on r vertices;
/// for d >= r-1 they share a (d-r+1)-set H and the rests are the (r-1)-windows
/// of a cyclic order on r vertices.
inline bool matches_cycle_family(const SimplicialComplex& complex) {
  std::size_t d = detail::pure_facet_size(complex);
  std::size_t r = complex.facet_count();
  if (r < 4) return false;
  std::vector<FaceSet> rests = complex.facets();
  std::size_t window = d;
  if (d + 1 >= r) {
    FaceSet common = rests.front();
    for (FaceSet f : rests) common = common & f;
    if (common.size() != d + 1 - r) return false;
    for (auto& f : rests) f = f - common;
    window = r - 1;
  }
  FaceSet support;
  for (FaceSet f : rests) support = support | f;
  if (support.size() != r) return false;
  if (r > 10) throw Error(ErrorKind::BudgetExceeded, "cyclic order search capped at 10 vertices");
  std::sort(rests.begin(), rests.end());
  std::vector<Vertex> order = support.members();
  // Fix the first vertex; try every arrangement of the rest.
  do {
    std::vector<FaceSet> windows;
    for (std::size_t start = 0; start < r; ++start) {
      FaceSet w;
      for (std::size_t k = 0; k < window; ++k) w.insert(order[(start + k) % r]);
      windows.push_back(w);
    }
    std::sort(windows.begin(), windows.end());
    if (windows == rests) return true;
  } while (std::next_permutation(order.begin() + 1, order.end()));
  return false;
}

}  // namespace frl
