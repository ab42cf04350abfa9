#pragma once

#include <initializer_list>
#include <optional>
#include <vector>

#include "frl/frl.hpp"

inline frl::SimplicialComplex cx(std::initializer_list<std::initializer_list<int>> facets,
                                 std::optional<frl::FaceSet> ambient = std::nullopt) {
  std::vector<frl::FaceSet> faces;
  for (auto f : facets) faces.push_back(frl::FaceSet(f));
  return frl::SimplicialComplex::from_facets(faces, ambient);
}

inline std::vector<frl::FaceSet> sets(std::initializer_list<std::initializer_list<int>> list) {
  std::vector<frl::FaceSet> out;
  for (auto f : list) out.push_back(frl::FaceSet(f));
  return out;
}

/// {123,234,345,456,567}: connected line graph, shellable.
inline frl::SimplicialComplex strip_example() { return cx({{1, 2, 3}, {2, 3, 4}, {3, 4, 5}, {4, 5, 6}, {5, 6, 7}}); }

/// {123,234,345,456,156}: line graph is a 5-path but no vertex is simplicial.
inline frl::SimplicialComplex nonchordal_example() {
  return cx({{1, 2, 3}, {2, 3, 4}, {3, 4, 5}, {4, 5, 6}, {1, 5, 6}});
}

#define EXPECT_FRL_ERROR(statement, expected_kind)                                            \
  do {                                                                                        \
    try {                                                                                     \
      statement;                                                                              \
      ADD_FAILURE() << "expected " << frl::to_string(expected_kind);                          \
    } catch (const frl::Error& e) {                                                           \
      EXPECT_EQ(e.kind(), expected_kind) << e.what();                                         \
    }                                                                                         \
  } while (0)
