#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "frl/budget.hpp"
#include "frl/complex.hpp"
#include "frl/graph.hpp"

namespace frl {

/// L(Δ) together with the facet behind each graph vertex.
/// Graph vertex v stands for facet `facet_of[v]` (0-based index into Δ.facets()).
struct LabeledLineGraph {
  Graph graph;
  std::vector<std::size_t> facet_of;
};

enum class TriangleType {
  RidgeShared,  ///< the three facets share a common ridge (|F∩G∩H| = d-1)
  SimplexType,  ///< the three facets are d-subsets of one (d+1)-set (|F∩G∩H| = d-2)
};

inline std::string_view to_string(TriangleType t) {
  return t == TriangleType::RidgeShared ? "RidgeShared" : "SimplexType";
}

/// Readings of "disjoint triangles" in the β_{2,d+1} correction term.
enum class NtInterpretation {
  AllSimplexType,          ///< every SimplexType triangle
  MaxDisjointSimplexType,  ///< largest family of pairwise vertex-disjoint SimplexType triangles
  IsolatedSimplexType,     ///< SimplexType triangles sharing no vertex with any other triangle
};

inline constexpr std::array<NtInterpretation, 3> all_interpretations{
    NtInterpretation::AllSimplexType, NtInterpretation::MaxDisjointSimplexType,
    NtInterpretation::IsolatedSimplexType};

inline std::string_view to_string(NtInterpretation i) {
  switch (i) {
    case NtInterpretation::AllSimplexType: return "AllSimplexType";
    case NtInterpretation::MaxDisjointSimplexType: return "MaxDisjointSimplexType";
    case NtInterpretation::IsolatedSimplexType: return "IsolatedSimplexType";
  }
  return "?";
}

struct ClassifiedTriangle {
  std::array<std::size_t, 3> facets;
  TriangleType type;
};

enum class CompleteForm { Cone, SimplexSubsets, Neither };

inline std::string_view to_string(CompleteForm f) {
  switch (f) {
    case CompleteForm::Cone: return "Cone";
    case CompleteForm::SimplexSubsets: return "SimplexSubsets";
    case CompleteForm::Neither: return "Neither";
  }
  return "?";
}

namespace detail {

/// Facet size d of a pure complex; rejects void and non-pure input.
inline std::size_t pure_facet_size(const SimplicialComplex& complex) {
  if (complex.is_void()) throw Error(ErrorKind::EmptyInput, "void complex");
  if (!complex.is_pure()) throw Error(ErrorKind::NotPure, complex.to_string() + " is not pure");
  return complex.facets().front().size();
}

}  // namespace detail

inline LabeledLineGraph line_graph(const SimplicialComplex& complex) {
  std::size_t d = detail::pure_facet_size(complex);
  if (d < 2) throw Error(ErrorKind::DimensionTooSmall, "line graphs need facets of size at least 2");
  const auto& facets = complex.facets();
  LabeledLineGraph out{Graph(facets.size()), {}};
  for (std::size_t i = 0; i < facets.size(); ++i) {
    out.facet_of.push_back(i);
    for (std::size_t j = i + 1; j < facets.size(); ++j) {
      if ((facets[i] & facets[j]).size() == d - 1) out.graph.add_edge(i, j);
    }
  }
  return out;
}

/// s_i = number of later facets meeting F_i in a ridge.
inline std::vector<std::size_t> ridge_counts(const SimplicialComplex& complex) {
  std::size_t d = detail::pure_facet_size(complex);
  const auto& facets = complex.facets();
  std::vector<std::size_t> s(facets.size(), 0);
  for (std::size_t i = 0; i < facets.size(); ++i) {
    for (std::size_t j = i + 1; j < facets.size(); ++j) {
      if ((facets[i] & facets[j]).size() + 1 == d) ++s[i];
    }
  }
  return s;
}

inline std::size_t edge_count_formula(const SimplicialComplex& complex) {
  auto s = ridge_counts(complex);
  std::size_t total = 0;
  for (auto v : s) total += v;
  return total;
}

/// Both routes to |E(L(Δ))| plus the degree-sum identity.
struct EdgeCountCheck {
  std::size_t formula = 0;      ///< Σ s_i
  std::size_t counted = 0;      ///< |E(L(Δ))| from the constructed graph
  std::size_t degree_sum = 0;   ///< Σ deg(v_i)
  bool holds() const noexcept { return formula == counted && degree_sum == 2 * formula; }
};

inline EdgeCountCheck edge_count_identities(const SimplicialComplex& complex) {
  EdgeCountCheck check;
  check.formula = edge_count_formula(complex);
  auto lg = line_graph(complex);
  check.counted = lg.graph.edge_count();
  for (std::size_t v = 0; v < lg.graph.order(); ++v) check.degree_sum += lg.graph.degree(v);
  return check;
}

inline std::vector<ClassifiedTriangle> classify_triangles(const SimplicialComplex& complex) {
  auto lg = line_graph(complex);
  std::size_t d = complex.facets().front().size();
  const auto& facets = complex.facets();
  std::vector<ClassifiedTriangle> out;
  for (auto tri : triangles(lg.graph)) {
    std::size_t common = (facets[tri[0]] & facets[tri[1]] & facets[tri[2]]).size();
    if (common + 1 == d) {
      out.push_back({tri, TriangleType::RidgeShared});
    } else if (common + 2 == d) {
      out.push_back({tri, TriangleType::SimplexType});
    } else {
      throw std::logic_error("triangle with triple intersection " + std::to_string(common));
    }
  }
  return out;
}

namespace detail {

class DisjointTrianglePacking {
 public:
  DisjointTrianglePacking(std::vector<std::array<std::size_t, 3>> tris, const Budget& budget)
      : tris_(std::move(tris)), counter_(budget, "disjoint triangle packing") {}

  std::size_t run() {
    std::vector<bool> used_vertex;
    for (auto& t : tris_) {
      for (auto v : t) {
        if (v >= used_vertex.size()) used_vertex.resize(v + 1, false);
      }
    }
    used_ = std::move(used_vertex);
    search(0, 0);
    return best_;
  }

 private:
  void search(std::size_t index, std::size_t taken) {
    counter_.tick();
    best_ = std::max(best_, taken);
    if (index == tris_.size() || taken + (tris_.size() - index) <= best_) return;
    const auto& t = tris_[index];
    if (!used_[t[0]] && !used_[t[1]] && !used_[t[2]]) {
      for (auto v : t) used_[v] = true;
      search(index + 1, taken + 1);
      for (auto v : t) used_[v] = false;
    }
    search(index + 1, taken);
  }

  std::vector<std::array<std::size_t, 3>> tris_;
  std::vector<bool> used_;
  NodeCounter counter_;
  std::size_t best_ = 0;
};

}  // namespace detail

inline std::size_t count_Nt(const SimplicialComplex& complex, NtInterpretation interp,
                            const Budget& budget = Budget::from_env()) {
  auto classified = classify_triangles(complex);
  std::vector<std::array<std::size_t, 3>> simplex_type;
  for (const auto& c : classified) {
    if (c.type == TriangleType::SimplexType) simplex_type.push_back(c.facets);
  }
  switch (interp) {
    case NtInterpretation::AllSimplexType:
      return simplex_type.size();
    case NtInterpretation::MaxDisjointSimplexType:
      return detail::DisjointTrianglePacking(simplex_type, budget).run();
    case NtInterpretation::IsolatedSimplexType: {
      std::size_t isolated = 0;
      for (const auto& t : simplex_type) {
        bool alone = std::none_of(classified.begin(), classified.end(), [&](const ClassifiedTriangle& other) {
          if (other.facets == t) return false;
          return std::any_of(t.begin(), t.end(), [&](std::size_t v) {
            return std::find(other.facets.begin(), other.facets.end(), v) != other.facets.end();
          });
        });
        if (alone) ++isolated;
      }
      return isolated;
    }
  }
  return 0;
}

/// |E(L(Δ))| - N_t under the chosen reading.
inline long long predicted_beta2(const SimplicialComplex& complex, NtInterpretation interp,
                                 const Budget& budget = Budget::from_env()) {
  auto edges = static_cast<long long>(line_graph(complex).graph.edge_count());
  return edges - static_cast<long long>(count_Nt(complex, interp, budget));
}

/// Cone: all facets are H ∪ {x} for a common (d-1)-set H.
/// SimplexSubsets: all facets are d-subsets of one (d+1)-set.
/// Cone is reported when both hold (two adjacent facets).
inline CompleteForm characterize_complete(const SimplicialComplex& complex) {
  std::size_t d = detail::pure_facet_size(complex);
  FaceSet common = complex.facets().front();
  for (FaceSet f : complex.facets()) common = common & f;
  if (complex.facet_count() >= 2 && common.size() + 1 == d) return CompleteForm::Cone;
  if (complex.facet_count() >= 2 && complex.support().size() == d + 1) return CompleteForm::SimplexSubsets;
  return CompleteForm::Neither;
}

}  // namespace frl
