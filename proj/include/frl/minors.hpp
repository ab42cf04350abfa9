#pragma once

#include <cstdint>
#include <functional>
#include <unordered_map>
#include <vector>

#include "frl/budget.hpp"
#include "frl/complex.hpp"

namespace frl {

namespace detail {

inline void require_vertex(const SimplicialComplex& complex, Vertex v) {
  if (!complex.ambient().contains(v)) {
    throw Error(ErrorKind::UnknownVertex, std::to_string(v) + " not in ambient " + complex.ambient().to_string());
  }
}

}  // namespace detail

/// Δ \ v: facets avoiding v, on ambient minus v. May be void.
inline SimplicialComplex deletion(const SimplicialComplex& complex, Vertex v) {
  detail::require_vertex(complex, v);
  std::vector<FaceSet> kept;
  for (FaceSet f : complex.facets()) {
    if (!f.contains(v)) kept.push_back(f);
  }
  FaceSet ambient = complex.ambient().without(v);
  if (kept.empty()) return SimplicialComplex::void_complex(ambient);
  return SimplicialComplex::from_facets(std::move(kept), ambient);
}

/// Δ / v: every facet loses v, then dominated results are dropped.
inline SimplicialComplex contraction(const SimplicialComplex& complex, Vertex v) {
  detail::require_vertex(complex, v);
  FaceSet ambient = complex.ambient().without(v);
  if (complex.is_void()) return SimplicialComplex::void_complex(ambient);
  std::vector<FaceSet> faces;
  for (FaceSet f : complex.facets()) faces.push_back(f.without(v));
  return SimplicialComplex::from_facets(std::move(faces), ambient);
}

/// A vertex lying in exactly one facet.
inline bool is_free_vertex(const SimplicialComplex& complex, Vertex v) {
  detail::require_vertex(complex, v);
  return std::count_if(complex.facets().begin(), complex.facets().end(),
                       [v](FaceSet f) { return f.contains(v); }) == 1;
}

/// For any two distinct facets through v some facet lies inside their union minus v.
/// A vertex in at most one facet is simplicial vacuously.
inline bool is_simplicial_vertex(const SimplicialComplex& complex, Vertex v) {
  detail::require_vertex(complex, v);
  std::vector<FaceSet> through;
  for (FaceSet f : complex.facets()) {
    if (f.contains(v)) through.push_back(f);
  }
  for (std::size_t i = 0; i < through.size(); ++i) {
    for (std::size_t j = i + 1; j < through.size(); ++j) {
      FaceSet target = (through[i] | through[j]).without(v);
      bool found = std::any_of(complex.facets().begin(), complex.facets().end(),
                               [&](FaceSet g) { return g.is_subset_of(target); });
      if (!found) return false;
    }
  }
  return true;
}

namespace detail {

struct MinorKeyHash {
  std::size_t operator()(const std::vector<std::uint64_t>& key) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (std::uint64_t word : key) {
      h ^= std::hash<std::uint64_t>{}(word) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

/// Decides "every minor satisfies `local`" by recursion over single-vertex
/// deletions and contractions, memoized on (ambient, facets).
class MinorClosedCheck {
 public:
  using Local = std::function<bool(const SimplicialComplex&, Vertex)>;

  MinorClosedCheck(Local local, const Budget& budget, std::string what)
      : local_(std::move(local)), limit_(budget.nodes), what_(std::move(what)) {}

  bool holds(const SimplicialComplex& complex) {
    if (complex.facet_count() <= 1) return true;
    auto key = make_key(complex);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    if (memo_.size() >= limit_) {
      throw Error(ErrorKind::BudgetExceeded, what_ + " memo exceeded " + std::to_string(limit_) + " minors");
    }
    bool ok = false;
    for (Vertex v : complex.ambient()) {
      if (local_(complex, v)) {
        ok = true;
        break;
      }
    }
    for (auto it = complex.ambient().begin(); ok && it != complex.ambient().end(); ++it) {
      ok = holds(deletion(complex, *it)) && holds(contraction(complex, *it));
    }
    memo_.emplace(std::move(key), ok);
    return ok;
  }

 private:
  static std::vector<std::uint64_t> make_key(const SimplicialComplex& complex) {
    std::vector<std::uint64_t> key;
    key.reserve(complex.facet_count() + 1);
    key.push_back(complex.ambient().bits());
    for (FaceSet f : complex.facets()) key.push_back(f.bits());
    return key;
  }

  Local local_;
  std::size_t limit_;
  std::string what_;
  std::unordered_map<std::vector<std::uint64_t>, bool, MinorKeyHash> memo_;
};

}  // namespace detail

/// Chordal in the clutter sense: every minor (including Δ itself) has a simplicial
/// vertex. Void and single-facet complexes are chordal.
inline bool is_chordal_complex(const SimplicialComplex& complex, const Budget& budget = Budget::from_env()) {
  detail::MinorClosedCheck check(
      [](const SimplicialComplex& c, Vertex v) { return is_simplicial_vertex(c, v); }, budget,
      "chordality");
  return check.holds(complex);
}

/// Every minor has a free vertex.
inline bool has_free_vertex_property(const SimplicialComplex& complex, const Budget& budget = Budget::from_env()) {
  detail::MinorClosedCheck check([](const SimplicialComplex& c, Vertex v) { return is_free_vertex(c, v); }, budget,
                                 "free-vertex property");
  return check.holds(complex);
}

}  // namespace frl
