#pragma once

#include <deque>
#include <optional>
#include <vector>

#include "frl/budget.hpp"
#include "frl/complex.hpp"
#include "frl/graph.hpp"

namespace frl {

namespace detail {

/// Assigns a d-subset of {1..max_vertices} to every graph vertex, in BFS order,
/// so that two vertices are adjacent iff their sets meet in d-1 elements.
/// The first set is {1..d}; vertices above the largest label used so far are
/// only introduced in increasing order, which removes relabelling symmetry.
class RealizationSearch {
 public:
  RealizationSearch(const Graph& g, int d, int max_vertices, const Budget& budget)
      : g_(g), d_(d), max_vertices_(max_vertices), counter_(budget, "realizability search") {
    std::vector<bool> seen(g.order(), false);
    for (std::size_t root = 0; root < g.order(); ++root) {
      if (seen[root]) continue;
      std::deque<std::size_t> queue{root};
      seen[root] = true;
      while (!queue.empty()) {
        std::size_t u = queue.front();
        queue.pop_front();
        order_.push_back(u);
        for (std::size_t v : g.neighbors(u)) {
          if (!seen[v]) {
            seen[v] = true;
            queue.push_back(v);
          }
        }
      }
    }
    assigned_.assign(g.order(), FaceSet{});
  }

  std::optional<SimplicialComplex> run() {
    if (!place(0, 0)) return std::nullopt;
    return SimplicialComplex::from_facets(assigned_);
  }

 private:
  bool place(std::size_t depth, int max_used) {
    counter_.tick();
    if (depth == order_.size()) return true;
    std::size_t u = order_[depth];
    const int limit = std::min(max_vertices_, max_used + d_);
    std::vector<Vertex> chosen;
    return choose(depth, u, 1, limit, max_used, chosen);
  }

  bool choose(std::size_t depth, std::size_t u, int next, int limit, int max_used, std::vector<Vertex>& chosen) {
    if (static_cast<int>(chosen.size()) == d_) {
      FaceSet candidate = FaceSet::from_range(chosen);
      // New labels must be exactly max_used+1, max_used+2, ... in order.
      int fresh = 0;
      for (Vertex v : chosen) {
        if (v > max_used) {
          if (v != max_used + fresh + 1) return false;
          ++fresh;
        }
      }
      for (std::size_t k = 0; k < depth; ++k) {
        std::size_t w = order_[k];
        if (assigned_[w] == candidate) return false;
        bool adjacent = (assigned_[w] & candidate).size() + 1 == static_cast<std::size_t>(d_);
        if (adjacent != g_.has_edge(u, w)) return false;
      }
      assigned_[u] = candidate;
      return place(depth + 1, max_used + fresh);
    }
    for (int v = next; v <= limit; ++v) {
      if (static_cast<int>(chosen.size()) + (limit - v + 1) < d_) break;
      chosen.push_back(v);
      if (choose(depth, u, v + 1, limit, max_used, chosen)) return true;
      chosen.pop_back();
    }
    return false;
  }

  const Graph& g_;
  int d_;
  int max_vertices_;
  NodeCounter counter_;
  std::vector<std::size_t> order_;
  std::vector<FaceSet> assigned_;
};

}  // namespace detail

/// Searches for a pure (d-1)-dimensional complex on at most `max_vertices`
/// vertices whose line graph is isomorphic to G. nullopt means no such complex
/// exists within the vertex bound.
inline std::optional<SimplicialComplex> realizability_search(const Graph& g, int d, int max_vertices,
                                                             const Budget& budget = Budget::from_env()) {
  if (d < 2) throw Error(ErrorKind::BadParameters, "realizability needs d >= 2");
  if (g.order() == 0) throw Error(ErrorKind::BadParameters, "graph has no vertices");
  if (max_vertices > FaceSet::max_vertex) throw Error(ErrorKind::BadParameters, "max_vertices too large");
  if (max_vertices < d) return std::nullopt;
  return detail::RealizationSearch(g, d, max_vertices, budget).run();
}

}  // namespace frl
