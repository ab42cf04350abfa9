#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "frl/budget.hpp"
#include "frl/error.hpp"

namespace frl {

/// Simple undirected graph on vertices 0..order-1, dense adjacency matrix.
class Graph {
 public:
  using Edge = std::pair<std::size_t, std::size_t>;

  Graph() = default;
  explicit Graph(std::size_t order) : order_(order), adj_(order * order, 0) {}

  Graph(std::size_t order, const std::vector<Edge>& edges) : Graph(order) {
    for (auto [u, v] : edges) add_edge(u, v);
  }

  static Graph empty(std::size_t n) { return Graph(n); }

  static Graph path(std::size_t n) {
    Graph g(n);
    for (std::size_t i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
  }

  static Graph cycle(std::size_t n) {
    if (n < 3) throw Error(ErrorKind::BadParameters, "cycles need at least 3 vertices");
    Graph g = path(n);
    g.add_edge(n - 1, 0);
    return g;
  }

  static Graph complete(std::size_t n) {
    Graph g(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) g.add_edge(i, j);
    }
    return g;
  }

  /// K_{1,t}: centre 0, leaves 1..t.
  static Graph star(std::size_t leaves) {
    Graph g(leaves + 1);
    for (std::size_t i = 1; i <= leaves; ++i) g.add_edge(0, i);
    return g;
  }

  std::size_t order() const noexcept { return order_; }

  void add_edge(std::size_t u, std::size_t v) {
    if (u >= order_ || v >= order_) throw Error(ErrorKind::BadParameters, "edge endpoint out of range");
    if (u == v) throw Error(ErrorKind::BadParameters, "loops are not allowed");
    adj_[u * order_ + v] = 1;
    adj_[v * order_ + u] = 1;
  }

  void remove_edge(std::size_t u, std::size_t v) {
    if (u >= order_ || v >= order_) return;
    adj_[u * order_ + v] = 0;
    adj_[v * order_ + u] = 0;
  }

  bool has_edge(std::size_t u, std::size_t v) const noexcept { return adj_[u * order_ + v] != 0; }

  std::vector<std::size_t> neighbors(std::size_t u) const {
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < order_; ++v) {
      if (has_edge(u, v)) out.push_back(v);
    }
    return out;
  }

  std::size_t degree(std::size_t u) const noexcept {
    std::size_t d = 0;
    for (std::size_t v = 0; v < order_; ++v) d += adj_[u * order_ + v];
    return d;
  }

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (std::size_t u = 0; u < order_; ++u) {
      for (std::size_t v = u + 1; v < order_; ++v) {
        if (has_edge(u, v)) out.emplace_back(u, v);
      }
    }
    return out;
  }

  std::size_t edge_count() const noexcept {
    std::size_t twice = 0;
    for (auto a : adj_) twice += a;
    return twice / 2;
  }

  /// Subgraph induced on `keep` (in the given order).
  Graph induced(const std::vector<std::size_t>& keep) const {
    Graph g(keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i) {
      for (std::size_t j = i + 1; j < keep.size(); ++j) {
        if (has_edge(keep[i], keep[j])) g.add_edge(i, j);
      }
    }
    return g;
  }

  bool operator==(const Graph&) const = default;

 private:
  std::size_t order_ = 0;
  std::vector<std::uint8_t> adj_;
};

inline constexpr std::size_t infinite_distance = std::numeric_limits<std::size_t>::max();

/// BFS distances from `source`; unreachable vertices get infinite_distance.
inline std::vector<std::size_t> distances_from(const Graph& g, std::size_t source) {
  std::vector<std::size_t> dist(g.order(), infinite_distance);
  std::deque<std::size_t> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    std::size_t u = queue.front();
    queue.pop_front();
    for (std::size_t v = 0; v < g.order(); ++v) {
      if (g.has_edge(u, v) && dist[v] == infinite_distance) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

inline std::size_t distance(const Graph& g, std::size_t u, std::size_t v) { return distances_from(g, u)[v]; }

inline bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  auto dist = distances_from(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](std::size_t d) { return d == infinite_distance; });
}

/// Maximum pairwise distance; infinite_distance when disconnected.
inline std::size_t diameter(const Graph& g) {
  std::size_t best = 0;
  for (std::size_t u = 0; u < g.order(); ++u) {
    for (std::size_t d : distances_from(g, u)) best = std::max(best, d);
  }
  return best;
}

inline Graph complement(const Graph& g) {
  Graph out(g.order());
  for (std::size_t u = 0; u < g.order(); ++u) {
    for (std::size_t v = u + 1; v < g.order(); ++v) {
      if (!g.has_edge(u, v)) out.add_edge(u, v);
    }
  }
  return out;
}

/// Connected, 2-regular, at least 3 vertices.
inline bool is_cycle_graph(const Graph& g) {
  if (g.order() < 3 || !is_connected(g)) return false;
  for (std::size_t u = 0; u < g.order(); ++u) {
    if (g.degree(u) != 2) return false;
  }
  return true;
}

inline bool is_complete_graph(const Graph& g) { return g.edge_count() * 2 == g.order() * (g.order() - 1); }

inline bool is_clique(const Graph& g, const std::vector<std::size_t>& vertices) {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (!g.has_edge(vertices[i], vertices[j])) return false;
    }
  }
  return true;
}

/// Perfect elimination ordering by repeatedly removing a vertex whose remaining
/// neighbourhood is a clique; nullopt when the graph is not chordal.
inline std::optional<std::vector<std::size_t>> is_chordal_graph(const Graph& g) {
  std::vector<bool> removed(g.order(), false);
  std::vector<std::size_t> order;
  for (std::size_t step = 0; step < g.order(); ++step) {
    bool found = false;
    for (std::size_t u = 0; u < g.order() && !found; ++u) {
      if (removed[u]) continue;
      std::vector<std::size_t> nbrs;
      for (std::size_t v : g.neighbors(u)) {
        if (!removed[v]) nbrs.push_back(v);
      }
      if (is_clique(g, nbrs)) {
        removed[u] = true;
        order.push_back(u);
        found = true;
      }
    }
    if (!found) return std::nullopt;
  }
  return order;
}

/// All 3-cliques (a < b < c), lexicographic.
inline std::vector<std::array<std::size_t, 3>> triangles(const Graph& g) {
  std::vector<std::array<std::size_t, 3>> out;
  for (std::size_t a = 0; a < g.order(); ++a) {
    for (std::size_t b = a + 1; b < g.order(); ++b) {
      if (!g.has_edge(a, b)) continue;
      for (std::size_t c = b + 1; c < g.order(); ++c) {
        if (g.has_edge(a, c) && g.has_edge(b, c)) out.push_back({a, b, c});
      }
    }
  }
  return out;
}

namespace detail {

inline bool has_independent_subset(const Graph& g, const std::vector<std::size_t>& pool, std::size_t start,
                                   std::vector<std::size_t>& chosen, std::size_t want) {
  if (chosen.size() == want) return true;
  if (pool.size() - start < want - chosen.size()) return false;
  for (std::size_t i = start; i < pool.size(); ++i) {
    bool independent = std::none_of(chosen.begin(), chosen.end(),
                                    [&](std::size_t c) { return g.has_edge(c, pool[i]); });
    if (!independent) continue;
    chosen.push_back(pool[i]);
    if (has_independent_subset(g, pool, i + 1, chosen, want)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace detail

/// True iff K_{1,t} is an induced subgraph: some vertex has t pairwise
/// non-adjacent neighbours.
inline bool has_induced_star(const Graph& g, std::size_t t) {
  if (t < 1) throw Error(ErrorKind::BadParameters, "star needs at least one leaf");
  for (std::size_t u = 0; u < g.order(); ++u) {
    auto nbrs = g.neighbors(u);
    std::vector<std::size_t> chosen;
    if (detail::has_independent_subset(g, nbrs, 0, chosen, t)) return true;
  }
  return false;
}

/// L(G): one vertex per edge of G (in `edges()` order), adjacent when the edges share an endpoint.
inline Graph line_graph_of_graph(const Graph& g) {
  auto es = g.edges();
  Graph out(es.size());
  for (std::size_t i = 0; i < es.size(); ++i) {
    for (std::size_t j = i + 1; j < es.size(); ++j) {
      auto [a, b] = es[i];
      auto [c, d] = es[j];
      if (a == c || a == d || b == c || b == d) out.add_edge(i, j);
    }
  }
  return out;
}

namespace detail {

class CliquePartitionSearch {
 public:
  CliquePartitionSearch(const Graph& g, std::size_t max_per_vertex, const Budget& budget)
      : g_(g),
        limit_(max_per_vertex),
        uncovered_(g),
        load_(g.order(), 0),
        remaining_(g.order()),
        counter_(budget, "clique partition search") {
    for (std::size_t u = 0; u < g.order(); ++u) remaining_[u] = g.degree(u);
  }

  std::optional<std::vector<std::vector<std::size_t>>> run() {
    if (solve()) return chosen_;
    return std::nullopt;
  }

 private:
  // A vertex with uncovered edges and no clique slot left is a dead end.
  bool feasible() const {
    for (std::size_t u = 0; u < g_.order(); ++u) {
      if (remaining_[u] > 0 && load_[u] >= limit_) return false;
    }
    return true;
  }

  bool solve() {
    counter_.tick();
    if (!feasible()) return false;
    // Branch on the uncovered edge at the most constrained vertex.
    std::size_t pivot = g_.order();
    for (std::size_t u = 0; u < g_.order(); ++u) {
      if (remaining_[u] == 0) continue;
      if (pivot == g_.order() || limit_ - load_[u] < limit_ - load_[pivot] ||
          (limit_ - load_[u] == limit_ - load_[pivot] && remaining_[u] > remaining_[pivot])) {
        pivot = u;
      }
    }
    if (pivot == g_.order()) return true;
    std::size_t partner = 0;
    while (!uncovered_.has_edge(pivot, partner)) ++partner;

    // Candidates: cliques of the uncovered graph containing pivot and partner,
    // largest first.
    std::vector<std::size_t> common;
    for (std::size_t w = 0; w < g_.order(); ++w) {
      if (w != pivot && w != partner && uncovered_.has_edge(pivot, w) && uncovered_.has_edge(partner, w) &&
          load_[w] < limit_) {
        common.push_back(w);
      }
    }
    std::vector<std::vector<std::size_t>> candidates;
    std::vector<std::size_t> current{pivot, partner};
    enumerate_cliques(common, 0, current, candidates);
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const auto& a, const auto& b) { return a.size() > b.size(); });
    for (auto& clique : candidates) {
      apply(clique, true);
      chosen_.push_back(clique);
      if (solve()) return true;
      chosen_.pop_back();
      apply(clique, false);
    }
    return false;
  }

  void enumerate_cliques(const std::vector<std::size_t>& pool, std::size_t start, std::vector<std::size_t>& current,
                         std::vector<std::vector<std::size_t>>& out) {
    out.push_back(current);
    for (std::size_t i = start; i < pool.size(); ++i) {
      bool ok = std::all_of(current.begin(), current.end(),
                            [&](std::size_t c) { return uncovered_.has_edge(c, pool[i]); });
      if (!ok) continue;
      current.push_back(pool[i]);
      enumerate_cliques(pool, i + 1, current, out);
      current.pop_back();
    }
  }

  void apply(const std::vector<std::size_t>& clique, bool take) {
    for (std::size_t a = 0; a < clique.size(); ++a) {
      load_[clique[a]] = take ? load_[clique[a]] + 1 : load_[clique[a]] - 1;
      for (std::size_t b = a + 1; b < clique.size(); ++b) {
        if (take) {
          uncovered_.remove_edge(clique[a], clique[b]);
          --remaining_[clique[a]];
          --remaining_[clique[b]];
        } else {
          uncovered_.add_edge(clique[a], clique[b]);
          ++remaining_[clique[a]];
          ++remaining_[clique[b]];
        }
      }
    }
  }

  const Graph& g_;
  std::size_t limit_;
  Graph uncovered_;
  std::vector<std::size_t> load_;
  std::vector<std::size_t> remaining_;
  NodeCounter counter_;
  std::vector<std::vector<std::size_t>> chosen_;
};

}  // namespace detail

/// Partitions E(G) into cliques so that every vertex lies in at most
/// `max_per_vertex` of them. Each clique is a sorted vertex list with at least
/// two vertices; isolated vertices belong to none. nullopt if impossible.
inline std::optional<std::vector<std::vector<std::size_t>>> clique_edge_partition(
    const Graph& g, std::size_t max_per_vertex, const Budget& budget = Budget::from_env()) {
  if (max_per_vertex < 1) throw Error(ErrorKind::BadParameters, "need at least one clique per vertex");
  detail::CliquePartitionSearch search(g, max_per_vertex, budget);
  auto result = search.run();
  if (result) {
    for (auto& clique : *result) std::sort(clique.begin(), clique.end());
    std::sort(result->begin(), result->end());
  }
  return result;
}

namespace detail {

class IsomorphismSearch {
 public:
  IsomorphismSearch(const Graph& a, const Graph& b, const Budget& budget)
      : a_(a), b_(b), map_(a.order(), 0), used_(b.order(), false), counter_(budget, "isomorphism search") {
    for (std::size_t u = 0; u < a.order(); ++u) deg_a_.push_back(a.degree(u));
    for (std::size_t u = 0; u < b.order(); ++u) deg_b_.push_back(b.degree(u));
    // Map high-degree vertices first; ties by index.
    for (std::size_t u = 0; u < a.order(); ++u) order_.push_back(u);
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t x, std::size_t y) { return deg_a_[x] > deg_a_[y]; });
  }

  bool run() { return place(0); }

 private:
  bool place(std::size_t depth) {
    counter_.tick();
    if (depth == order_.size()) return true;
    std::size_t u = order_[depth];
    for (std::size_t cand = 0; cand < b_.order(); ++cand) {
      if (used_[cand] || deg_b_[cand] != deg_a_[u]) continue;
      bool consistent = true;
      for (std::size_t k = 0; k < depth && consistent; ++k) {
        std::size_t w = order_[k];
        consistent = a_.has_edge(u, w) == b_.has_edge(cand, map_[w]);
      }
      if (!consistent) continue;
      map_[u] = cand;
      used_[cand] = true;
      if (place(depth + 1)) return true;
      used_[cand] = false;
    }
    return false;
  }

  const Graph& a_;
  const Graph& b_;
  std::vector<std::size_t> deg_a_, deg_b_, order_, map_;
  std::vector<bool> used_;
  NodeCounter counter_;
};

}  // namespace detail

inline constexpr std::size_t isomorphism_order_cap = 12;

/// Exact isomorphism test by backtracking with degree pruning; orders above
/// isomorphism_order_cap are refused with BudgetExceeded.
inline bool are_isomorphic(const Graph& a, const Graph& b, const Budget& budget = Budget::from_env()) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  if (a.order() > isomorphism_order_cap) {
    throw Error(ErrorKind::BudgetExceeded,
                "isomorphism is capped at order " + std::to_string(isomorphism_order_cap));
  }
  std::vector<std::size_t> da, db;
  for (std::size_t u = 0; u < a.order(); ++u) {
    da.push_back(a.degree(u));
    db.push_back(b.degree(u));
  }
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  return detail::IsomorphismSearch(a, b, budget).run();
}

}  // namespace frl
