#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "frl/budget.hpp"
#include "frl/complex.hpp"

namespace frl {

/// binomial(n, k), saturating at SIZE_MAX.
inline std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 result = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
    if (result > SIZE_MAX) return SIZE_MAX;
  }
  return static_cast<std::size_t>(result);
}

/// All d-subsets of {1..n} in canonical order.
inline std::vector<FaceSet> all_subsets_of_size(int n, int d) {
  std::vector<FaceSet> out;
  std::vector<int> pick(static_cast<std::size_t>(d));
  std::function<void(int, int)> rec = [&](int pos, int from) {
    if (pos == d) {
      out.push_back(FaceSet::from_range(pick));
      return;
    }
    for (int v = from; v <= n - (d - pos) + 1; ++v) {
      pick[static_cast<std::size_t>(pos)] = v;
      rec(pos + 1, v + 1);
    }
  };
  rec(0, 1);
  return out;
}

/// r distinct d-subsets of {1..n} drawn uniformly without replacement; ambient {1..n}.
/// Deterministic for a given seed.
inline SimplicialComplex random_pure_complex(int n, int d, int r, std::uint64_t seed) {
  if (n < 1 || n > FaceSet::max_vertex || d < 1 || d > n || r < 1 ||
      static_cast<std::size_t>(r) > binomial(static_cast<std::size_t>(n), static_cast<std::size_t>(d))) {
    throw Error(ErrorKind::BadParameters, "random_pure_complex needs 1 <= d <= n <= 64 and 1 <= r <= C(n,d)");
  }
  std::mt19937_64 rng(seed);
  std::vector<FaceSet> facets;
  // Rejection sampling of random d-subsets; r never exceeds C(n,d).
  auto pool = FaceSet::interval(1, n).members();
  while (facets.size() < static_cast<std::size_t>(r)) {
    // Partial Fisher–Yates for one subset.
    for (int i = 0; i < d; ++i) {
      std::uniform_int_distribution<int> pick(i, n - 1);
      std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(pick(rng))]);
    }
    FaceSet f = FaceSet::from_range(std::vector<int>(pool.begin(), pool.begin() + d));
    if (std::find(facets.begin(), facets.end(), f) == facets.end()) facets.push_back(f);
  }
  return SimplicialComplex::from_facets(std::move(facets), FaceSet::interval(1, n));
}

/// Streams every complex whose facets are 1..r_max distinct d-subsets of {1..n}
/// (ambient {1..n}), each exactly once: by facet count, then lexicographically
/// by facet indices in canonical subset order.
class PureComplexEnumerator {
 public:
  PureComplexEnumerator(int n, int d, int r_max, const Budget& budget = Budget::from_env()) {
    if (n < 1 || n > FaceSet::max_vertex || d < 1 || d > n || r_max < 1) {
      throw Error(ErrorKind::BadParameters, "enumeration needs 1 <= d <= n <= 64 and r_max >= 1");
    }
    subsets_ = all_subsets_of_size(n, d);
    ambient_ = FaceSet::interval(1, n);
    r_max_ = std::min<std::size_t>(static_cast<std::size_t>(r_max), subsets_.size());
    std::size_t total = 0;
    for (std::size_t r = 1; r <= r_max_; ++r) {
      std::size_t count = binomial(subsets_.size(), r);
      total = (count > SIZE_MAX - total) ? SIZE_MAX : total + count;
    }
    if (total > budget.nodes) {
      throw Error(ErrorKind::BudgetExceeded,
                  "enumeration would produce " + std::to_string(total) + " complexes (budget " +
                      std::to_string(budget.nodes) + ")");
    }
    total_ = total;
  }

  std::size_t total() const noexcept { return total_; }

  std::optional<SimplicialComplex> next() {
    if (!advance()) return std::nullopt;
    std::vector<FaceSet> facets;
    for (std::size_t i : pick_) facets.push_back(subsets_[i]);
    return SimplicialComplex::from_facets(std::move(facets), ambient_);
  }

 private:
  bool advance() {
    if (done_) return false;
    if (pick_.empty()) {
      pick_ = {0};
      return !subsets_.empty();
    }
    const std::size_t m = subsets_.size();
    const std::size_t r = pick_.size();
    // Next r-combination of {0..m-1} in lexicographic order.
    std::size_t i = r;
    while (i > 0 && pick_[i - 1] == m - r + i - 1) --i;
    if (i > 0) {
      ++pick_[i - 1];
      for (std::size_t k = i; k < r; ++k) pick_[k] = pick_[k - 1] + 1;
      return true;
    }
    if (r + 1 > r_max_) {
      done_ = true;
      return false;
    }
    pick_.resize(r + 1);
    for (std::size_t k = 0; k <= r; ++k) pick_[k] = k;
    return true;
  }

  std::vector<FaceSet> subsets_;
  FaceSet ambient_;
  std::size_t r_max_ = 0;
  std::size_t total_ = 0;
  std::vector<std::size_t> pick_;
  bool done_ = false;
};

inline std::vector<SimplicialComplex> enumerate_pure_complexes(int n, int d, int r_max,
                                                               const Budget& budget = Budget::from_env()) {
  PureComplexEnumerator it(n, d, r_max, budget);
  std::vector<SimplicialComplex> out;
  out.reserve(it.total());
  while (auto c = it.next()) out.push_back(std::move(*c));
  return out;
}

}  // namespace frl
