#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <unordered_set>
#include <vector>

#include "frl/budget.hpp"
#include "frl/complex.hpp"

namespace frl {

namespace detail {

/// Searches for an ordering of `count` items in which every item is admissible
/// after the set of items placed before it. Admissibility depends only on that
/// set (not its order), so failed prefix sets are remembered and never revisited.
/// Candidates are tried in index order; the first admissible complete ordering wins.
class PrefixSetSearch {
 public:
  using Admissible = std::function<bool(std::uint64_t prefix, std::size_t next)>;

  PrefixSetSearch(std::size_t count, Admissible admissible, const Budget& budget, std::string what)
      : count_(count), admissible_(std::move(admissible)), counter_(budget, what) {
    if (count_ > 63) throw Error(ErrorKind::BudgetExceeded, what + " supports at most 63 items");
  }

  std::optional<std::vector<std::size_t>> run() {
    order_.clear();
    if (extend(0)) return order_;
    return std::nullopt;
  }

 private:
  bool extend(std::uint64_t prefix) {
    if (order_.size() == count_) return true;
    if (dead_.contains(prefix)) return false;
    counter_.tick();
    for (std::size_t i = 0; i < count_; ++i) {
      std::uint64_t bit = std::uint64_t{1} << i;
      if ((prefix & bit) != 0 || !admissible_(prefix, i)) continue;
      order_.push_back(i);
      if (extend(prefix | bit)) return true;
      order_.pop_back();
    }
    dead_.insert(prefix);
    return false;
  }

  std::size_t count_;
  Admissible admissible_;
  NodeCounter counter_;
  std::vector<std::size_t> order_;
  std::unordered_set<std::uint64_t> dead_;
};

/// The facet-pair condition: for every earlier F_j there is v in F_i \ F_j and an
/// earlier F_k with F_i \ F_k = {v}.
inline bool extends_shelling(const std::vector<FaceSet>& facets, std::uint64_t prefix, std::size_t i) {
  FaceSet single_steps;
  for (std::size_t k = 0; k < facets.size(); ++k) {
    if ((prefix >> k & 1U) == 0) continue;
    FaceSet diff = facets[i] - facets[k];
    if (diff.size() == 1) single_steps = single_steps | diff;
  }
  for (std::size_t j = 0; j < facets.size(); ++j) {
    if ((prefix >> j & 1U) == 0) continue;
    if (!(facets[i] - facets[j]).intersects(single_steps)) return false;
  }
  return true;
}

}  // namespace detail

/// Returns a shelling order (indices into `facets()`) of a pure complex, or nullopt.
/// The void complex is shellable with the empty order.
inline std::optional<std::vector<std::size_t>> is_shellable(const SimplicialComplex& complex,
                                                            const Budget& budget = Budget::from_env()) {
  if (!complex.is_pure()) throw Error(ErrorKind::NotPure, "shellability is defined for pure complexes");
  const auto& facets = complex.facets();
  detail::PrefixSetSearch search(
      facets.size(), [&](std::uint64_t prefix, std::size_t i) { return detail::extends_shelling(facets, prefix, i); },
      budget, "shelling search");
  return search.run();
}

/// Shellability without the purity requirement, with the same facet-pair
/// condition. Only orders of non-increasing facet size are searched; any
/// non-pure shelling can be rearranged into one.
inline std::optional<std::vector<std::size_t>> is_shellable_nonpure(const SimplicialComplex& complex,
                                                                    const Budget& budget = Budget::from_env()) {
  const auto& facets = complex.facets();
  detail::PrefixSetSearch search(
      facets.size(),
      [&](std::uint64_t prefix, std::size_t i) {
        for (std::size_t k = 0; k < facets.size(); ++k) {
          bool placed = (prefix >> k & 1U) != 0;
          if (!placed && k != i && facets[k].size() > facets[i].size()) return false;
        }
        return detail::extends_shelling(facets, prefix, i);
      },
      budget, "shelling search");
  return search.run();
}

}  // namespace frl
