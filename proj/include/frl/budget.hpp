#pragma once

#include <cstddef>
#include <cstdlib>
#include <string>

#include "frl/error.hpp"

namespace frl {

/// Caps for every exhaustive search in the library. A search that hits its
/// cap raises BudgetExceeded; it never returns a guessed answer.
struct Budget {
  static constexpr std::size_t default_nodes = 2'000'000;

  std::size_t nodes = default_nodes;

  /// Default budget, overridden by the FRL_BUDGET environment variable.
  static Budget from_env() {
    Budget b;
    if (const char* raw = std::getenv("FRL_BUDGET"); raw != nullptr && *raw != '\0') {
      char* end = nullptr;
      unsigned long long value = std::strtoull(raw, &end, 10);
      if (end != nullptr && *end == '\0' && value > 0) b.nodes = static_cast<std::size_t>(value);
    }
    return b;
  }
};

/// Counts search nodes against a Budget.
class NodeCounter {
 public:
  NodeCounter(const Budget& budget, std::string what) : limit_(budget.nodes), what_(std::move(what)) {}

  void tick(std::size_t n = 1) {
    used_ += n;
    if (used_ > limit_) {
      throw Error(ErrorKind::BudgetExceeded, what_ + " exceeded " + std::to_string(limit_) + " nodes");
    }
  }

  std::size_t used() const noexcept { return used_; }

 private:
  std::size_t limit_;
  std::size_t used_ = 0;
  std::string what_;
};

}  // namespace frl
