#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iterator>
#include <ostream>
#include <string>
#include <vector>

#include "frl/error.hpp"

namespace frl {

/// Vertex identifiers are positive integers in [1, FaceSet::max_vertex].
using Vertex = int;

/// A finite set of vertices stored as a 64-bit mask (vertex v occupies bit v-1).
///
/// Ordering is lexicographic on the ascending member lists, so {1,2} < {1,2,3} < {1,3} < {2}.
class FaceSet {
 public:
  static constexpr Vertex max_vertex = 64;

  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    const_iterator() = default;
    explicit const_iterator(std::uint64_t rest) : rest_(rest) {}

    Vertex operator*() const { return std::countr_zero(rest_) + 1; }
    const_iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    const_iterator operator++(int) {
      auto copy = *this;
      ++*this;
      return copy;
    }
    bool operator==(const const_iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr FaceSet() = default;

  FaceSet(std::initializer_list<Vertex> members) {
    for (Vertex v : members) insert(v);
  }

  template <typename Range>
  static FaceSet from_range(const Range& members) {
    FaceSet s;
    for (auto v : members) s.insert(static_cast<Vertex>(v));
    return s;
  }

  static constexpr FaceSet from_bits(std::uint64_t bits) {
    FaceSet s;
    s.bits_ = bits;
    return s;
  }

  /// {1, ..., n}
  static FaceSet interval(Vertex first, Vertex last) {
    FaceSet s;
    for (Vertex v = first; v <= last; ++v) s.insert(v);
    return s;
  }

  static void check_vertex(Vertex v) {
    if (v < 1 || v > max_vertex) {
      throw Error(ErrorKind::BadParameters,
                  "vertex " + std::to_string(v) + " outside [1, " + std::to_string(max_vertex) + "]");
    }
  }

  void insert(Vertex v) {
    check_vertex(v);
    bits_ |= bit(v);
  }
  void erase(Vertex v) {
    if (v >= 1 && v <= max_vertex) bits_ &= ~bit(v);
  }
  bool contains(Vertex v) const noexcept { return v >= 1 && v <= max_vertex && (bits_ & bit(v)) != 0; }

  std::uint64_t bits() const noexcept { return bits_; }
  std::size_t size() const noexcept { return static_cast<std::size_t>(std::popcount(bits_)); }
  bool empty() const noexcept { return bits_ == 0; }

  /// Smallest member; only meaningful when non-empty.
  Vertex front() const noexcept { return std::countr_zero(bits_) + 1; }
  Vertex back() const noexcept { return max_vertex - std::countl_zero(bits_); }

  bool is_subset_of(FaceSet other) const noexcept { return (bits_ & ~other.bits_) == 0; }
  bool intersects(FaceSet other) const noexcept { return (bits_ & other.bits_) != 0; }

  friend FaceSet operator|(FaceSet a, FaceSet b) noexcept { return from_bits(a.bits_ | b.bits_); }
  friend FaceSet operator&(FaceSet a, FaceSet b) noexcept { return from_bits(a.bits_ & b.bits_); }
  /// Set difference.
  friend FaceSet operator-(FaceSet a, FaceSet b) noexcept { return from_bits(a.bits_ & ~b.bits_); }
  FaceSet without(Vertex v) const noexcept {
    FaceSet s = *this;
    s.erase(v);
    return s;
  }

  const_iterator begin() const noexcept { return const_iterator(bits_); }
  const_iterator end() const noexcept { return const_iterator(0); }

  std::vector<Vertex> members() const { return {begin(), end()}; }

  bool operator==(const FaceSet&) const = default;

  friend std::strong_ordering operator<=>(FaceSet a, FaceSet b) noexcept {
    if (a.bits_ == b.bits_) return std::strong_ordering::equal;
    std::uint64_t diff = a.bits_ ^ b.bits_;
    int low = std::countr_zero(diff);
    std::uint64_t above = (low == 63) ? 0 : (~std::uint64_t{0} << (low + 1));
    // The set holding the lowest differing vertex is smaller unless the other set
    // stops before it (then the other is a proper prefix).
    bool a_holds = (a.bits_ >> low) & 1U;
    FaceSet other = a_holds ? b : a;
    bool holder_smaller = (other.bits_ & above) != 0;
    return (a_holds == holder_smaller) ? std::strong_ordering::less : std::strong_ordering::greater;
  }

  std::string to_string() const {
    std::string out = "{";
    bool first = true;
    for (Vertex v : *this) {
      if (!first) out += ",";
      out += std::to_string(v);
      first = false;
    }
    return out + "}";
  }

  friend std::ostream& operator<<(std::ostream& os, FaceSet s) { return os << s.to_string(); }

 private:
  static constexpr std::uint64_t bit(Vertex v) noexcept { return std::uint64_t{1} << (v - 1); }

  std::uint64_t bits_ = 0;
};

/// Drops every set strictly contained in (or equal to an earlier copy of) another,
/// and returns the survivors in canonical ascending order.
inline std::vector<FaceSet> maximal_sets(std::vector<FaceSet> sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<FaceSet> out;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < sets.size() && !dominated; ++j) {
      dominated = j != i && sets[i].is_subset_of(sets[j]);
    }
    if (!dominated) out.push_back(sets[i]);
  }
  return out;
}

/// Keeps only inclusion-minimal sets, canonical order.
inline std::vector<FaceSet> minimal_sets(std::vector<FaceSet> sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<FaceSet> out;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < sets.size() && !dominated; ++j) {
      dominated = j != i && sets[j].is_subset_of(sets[i]);
    }
    if (!dominated) out.push_back(sets[i]);
  }
  return out;
}

inline bool is_antichain(const std::vector<FaceSet>& sets) {
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = 0; j < sets.size(); ++j) {
      if (i != j && sets[i].is_subset_of(sets[j])) return false;
    }
  }
  return true;
}

/// Minimal transversals (inclusion-minimal hitting sets) of a family, computed
/// incrementally one set at a time. An empty member set admits no transversal.
inline std::vector<FaceSet> minimal_transversals(const std::vector<FaceSet>& family) {
  std::vector<FaceSet> current{FaceSet{}};
  for (FaceSet s : family) {
    std::vector<FaceSet> next;
    for (FaceSet t : current) {
      if (t.intersects(s)) {
        next.push_back(t);
      } else {
        for (Vertex v : s) {
          FaceSet grown = t;
          grown.insert(v);
          next.push_back(grown);
        }
      }
    }
    current = minimal_sets(std::move(next));
  }
  return current;
}

}  // namespace frl

template <>
struct std::hash<frl::FaceSet> {
  std::size_t operator()(frl::FaceSet s) const noexcept { return std::hash<std::uint64_t>{}(s.bits()); }
};
