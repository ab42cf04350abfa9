#pragma once

#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "frl/budget.hpp"
#include "frl/complex.hpp"

namespace frl {

enum class Field { GF2, Rational };

inline std::string_view to_string(Field f) { return f == Field::GF2 ? "gf2" : "rat"; }

namespace detail {

/// Boundary matrix stored column-wise: column c lists (row, sign) pairs sorted by row.
struct BoundaryMatrix {
  std::size_t rows = 0;
  std::vector<std::vector<std::pair<std::uint32_t, int>>> columns;
};

inline std::size_t rank_gf2(const BoundaryMatrix& m) {
  const std::size_t words = (m.rows + 63) / 64;
  std::vector<std::vector<std::uint64_t>> reduced;  // indexed by pivot row when present
  std::vector<std::int64_t> pivot_owner(m.rows, -1);
  std::size_t rank = 0;
  std::vector<std::uint64_t> col(words);
  for (const auto& column : m.columns) {
    std::fill(col.begin(), col.end(), 0);
    for (auto [row, sign] : column) col[row / 64] ^= std::uint64_t{1} << (row % 64);
    while (true) {
      std::size_t w = 0;
      while (w < words && col[w] == 0) ++w;
      if (w == words) break;
      std::size_t low = w * 64 + static_cast<std::size_t>(std::countr_zero(col[w]));
      if (pivot_owner[low] < 0) {
        pivot_owner[low] = static_cast<std::int64_t>(reduced.size());
        reduced.push_back(col);
        ++rank;
        break;
      }
      const auto& other = reduced[static_cast<std::size_t>(pivot_owner[low])];
      for (std::size_t k = w; k < words; ++k) col[k] ^= other[k];
    }
  }
  return rank;
}

struct IntegerOverflow {};

inline long long checked_mul(long long a, long long b) {
  long long out;
  if (__builtin_mul_overflow(a, b, &out)) throw IntegerOverflow{};
  return out;
}
inline long long checked_sub(long long a, long long b) {
  long long out;
  if (__builtin_sub_overflow(a, b, &out)) throw IntegerOverflow{};
  return out;
}
inline boost::multiprecision::cpp_int checked_mul(const boost::multiprecision::cpp_int& a,
                                                  const boost::multiprecision::cpp_int& b) {
  return a * b;
}
inline boost::multiprecision::cpp_int checked_sub(const boost::multiprecision::cpp_int& a,
                                                  const boost::multiprecision::cpp_int& b) {
  return a - b;
}
inline long long abs_gcd(long long a, long long b) { return std::gcd(a, b); }
inline boost::multiprecision::cpp_int abs_gcd(const boost::multiprecision::cpp_int& a,
                                              const boost::multiprecision::cpp_int& b) {
  return boost::multiprecision::gcd(a, b);
}

/// Rank over Q by fraction-free column reduction with integer entries. Each
/// reduction step cancels the pivot entry exactly and divides out the content.
template <typename Int>
std::size_t rank_integer(const BoundaryMatrix& m) {
  using Column = std::vector<std::pair<std::uint32_t, Int>>;
  std::vector<Column> reduced;
  std::vector<std::int64_t> pivot_owner(m.rows, -1);
  std::size_t rank = 0;
  for (const auto& input : m.columns) {
    Column col;
    col.reserve(input.size());
    for (auto [row, sign] : input) col.emplace_back(row, Int(sign));
    while (!col.empty()) {
      std::uint32_t low = col.front().first;
      if (pivot_owner[low] < 0) {
        pivot_owner[low] = static_cast<std::int64_t>(reduced.size());
        reduced.push_back(std::move(col));
        ++rank;
        break;
      }
      const Column& p = reduced[static_cast<std::size_t>(pivot_owner[low])];
      const Int a = p.front().second;  // pivot coefficient of the stored column
      const Int b = col.front().second;
      // col <- a*col - b*p
      Column next;
      next.reserve(col.size() + p.size());
      std::size_t x = 0, y = 0;
      while (x < col.size() || y < p.size()) {
        if (y == p.size() || (x < col.size() && col[x].first < p[y].first)) {
          next.emplace_back(col[x].first, checked_mul(a, col[x].second));
          ++x;
        } else if (x == col.size() || p[y].first < col[x].first) {
          next.emplace_back(p[y].first, checked_sub(Int(0), checked_mul(b, p[y].second)));
          ++y;
        } else {
          Int v = checked_sub(checked_mul(a, col[x].second), checked_mul(b, p[y].second));
          if (v != 0) next.emplace_back(col[x].first, v);
          ++x;
          ++y;
        }
      }
      Int content(0);
      for (const auto& [row, v] : next) content = abs_gcd(content, v);
      if (content > 1) {
        for (auto& [row, v] : next) v /= content;
      }
      col = std::move(next);
    }
  }
  return rank;
}

inline std::size_t rank_rational(const BoundaryMatrix& m) {
  try {
    return rank_integer<long long>(m);
  } catch (const IntegerOverflow&) {
    return rank_integer<boost::multiprecision::cpp_int>(m);
  }
}

inline std::size_t matrix_rank(const BoundaryMatrix& m, Field field) {
  if (m.columns.empty() || m.rows == 0) return 0;
  return field == Field::GF2 ? rank_gf2(m) : rank_rational(m);
}

/// Faces of a complex grouped by dimension: by_dim[k+1] holds the k-faces as bit masks.
struct FaceLattice {
  std::vector<std::vector<std::uint64_t>> by_dim;

  std::size_t count(int dim) const {
    auto idx = static_cast<std::size_t>(dim + 1);
    return idx < by_dim.size() ? by_dim[idx].size() : 0;
  }
  int top_dimension() const { return static_cast<int>(by_dim.size()) - 2; }
};

/// ∂_k : C_k -> C_{k-1} in the standard basis (faces sorted as given).
inline BoundaryMatrix boundary(const FaceLattice& lattice, int k) {
  BoundaryMatrix m;
  if (k < 0 || static_cast<std::size_t>(k + 1) >= lattice.by_dim.size()) return m;
  const auto& lower = lattice.by_dim[static_cast<std::size_t>(k)];
  const auto& upper = lattice.by_dim[static_cast<std::size_t>(k + 1)];
  m.rows = lower.size();
  std::unordered_map<std::uint64_t, std::uint32_t> index;
  index.reserve(lower.size());
  for (std::size_t i = 0; i < lower.size(); ++i) index.emplace(lower[i], static_cast<std::uint32_t>(i));
  m.columns.reserve(upper.size());
  for (std::uint64_t face : upper) {
    std::vector<std::pair<std::uint32_t, int>> column;
    int sign = 1;
    for (std::uint64_t rest = face; rest != 0; rest &= rest - 1) {
      std::uint64_t bit = rest & (~rest + 1);
      column.emplace_back(index.at(face & ~bit), sign);
      sign = -sign;
    }
    std::sort(column.begin(), column.end());
    m.columns.push_back(std::move(column));
  }
  return m;
}

inline std::size_t boundary_rank(const FaceLattice& lattice, int k, Field field) {
  return matrix_rank(boundary(lattice, k), field);
}

/// dim H̃_k = f_k - rank ∂_k - rank ∂_{k+1}; ∂_0 maps every vertex to the empty face.
inline std::size_t reduced_homology_in_dim(const FaceLattice& lattice, int k, Field field) {
  std::size_t f = lattice.count(k);
  if (f == 0) return 0;
  std::size_t down = k >= 0 ? boundary_rank(lattice, k, field) : 0;
  std::size_t up = boundary_rank(lattice, k + 1, field);
  return f - down - up;
}

inline std::vector<std::size_t> reduced_homology_all(const FaceLattice& lattice, Field field) {
  std::vector<std::size_t> ranks;
  if (lattice.by_dim.empty()) return ranks;
  std::vector<std::size_t> boundary_ranks(lattice.by_dim.size() + 1, 0);  // index k+1 -> rank ∂_k
  for (int k = 0; k <= lattice.top_dimension(); ++k) {
    boundary_ranks[static_cast<std::size_t>(k + 1)] = boundary_rank(lattice, k, field);
  }
  long long euler_faces = 0, euler_homology = 0;
  for (int k = -1; k <= lattice.top_dimension(); ++k) {
    std::size_t f = lattice.count(k);
    std::size_t down = boundary_ranks[static_cast<std::size_t>(k + 1)];
    std::size_t up = boundary_ranks[static_cast<std::size_t>(k + 2)];
    ranks.push_back(f - down - up);
    long long sign = (k % 2 == 0) ? 1 : -1;
    euler_faces += sign * static_cast<long long>(f);
    euler_homology += sign * static_cast<long long>(ranks.back());
  }
  if (euler_faces != euler_homology) throw std::logic_error("Euler characteristic mismatch");
  return ranks;
}

/// Every face of the complex (all subsets of facets), grouped by dimension.
inline FaceLattice face_lattice(const SimplicialComplex& complex, const Budget& budget) {
  FaceLattice lattice;
  if (complex.is_void()) return lattice;
  std::unordered_set<std::uint64_t> seen;
  NodeCounter counter(budget, "face enumeration");
  for (FaceSet facet : complex.facets()) {
    std::uint64_t top = facet.bits();
    // Walk every submask of the facet, including the empty set.
    for (std::uint64_t sub = top;; sub = (sub - 1) & top) {
      if (seen.insert(sub).second) counter.tick();
      if (sub == 0) break;
    }
  }
  lattice.by_dim.resize(static_cast<std::size_t>(complex.dimension() + 2));
  for (std::uint64_t face : seen) lattice.by_dim[static_cast<std::size_t>(std::popcount(face))].push_back(face);
  for (auto& layer : lattice.by_dim) std::sort(layer.begin(), layer.end());
  return lattice;
}

}  // namespace detail

/// Ranks of reduced homology in dimensions -1 .. dim Δ (entry k+1 is H̃_k).
/// The void complex yields an empty list. The Euler characteristic identity is
/// checked on every call.
inline std::vector<std::size_t> reduced_homology_ranks(const SimplicialComplex& complex, Field field = Field::GF2,
                                                       const Budget& budget = Budget::from_env()) {
  return detail::reduced_homology_all(detail::face_lattice(complex, budget), field);
}

}  // namespace frl
