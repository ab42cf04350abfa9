#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "frl/budget.hpp"
#include "frl/complex.hpp"
#include "frl/graph.hpp"
#include "frl/homology.hpp"
#include "frl/shelling.hpp"

namespace frl {

/// Squarefree monomial ideal, stored as the supports of its minimal generators.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;

  /// Non-minimal supports are discarded; the ambient defaults to their union.
  static MonomialIdeal from_generators(std::vector<FaceSet> supports, std::optional<FaceSet> ambient = std::nullopt) {
    FaceSet support;
    for (FaceSet g : supports) support = support | g;
    if (ambient && !support.is_subset_of(*ambient)) {
      throw Error(ErrorKind::OutOfAmbient, "generator outside ambient " + ambient->to_string());
    }
    MonomialIdeal ideal;
    ideal.ambient_ = ambient.value_or(support);
    ideal.generators_ = minimal_sets(std::move(supports));
    return ideal;
  }

  const FaceSet& ambient() const noexcept { return ambient_; }
  const std::vector<FaceSet>& generators() const noexcept { return generators_; }
  bool is_zero() const noexcept { return generators_.empty(); }

  /// Common degree of all generators, if there is one.
  std::optional<std::size_t> generator_degree() const {
    if (generators_.empty()) return std::nullopt;
    std::size_t d = generators_.front().size();
    for (FaceSet g : generators_) {
      if (g.size() != d) return std::nullopt;
    }
    return d;
  }

  bool operator==(const MonomialIdeal&) const = default;

 private:
  FaceSet ambient_;
  std::vector<FaceSet> generators_;
};

/// I(Δ) = (x_F : F facet)
inline MonomialIdeal facet_ideal(const SimplicialComplex& complex) {
  return MonomialIdeal::from_generators(complex.facets(), complex.ambient());
}

/// I_Δ = (x_N : N minimal nonface)
inline MonomialIdeal stanley_reisner_ideal(const SimplicialComplex& complex) {
  return MonomialIdeal::from_generators(minimal_nonfaces(complex), complex.ambient());
}

/// I(G) with graph vertex u mapped to variable u+1.
inline MonomialIdeal edge_ideal(const Graph& g) {
  std::vector<FaceSet> gens;
  for (auto [u, v] : g.edges()) {
    gens.push_back(FaceSet{static_cast<Vertex>(u + 1), static_cast<Vertex>(v + 1)});
  }
  FaceSet ambient = g.order() == 0 ? FaceSet{} : FaceSet::interval(1, static_cast<Vertex>(g.order()));
  return MonomialIdeal::from_generators(std::move(gens), ambient);
}

/// The complex whose faces contain no generator (its Stanley–Reisner ideal is I).
inline SimplicialComplex stanley_reisner_complex(const MonomialIdeal& ideal) {
  return independence_complex(Clutter::from_circuits(ideal.generators(), ideal.ambient()));
}

/// Graded Betti numbers β_{i,j} of S/I for i >= 1; zero entries are absent.
struct BettiTable {
  std::map<std::pair<int, int>, std::size_t> entries;

  std::size_t get(int i, int j) const {
    auto it = entries.find({i, j});
    return it == entries.end() ? 0 : it->second;
  }
  std::size_t total(int i) const {
    std::size_t sum = 0;
    for (const auto& [key, value] : entries) {
      if (key.first == i) sum += value;
    }
    return sum;
  }
  int regularity() const {
    int reg = 0;
    for (const auto& [key, value] : entries) reg = std::max(reg, key.second - key.first);
    return reg;
  }
  int projective_dimension() const {
    int pd = 0;
    for (const auto& [key, value] : entries) pd = std::max(pd, key.first);
    return pd;
  }
  bool operator==(const BettiTable&) const = default;
};

inline constexpr std::size_t default_ambient_cap = 16;

namespace detail {

/// Restrictions Δ_W of the Stanley–Reisner complex of I, for W ⊆ ambient.
/// Ambient vertices are renumbered to bits 0..n-1.
class RestrictionScanner {
 public:
  RestrictionScanner(const MonomialIdeal& ideal, std::size_t ambient_cap) {
    std::vector<Vertex> vertices = ideal.ambient().members();
    n_ = vertices.size();
    if (n_ > ambient_cap) {
      throw Error(ErrorKind::BudgetExceeded, "ambient of size " + std::to_string(n_) + " exceeds cap " +
                                                 std::to_string(ambient_cap));
    }
    std::vector<int> local(FaceSet::max_vertex + 1, -1);
    for (std::size_t i = 0; i < n_; ++i) local[static_cast<std::size_t>(vertices[i])] = static_cast<int>(i);
    const std::size_t size = std::size_t{1} << n_;
    nonface_.assign(size, 0);
    for (FaceSet g : ideal.generators()) {
      std::uint64_t mask = 0;
      for (Vertex v : g) mask |= std::uint64_t{1} << local[static_cast<std::size_t>(v)];
      nonface_[mask] = 1;
    }
    for (std::uint64_t m = 1; m < size; ++m) {
      if (nonface_[m]) continue;
      for (std::uint64_t rest = m; rest != 0; rest &= rest - 1) {
        if (nonface_[m & ~(rest & (~rest + 1))]) {
          nonface_[m] = 1;
          break;
        }
      }
    }
  }

  std::size_t ambient_size() const noexcept { return n_; }
  bool is_face(std::uint64_t mask) const noexcept { return nonface_[mask] == 0; }

  FaceLattice lattice(std::uint64_t w) const {
    FaceLattice lattice;
    lattice.by_dim.resize(static_cast<std::size_t>(std::popcount(w)) + 1);
    for (std::uint64_t sub = w;; sub = (sub - 1) & w) {
      if (is_face(sub)) lattice.by_dim[static_cast<std::size_t>(std::popcount(sub))].push_back(sub);
      if (sub == 0) break;
    }
    while (!lattice.by_dim.empty() && lattice.by_dim.back().empty()) lattice.by_dim.pop_back();
    for (auto& layer : lattice.by_dim) std::sort(layer.begin(), layer.end());
    return lattice;
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint8_t> nonface_;
};

}  // namespace detail

/// Full graded Betti table of S/I via β_{i,W} = dim H̃_{|W|-i-1}(Δ_W) summed over |W| = j.
inline BettiTable betti_table(const MonomialIdeal& ideal, Field field = Field::GF2,
                              std::size_t ambient_cap = default_ambient_cap) {
  detail::RestrictionScanner scan(ideal, ambient_cap);
  BettiTable table;
  const std::uint64_t size = std::uint64_t{1} << scan.ambient_size();
  for (std::uint64_t w = 1; w < size; ++w) {
    if (scan.is_face(w)) continue;  // Δ_W is a simplex, hence acyclic
    int j = std::popcount(w);
    auto ranks = detail::reduced_homology_all(scan.lattice(w), field);
    for (int i = 1; i <= j; ++i) {
      auto idx = static_cast<std::size_t>(j - i);  // dimension j-i-1, stored at index dim+1
      if (idx < ranks.size() && ranks[idx] > 0) table.entries[{i, j}] += ranks[idx];
    }
  }
  return table;
}

/// A single graded Betti number; scans only |W| = j.
inline std::size_t beta(const MonomialIdeal& ideal, int i, int j, Field field = Field::GF2,
                        std::size_t ambient_cap = default_ambient_cap) {
  if (i < 1 || j < i) return 0;
  detail::RestrictionScanner scan(ideal, ambient_cap);
  if (static_cast<std::size_t>(j) > scan.ambient_size()) return 0;
  std::size_t total = 0;
  const std::uint64_t size = std::uint64_t{1} << scan.ambient_size();
  for (std::uint64_t w = 1; w < size; ++w) {
    if (std::popcount(w) != j || scan.is_face(w)) continue;
    total += detail::reduced_homology_in_dim(scan.lattice(w), j - i - 1, field);
  }
  return total;
}

inline int regularity(const MonomialIdeal& ideal, Field field = Field::GF2,
                      std::size_t ambient_cap = default_ambient_cap) {
  return betti_table(ideal, field, ambient_cap).regularity();
}

/// Generated in one degree d with every nonzero β_{i,j} on the line j - i = d - 1.
/// The zero ideal has no linear resolution.
inline bool has_linear_resolution(const MonomialIdeal& ideal, Field field = Field::GF2,
                                  std::size_t ambient_cap = default_ambient_cap) {
  auto d = ideal.generator_degree();
  if (!d) return false;
  auto table = betti_table(ideal, field, ambient_cap);
  for (const auto& [key, value] : table.entries) {
    if (key.second - key.first != static_cast<int>(*d) - 1) return false;
  }
  return true;
}

/// Ordering u_1..u_r of the minimal generators such that every colon ideal
/// (u_1..u_{i-1}) : u_i is generated by variables. Returns generator indices.
inline std::optional<std::vector<std::size_t>> has_linear_quotients(const MonomialIdeal& ideal,
                                                                    const Budget& budget = Budget::from_env()) {
  const auto& gens = ideal.generators();
  detail::PrefixSetSearch search(
      gens.size(),
      [&](std::uint64_t prefix, std::size_t i) {
        FaceSet variables;  // x_l with u_k / gcd(u_k, u_i) = x_l for an earlier k
        for (std::size_t k = 0; k < gens.size(); ++k) {
          if ((prefix >> k & 1U) == 0) continue;
          FaceSet diff = gens[k] - gens[i];
          if (diff.size() == 1) variables = variables | diff;
        }
        for (std::size_t j = 0; j < gens.size(); ++j) {
          if ((prefix >> j & 1U) == 0) continue;
          if (!(gens[j] - gens[i]).intersects(variables)) return false;
        }
        return true;
      },
      budget, "linear quotients search");
  return search.run();
}

/// Eagon–Reiner: Δ is Cohen–Macaulay iff I_{Δ∨} has a linear resolution.
inline bool is_cohen_macaulay(const SimplicialComplex& complex, Field field = Field::GF2,
                              std::size_t ambient_cap = default_ambient_cap) {
  if (complex.is_void()) throw Error(ErrorKind::DegenerateDual, "void complex");
  auto dual = alexander_dual(complex);
  if (dual.is_void()) throw Error(ErrorKind::DegenerateDual, "Alexander dual of the full simplex is void");
  return has_linear_resolution(stanley_reisner_ideal(dual), field, ambient_cap);
}

struct FrobergCheck {
  bool linear_resolution = false;
  bool complement_chordal = false;
  bool agree() const noexcept { return linear_resolution == complement_chordal; }
};

/// Both sides of Fröberg's criterion, computed independently. Edgeless graphs are rejected.
inline FrobergCheck froberg_check(const Graph& g, Field field = Field::GF2,
                                  std::size_t ambient_cap = default_ambient_cap) {
  if (g.edge_count() == 0) throw Error(ErrorKind::BadParameters, "edge ideal of an edgeless graph is zero");
  FrobergCheck check;
  check.linear_resolution = has_linear_resolution(edge_ideal(g), field, ambient_cap);
  check.complement_chordal = is_chordal_graph(complement(g)).has_value();
  return check;
}

struct ShellingQuotientReport {
  std::optional<std::vector<std::size_t>> shelling;          ///< facet order of Δ
  std::optional<std::vector<std::size_t>> linear_quotients;  ///< generator order of I_{Δ∨}
  bool linear_resolution = false;                            ///< of I_{Δ∨}

  bool shellable() const noexcept { return shelling.has_value(); }
  bool has_quotients() const noexcept { return linear_quotients.has_value(); }
  bool biconditional_holds() const noexcept { return shellable() == has_quotients(); }
  bool quotients_imply_resolution() const noexcept { return !has_quotients() || linear_resolution; }
};

/// Shellability of Δ against linear quotients (and resolution) of I_{Δ∨}.
inline ShellingQuotientReport shellable_implies_quotients_check(const SimplicialComplex& complex,
                                                                Field field = Field::GF2,
                                                                const Budget& budget = Budget::from_env(),
                                                                std::size_t ambient_cap = default_ambient_cap) {
  auto dual = alexander_dual(complex);
  if (dual.is_void()) throw Error(ErrorKind::DegenerateDual, "Alexander dual of the full simplex is void");
  auto dual_ideal = stanley_reisner_ideal(dual);
  ShellingQuotientReport report;
  report.shelling = is_shellable(complex, budget);
  report.linear_quotients = has_linear_quotients(dual_ideal, budget);
  report.linear_resolution = has_linear_resolution(dual_ideal, field, ambient_cap);
  return report;
}

}  // namespace frl
