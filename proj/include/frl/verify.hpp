#pragma once

#include <chrono>
#include <cstdint>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <variant>
#include <vector>

#include "json.hpp"

#include "frl/algebra.hpp"
#include "frl/budget.hpp"
#include "frl/complex.hpp"
#include "frl/corpus.hpp"
#include "frl/families.hpp"
#include "frl/graph.hpp"
#include "frl/io.hpp"
#include "frl/line_graph.hpp"
#include "frl/minors.hpp"
#include "frl/shelling.hpp"

namespace frl {

using ojson = nlohmann::ordered_json;

enum class TheoremId {
  Deltac,
  EdgeCount,
  Betti2,
  ShellableConnected,
  StarFree,
  CliquePartition,
  C3,
  Complete,
  Cycle,
  ChordalMain,
  DualChordal,
  CorollaryChain,
  Froberg,
  EvD2,
};

inline constexpr std::array<std::pair<TheoremId, std::string_view>, 14> theorem_names{{
    {TheoremId::Deltac, "deltac"},
    {TheoremId::EdgeCount, "edge-count"},
    {TheoremId::Betti2, "betti2"},
    {TheoremId::ShellableConnected, "shellable-connected"},
    {TheoremId::StarFree, "star-free"},
    {TheoremId::CliquePartition, "clique-partition"},
    {TheoremId::C3, "c3"},
    {TheoremId::Complete, "complete"},
    {TheoremId::Cycle, "cycle"},
    {TheoremId::ChordalMain, "chordal-main"},
    {TheoremId::DualChordal, "dual-chordal"},
    {TheoremId::CorollaryChain, "corollary-chain"},
    {TheoremId::Froberg, "froberg"},
    {TheoremId::EvD2, "ev-d2"},
}};

inline std::string_view to_string(TheoremId id) {
  for (auto [t, name] : theorem_names) {
    if (t == id) return name;
  }
  return "?";
}

inline TheoremId parse_theorem_id(std::string_view name) {
  for (auto [t, n] : theorem_names) {
    if (n == name) return t;
  }
  throw Error(ErrorKind::UnknownTheorem, std::string(name));
}

struct RandomCorpus {
  int n = 0, d = 0, r = 0;
  std::size_t trials = 0;
};
struct ExhaustiveCorpus {
  int n = 0, d = 0, r_max = 0;
};
struct FileCorpus {
  std::vector<std::string> paths;
};
using CorpusSpec = std::variant<RandomCorpus, ExhaustiveCorpus, FileCorpus>;

struct NamedComplex {
  SimplicialComplex complex;
  std::optional<std::string> name;
};

inline ojson describe(const CorpusSpec& spec) {
  return std::visit(
      [](const auto& c) -> ojson {
        using T = std::decay_t<decltype(c)>;
        ojson j;
        if constexpr (std::is_same_v<T, RandomCorpus>) {
          j["kind"] = "random";
          j["n"] = c.n;
          j["d"] = c.d;
          j["r"] = c.r;
          j["trials"] = c.trials;
        } else if constexpr (std::is_same_v<T, ExhaustiveCorpus>) {
          j["kind"] = "exhaustive";
          j["n"] = c.n;
          j["d"] = c.d;
          j["r_max"] = c.r_max;
        } else {
          j["kind"] = "files";
          j["paths"] = c.paths;
        }
        return j;
      },
      spec);
}

/// splitmix64 step; derives independent per-trial seeds from one user seed.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::BadParameters, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

inline std::vector<NamedComplex> materialize(const CorpusSpec& spec, std::uint64_t seed, const Budget& budget) {
  std::vector<NamedComplex> out;
  if (const auto* random = std::get_if<RandomCorpus>(&spec)) {
    for (std::size_t t = 0; t < random->trials; ++t) {
      out.push_back({random_pure_complex(random->n, random->d, random->r, mix_seed(seed, t)), std::nullopt});
    }
  } else if (const auto* exhaustive = std::get_if<ExhaustiveCorpus>(&spec)) {
    PureComplexEnumerator it(exhaustive->n, exhaustive->d, exhaustive->r_max, budget);
    while (auto c = it.next()) out.push_back({std::move(*c), std::nullopt});
  } else {
    for (const auto& path : std::get<FileCorpus>(spec).paths) {
      auto doc = parse_document(read_file(path));
      out.push_back({doc.to_complex(), doc.name ? doc.name : std::optional<std::string>(path)});
    }
  }
  return out;
}

struct VerifyOptions {
  std::uint64_t seed = 0;
  Field field = Field::GF2;
  Budget budget = Budget::from_env();
  bool timing = false;
};

/// Result of one instance.
struct Outcome {
  enum class Kind { Confirmed, Counterexample, Skipped };
  Kind kind = Kind::Confirmed;
  std::string reason;  ///< skip reason (aggregation key)
  bool budget = false; ///< skipped because a search cap was hit
  ojson diagnostics = ojson::object();

  static Outcome confirmed(ojson diag) { return {Kind::Confirmed, {}, false, std::move(diag)}; }
  static Outcome counterexample(ojson diag) { return {Kind::Counterexample, {}, false, std::move(diag)}; }
  static Outcome skipped(std::string reason, ojson diag = ojson::object()) {
    return {Kind::Skipped, std::move(reason), false, std::move(diag)};
  }
  static Outcome verdict(bool ok, ojson diag) { return ok ? confirmed(std::move(diag)) : counterexample(std::move(diag)); }
};

struct VerifyReport {
  std::string theorem;
  ojson corpus;
  std::uint64_t seed = 0;
  Field field = Field::GF2;
  std::size_t trials = 0;  ///< instances evaluated (confirmations + counterexamples)
  std::size_t confirmations = 0;
  std::vector<ojson> counterexamples;  ///< {"complex": ..., "diagnostics": ...}
  std::map<std::string, std::size_t> skips;
  std::size_t budget_skips = 0;
  std::vector<ojson> skip_samples;
  ojson details = ojson::object();
  bool details_failed = false;  ///< a family check inside `details` failed
  std::optional<double> wall_time;

  static constexpr std::size_t max_skip_samples = 20;

  std::size_t skipped() const {
    std::size_t total = 0;
    for (const auto& [reason, count] : skips) total += count;
    return total;
  }

  /// 0 all confirmed, 10 counterexamples present, 3 budget exhausted somewhere.
  int exit_code() const {
    if (!counterexamples.empty() || details_failed) return 10;
    if (budget_skips > 0) return 3;
    return 0;
  }

  ojson to_json() const {
    ojson j;
    j["theorem"] = theorem;
    j["corpus"] = corpus;
    j["seed"] = seed;
    j["field"] = std::string(to_string(field));
    j["trials"] = trials;
    j["confirmations"] = confirmations;
    j["counterexample_count"] = counterexamples.size();
    j["counterexamples"] = counterexamples;
    ojson skip_json = ojson::object();
    for (const auto& [reason, count] : skips) skip_json[reason] = count;
    j["skipped"] = skipped();
    j["skips"] = skip_json;
    j["budget_skips"] = budget_skips;
    j["skip_samples"] = skip_samples;
    j["details"] = details;
    j["exit_code"] = exit_code();
    if (wall_time) j["wall_time"] = *wall_time;
    return j;
  }

  std::string to_text() const {
    std::ostringstream out;
    out << "theorem        " << theorem << "\n";
    out << "corpus         " << corpus.dump() << "\n";
    out << "trials         " << trials << " (confirmed " << confirmations << ", counterexamples "
        << counterexamples.size() << ")\n";
    out << "skipped        " << skipped() << " (budget " << budget_skips << ")\n";
    for (const auto& [reason, count] : skips) out << "  " << count << "  " << reason << "\n";
    for (std::size_t i = 0; i < counterexamples.size() && i < 5; ++i) {
      out << "counterexample " << counterexamples[i]["complex"].dump() << "\n";
    }
    if (counterexamples.size() > 5) out << "  ... " << counterexamples.size() - 5 << " more\n";
    if (!details.empty()) out << "details        " << details.dump(2) << "\n";
    if (wall_time) out << "wall_time      " << *wall_time << " s\n";
    return out.str();
  }
};

namespace detail {

/// Adjacency of facets meeting in (size - 1) elements, for any facet size >= 1.
inline Graph ridge_graph(const std::vector<FaceSet>& facets) {
  Graph g(facets.size());
  for (std::size_t i = 0; i < facets.size(); ++i) {
    for (std::size_t j = i + 1; j < facets.size(); ++j) {
      if ((facets[i] & facets[j]).size() + 1 == facets[i].size()) g.add_edge(i, j);
    }
  }
  return g;
}

inline ojson complex_json(const NamedComplex& c) {
  return ComplexDocument::from_complex(c.complex, c.name).to_json();
}

/// Orders instances from smallest to largest for "minimal counterexample" reporting.
inline auto minimality_key(const SimplicialComplex& c) {
  return std::make_tuple(c.facet_count(), c.support().size(), c.ambient().size(), serialize_complex(c));
}

/// Precondition shared by every line-graph statement.
inline std::optional<Outcome> require_line_graph(const SimplicialComplex& c) {
  if (!c.is_pure()) return Outcome::skipped("input: complex is not pure");
  if (c.facets().front().size() < 2) return Outcome::skipped("input: facet size below 2");
  return std::nullopt;
}

struct LineGraphHypothesis {
  bool connected = false;
  bool chordal = false;
  std::size_t diameter = 0;
  std::size_t d = 0;
  bool holds() const { return connected && chordal && diameter <= d; }
  ojson to_json() const {
    ojson j;
    j["L_connected"] = connected;
    j["L_chordal"] = chordal;
    j["L_diameter"] = diameter == infinite_distance ? ojson("inf") : ojson(diameter);
    j["d"] = d;
    return j;
  }
  std::string failure() const {
    if (!connected) return "hypothesis: L(Δ) not connected";
    if (!chordal) return "hypothesis: L(Δ) not chordal";
    return "hypothesis: diam L(Δ) exceeds d";
  }
};

inline LineGraphHypothesis line_graph_hypothesis(const SimplicialComplex& c) {
  auto lg = line_graph(c);
  LineGraphHypothesis h;
  h.connected = is_connected(lg.graph);
  h.chordal = is_chordal_graph(lg.graph).has_value();
  h.diameter = diameter(lg.graph);
  h.d = c.facets().front().size();
  return h;
}

/// Graph on the ambient vertices (in ascending order) whose edges are the facets.
inline Graph graph_of_complex(const SimplicialComplex& c) {
  auto vertices = c.ambient().members();
  auto index = [&](Vertex v) {
    return static_cast<std::size_t>(std::find(vertices.begin(), vertices.end(), v) - vertices.begin());
  };
  Graph g(vertices.size());
  for (FaceSet f : c.facets()) g.add_edge(index(f.front()), index(f.back()));
  return g;
}

class TheoremCheck {
 public:
  explicit TheoremCheck(const VerifyOptions& options) : options_(options) {}
  virtual ~TheoremCheck() = default;
  virtual Outcome evaluate(const SimplicialComplex& c) const = 0;
  virtual void absorb(const NamedComplex&, const Outcome&) {}
  /// Theorem-specific summary; sets `failed` when a built-in family check fails.
  virtual ojson details(bool& failed) const {
    failed = false;
    return ojson::object();
  }

 protected:
  const VerifyOptions& options_;
};

class DeltacCheck : public TheoremCheck {
 public:
  using TheoremCheck::TheoremCheck;
  Outcome evaluate(const SimplicialComplex& c) const override {
    if (!c.is_pure()) return Outcome::skipped("input: complex is not pure");
    if (c.facets().front() == c.ambient()) return Outcome::skipped("input: facet equals ambient");
    std::vector<FaceSet> complements;
    for (FaceSet f : c.facets()) complements.push_back(c.ambient() - f);
    Graph original = ridge_graph(c.facets());
    Graph dual = ridge_graph(complements);
    ojson diag;
    diag["edges"] = original.edge_count();
    diag["complement_edges"] = dual.edge_count();
    return Outcome::verdict(original == dual, diag);
  }
};

class EdgeCountCheck_ : public TheoremCheck {
 public:
  using TheoremCheck::TheoremCheck;
  Outcome evaluate(const SimplicialComplex& c) const override {
    if (auto skip = require_line_graph(c)) return *skip;
    auto check = edge_count_identities(c);
    ojson diag;
    diag["sum_s_i"] = check.formula;
    diag["edges"] = check.counted;
    diag["degree_sum"] = check.degree_sum;
    return Outcome::verdict(check.holds(), diag);
  }
};

class Betti2Check : public TheoremCheck {
 public:
  using TheoremCheck::TheoremCheck;

  Outcome evaluate(const SimplicialComplex& c) const override {
    if (auto skip = require_line_graph(c)) return *skip;
    const int d = static_cast<int>(c.facets().front().size());
    const auto oracle = static_cast<long long>(beta(facet_ideal(c), 2, d + 1, options_.field));
    const auto edges = static_cast<long long>(line_graph(c).graph.edge_count());
    ojson diag;
    diag["d"] = d;
    diag["edges"] = edges;
    diag["oracle_beta_2_d_plus_1"] = oracle;
    bool any = false;
    ojson per = ojson::object();
    for (auto interp : all_interpretations) {
      auto nt = static_cast<long long>(count_Nt(c, interp, options_.budget));
      ojson e;
      e["Nt"] = nt;
      e["predicted"] = edges - nt;
      e["match"] = edges - nt == oracle;
      any = any || edges - nt == oracle;
      per[std::string(to_string(interp))] = e;
    }
    diag["interpretations"] = per;
    return Outcome::verdict(any, diag);
  }

  void absorb(const NamedComplex& c, const Outcome& outcome) override {
    if (outcome.kind == Outcome::Kind::Skipped) return;
    for (std::size_t k = 0; k < all_interpretations.size(); ++k) {
      const auto& e = outcome.diagnostics["interpretations"][std::string(to_string(all_interpretations[k]))];
      if (e["match"].get<bool>()) {
        ++matches_[k];
      } else {
        ++mismatches_[k];
        auto key = minimality_key(c.complex);
        if (!minimal_[k] || key < std::get<0>(*minimal_[k])) {
          ojson record;
          record["complex"] = complex_json(c);
          record["oracle"] = outcome.diagnostics["oracle_beta_2_d_plus_1"];
          record["predicted"] = e["predicted"];
          record["edges"] = outcome.diagnostics["edges"];
          record["Nt"] = e["Nt"];
          minimal_[k] = std::make_tuple(key, record);
        }
      }
    }
  }

  ojson details(bool& failed) const override {
    failed = false;
    ojson j;
    ojson per = ojson::object();
    bool some_exact = false;
    for (std::size_t k = 0; k < all_interpretations.size(); ++k) {
      ojson e;
      e["matches"] = matches_[k];
      e["mismatches"] = mismatches_[k];
      e["exact_on_all"] = mismatches_[k] == 0;
      e["minimal_counterexample"] = minimal_[k] ? std::get<1>(*minimal_[k]) : ojson(nullptr);
      some_exact = some_exact || mismatches_[k] == 0;
      per[std::string(to_string(all_interpretations[k]))] = e;
    }
    j["interpretations"] = per;
    j["some_interpretation_exact"] = some_exact;
    return j;
  }

 private:
  using Key = decltype(minimality_key(std::declval<SimplicialComplex>()));
  std::array<std::size_t, 3> matches_{};
  std::array<std::size_t, 3> mismatches_{};
  std::array<std::optional<std::tuple<Key, ojson>>, 3> minimal_;
};

class ShellableConnectedCheck : public TheoremCheck {
 public:
  using TheoremCheck::TheoremCheck;
  Outcome evaluate(const SimplicialComplex& c) const override {
    if (auto skip = require_line_graph(c)) return *skip;
    auto shelling = is_shellable(c, options_.budget);
    if (!shelling) return Outcome::skipped("hypothesis: not shellable");
    ojson diag;
    diag["shelling"] = *shelling;
    bool connected = is_connected(line_graph(c).graph);
    diag["L_connected"] = connected;
    return Outcome::verdict(connected, diag);
  }
};

class StarFreeCheck : public TheoremCheck {
 public:
  using TheoremCheck::TheoremCheck;
  Outcome evaluate(const SimplicialComplex& c) const override {
    if (auto skip = require_line_graph(c)) return *skip;
    std::size_t d = c.facets().front().size();
    bool star = has_induced_star(line_graph(c).graph, d + 1);
    ojson diag;
    diag["induced_star_leaves"] = d + 1;
    diag["found"] = star;
    return Outcome::verdict(!star, diag);
  }
};

class CliquePartitionCheck : public TheoremCheck {
 public:
  using TheoremCheck::TheoremCheck;
  Outcome evaluate(const SimplicialComplex& c) const override {
    if (auto skip = require_line_graph(c)) return *skip;
    std::size_t d = c.facets().front().size();
    auto partition = clique_edge_partition(line_graph(c).graph, d, options_.budget);
    ojson diag;
    diag["max_cliques_per_vertex"] = d;
    if (partition) diag["partition"] = *partition;
    return Outcome::verdict(partition.has_value(), diag);
  }
};

class C3Check : public TheoremCheck {
 public:
  using TheoremCheck::TheoremCheck;
  Outcome evaluate(const SimplicialComplex& c) const override {
    if (auto skip = require_line_graph(c)) return *skip;
    if (c.facet_count() != 3 || !is_complete_graph(line_graph(c).graph)) {
      return Outcome::skipped("hypothesis: L(Δ) is not C_3");
    }
    auto form = characterize_complete(c);
    ojson diag;
    diag["form"] = std::string(to_string(form));
    return Outcome::verdict(form != CompleteForm::Neither, diag);
  }
  ojson details(bool& failed) const override {
    failed = false;
    ojson rows = ojson::array();
    for (int d = 2; d <= 6; ++d) {
      for (auto which : {TriangleJoinCase::Vertices, TriangleJoinCase::Edges}) {
        auto complex = make_triangle_join(d, which);
        bool ok = are_isomorphic(line_graph(complex).graph, Graph::cycle(3), options_.budget);
        failed = failed || !ok;
        ojson row;
        row["d"] = d;
        row["case"] = which == TriangleJoinCase::Vertices ? "vertices" : "edges";
        row["L_is_C3"] = ok;
        rows.push_back(row);
      }
    }
    ojson j;
    j["families"] = rows;
    return j;
  }
};

class CompleteCheck : public TheoremCheck {
 public:
  using TheoremCheck::TheoremCheck;
  Outcome evaluate(const SimplicialComplex& c) const override {
    if (auto skip = require_line_graph(c)) return *skip;
    if (c.facet_count() < 4 || !is_complete_graph(line_graph(c).graph)) {
      return Outcome::skipped("hypothesis: L(Δ) is not complete on at least 4 vertices");
    }
    auto form = characterize_complete(c);
    ojson diag;
    diag["form"] = std::string(to_string(form));
    return Outcome::verdict(form != CompleteForm::Neither, diag);
  }
  ojson details(bool& failed) const override {
    failed = false;
    ojson rows = ojson::array();
    for (int d = 2; d <= 4; ++d) {
      for (int r = 3; r <= 7; ++r) {
        bool ok = are_isomorphic(line_graph(make_cone(r, d)).graph, Graph::complete(static_cast<std::size_t>(r)),
                                 options_.budget);
        failed = failed || !ok;
        rows.push_back(ojson{{"family", "cone"}, {"r", r}, {"d", d}, {"L_is_complete", ok}});
      }
      bool ok = are_isomorphic(line_graph(make_simplex_subsets(d, d + 1)).graph,
                               Graph::complete(static_cast<std::size_t>(d + 1)), options_.budget);
      failed = failed || !ok;
      rows.push_back(ojson{{"family", "simplex_subsets"}, {"r", d + 1}, {"d", d}, {"L_is_complete", ok}});
    }
    ojson j;
    j["families"] = rows;
    return j;
  }
};

class CycleCheck : public TheoremCheck {
 public:
  using TheoremCheck::TheoremCheck;
  Outcome evaluate(const SimplicialComplex& c) const override {
    if (auto skip = require_line_graph(c)) return *skip;
    if (c.facet_count() < 4 || !is_cycle_graph(line_graph(c).graph)) {
      return Outcome::skipped("hypothesis: L(Δ) is not a cycle of length at least 4");
    }
    std::size_t d = c.facets().front().size();
    std::size_t r = c.facet_count();
    ojson diag;
    diag["r"] = r;
    diag["d"] = d;
    diag["branch"] = d + 1 < r ? "d < r-1" : "d >= r-1";
    bool ok = matches_cycle_family(c);
    diag["matches_family"] = ok;
    return Outcome::verdict(ok, diag);
  }
  ojson details(bool& failed) const override {
    failed = false;
    ojson windows = ojson::array();
    ojson padded = ojson::array();
    for (int r = 4; r <= 8; ++r) {
      for (int d = 2; d <= r + 1; ++d) {
        auto lg = line_graph(make_cycle_complex(r, d)).graph;
        const bool cycle = are_isomorphic(lg, Graph::cycle(static_cast<std::size_t>(r)), options_.budget);
        const bool complete = are_isomorphic(lg, Graph::complete(static_cast<std::size_t>(r)), options_.budget);
        ojson row;
        row["r"] = r;
        row["d"] = d;
        row["L"] = cycle ? "C_r" : complete ? "K_r" : "other";
        if (d < r - 1) {
          failed = failed || !cycle;
          windows.push_back(row);
        } else {
          padded.push_back(row);
        }
      }
    }
    ojson j;
    j["branch_d_lt_r_minus_1"] = windows;
    j["branch_d_ge_r_minus_1"] = padded;
    return j;
  }
};

class ChordalMainCheck : public TheoremCheck {
 public:
  ChordalMainCheck(const VerifyOptions& options, bool dual) : TheoremCheck(options), dual_(dual) {}
  Outcome evaluate(const SimplicialComplex& c) const override {
    if (auto skip = require_line_graph(c)) return *skip;
    auto h = line_graph_hypothesis(c);
    ojson diag = h.to_json();
    diag["complex_chordal"] = is_chordal_complex(c, options_.budget);
    if (!h.holds()) return Outcome::skipped(h.failure(), diag);
    if (!dual_) return Outcome::verdict(diag["complex_chordal"].get<bool>(), diag);
    if (c.facets().front() == c.ambient()) return Outcome::skipped("input: facet equals ambient", diag);
    bool ok = is_chordal_complex(complement_complex(c), options_.budget);
    diag["complement_chordal"] = ok;
    return Outcome::verdict(ok, diag);
  }

 private:
  bool dual_;
};

class CorollaryChainCheck : public TheoremCheck {
 public:
  using TheoremCheck::TheoremCheck;
  static constexpr std::array<std::string_view, 7> clauses{
      "ind_shellable",          "ind_cohen_macaulay",         "dual_shellable",    "dual_cohen_macaulay",
      "sr_ideal_linear_quotients", "sr_ideal_linear_resolution", "froberg_hypothesis"};

  Outcome evaluate(const SimplicialComplex& input) const override {
    if (auto skip = require_line_graph(input)) return *skip;
    auto h = line_graph_hypothesis(input);
    ojson diag = h.to_json();
    if (!h.holds()) return Outcome::skipped(h.failure(), diag);
    // Vertices outside every facet would add linear generators to I_Δ; work on the support.
    const auto complex = SimplicialComplex::from_facets(input.facets(), input.support());
    const auto& c = complex;
    auto dual = alexander_dual(c);
    if (dual.is_void()) return Outcome::skipped("input: Alexander dual is void", diag);
    auto ind = independence_complex(clutter_of(c));
    auto sr = stanley_reisner_ideal(c);
    ojson clause;
    clause["ind_shellable"] = is_shellable_nonpure(ind, options_.budget).has_value();
    clause["ind_cohen_macaulay"] = is_cohen_macaulay(ind, options_.field);
    clause["dual_shellable"] = is_shellable_nonpure(dual, options_.budget).has_value();
    clause["dual_cohen_macaulay"] = is_cohen_macaulay(dual, options_.field);
    clause["sr_ideal_linear_quotients"] = has_linear_quotients(sr, options_.budget).has_value();
    clause["sr_ideal_linear_resolution"] = has_linear_resolution(sr, options_.field);
    // Given a connected chordal L(Δ), the alternative hypothesis via the edge ideal of its complement.
    Graph co = complement(line_graph(c).graph);
    clause["froberg_hypothesis"] = co.edge_count() == 0 || has_linear_resolution(edge_ideal(co), options_.field);
    bool all = true;
    for (auto name : clauses) all = all && clause[std::string(name)].get<bool>();
    diag["clauses"] = clause;
    return Outcome::verdict(all, diag);
  }

  void absorb(const NamedComplex&, const Outcome& outcome) override {
    if (outcome.kind == Outcome::Kind::Skipped) return;
    for (std::size_t k = 0; k < clauses.size(); ++k) {
      if (!outcome.diagnostics["clauses"][std::string(clauses[k])].get<bool>()) ++failures_[k];
    }
  }

  ojson details(bool& failed) const override {
    failed = false;
    ojson j = ojson::object();
    for (std::size_t k = 0; k < clauses.size(); ++k) j["clause_failures"][std::string(clauses[k])] = failures_[k];
    return j;
  }

 private:
  std::array<std::size_t, clauses.size()> failures_{};
};

class FrobergCheck_ : public TheoremCheck {
 public:
  using TheoremCheck::TheoremCheck;
  Outcome evaluate(const SimplicialComplex& c) const override {
    if (!c.is_pure() || c.facets().front().size() != 2) return Outcome::skipped("input: not a graph (facet size != 2)");
    auto check = froberg_check(graph_of_complex(c), options_.field);
    ojson diag;
    diag["linear_resolution"] = check.linear_resolution;
    diag["complement_chordal"] = check.complement_chordal;
    return Outcome::verdict(check.agree(), diag);
  }
};

class EvD2Check : public TheoremCheck {
 public:
  using TheoremCheck::TheoremCheck;
  Outcome evaluate(const SimplicialComplex& c) const override {
    if (!c.is_pure() || c.facets().front().size() != 2) return Outcome::skipped("input: not a graph (facet size != 2)");
    Graph g = graph_of_complex(c);
    auto oracle = static_cast<long long>(beta(facet_ideal(c), 2, 3, options_.field));
    auto predicted = predicted_beta2(c, NtInterpretation::AllSimplexType, options_.budget);
    auto ev = static_cast<long long>(line_graph_of_graph(g).edge_count()) - static_cast<long long>(triangles(g).size());
    ojson diag;
    diag["oracle_beta_2_3"] = oracle;
    diag["predicted_all_simplex_type"] = predicted;
    diag["edges_L_minus_triangles"] = ev;
    return Outcome::verdict(oracle == predicted && predicted == ev, diag);
  }
};

inline std::unique_ptr<TheoremCheck> make_check(TheoremId id, const VerifyOptions& options) {
  switch (id) {
    case TheoremId::Deltac: return std::make_unique<DeltacCheck>(options);
    case TheoremId::EdgeCount: return std::make_unique<EdgeCountCheck_>(options);
    case TheoremId::Betti2: return std::make_unique<Betti2Check>(options);
    case TheoremId::ShellableConnected: return std::make_unique<ShellableConnectedCheck>(options);
    case TheoremId::StarFree: return std::make_unique<StarFreeCheck>(options);
    case TheoremId::CliquePartition: return std::make_unique<CliquePartitionCheck>(options);
    case TheoremId::C3: return std::make_unique<C3Check>(options);
    case TheoremId::Complete: return std::make_unique<CompleteCheck>(options);
    case TheoremId::Cycle: return std::make_unique<CycleCheck>(options);
    case TheoremId::ChordalMain: return std::make_unique<ChordalMainCheck>(options, false);
    case TheoremId::DualChordal: return std::make_unique<ChordalMainCheck>(options, true);
    case TheoremId::CorollaryChain: return std::make_unique<CorollaryChainCheck>(options);
    case TheoremId::Froberg: return std::make_unique<FrobergCheck_>(options);
    case TheoremId::EvD2: return std::make_unique<EvD2Check>(options);
  }
  throw Error(ErrorKind::UnknownTheorem, "unhandled theorem id");
}

}  // namespace detail

/// Runs one theorem over an explicit list of complexes. Counterexamples and
/// skips are data; only infrastructure failures escape as exceptions.
inline VerifyReport verify(TheoremId id, const std::vector<NamedComplex>& corpus, const VerifyOptions& options,
                           ojson corpus_description = ojson::object()) {
  const auto start = std::chrono::steady_clock::now();
  auto check = detail::make_check(id, options);
  VerifyReport report;
  report.theorem = std::string(to_string(id));
  report.corpus = std::move(corpus_description);
  report.seed = options.seed;
  report.field = options.field;
  std::vector<std::pair<decltype(detail::minimality_key(std::declval<SimplicialComplex>())), ojson>> found;
  for (const auto& instance : corpus) {
    Outcome outcome;
    try {
      outcome = check->evaluate(instance.complex);
    } catch (const Error& e) {
      outcome = Outcome::skipped(e.kind() == ErrorKind::BudgetExceeded ? "budget: " + std::string(e.what())
                                                                         : "error: " + std::string(to_string(e.kind())));
      outcome.budget = e.kind() == ErrorKind::BudgetExceeded;
    }
    check->absorb(instance, outcome);
    switch (outcome.kind) {
      case Outcome::Kind::Confirmed:
        ++report.trials;
        ++report.confirmations;
        break;
      case Outcome::Kind::Counterexample: {
        ++report.trials;
        ojson entry;
        entry["complex"] = detail::complex_json(instance);
        entry["diagnostics"] = outcome.diagnostics;
        found.emplace_back(detail::minimality_key(instance.complex), std::move(entry));
        break;
      }
      case Outcome::Kind::Skipped:
        ++report.skips[outcome.reason];
        if (outcome.budget) ++report.budget_skips;
        if (report.skip_samples.size() < VerifyReport::max_skip_samples) {
          ojson sample;
          sample["complex"] = detail::complex_json(instance);
          sample["reason"] = outcome.reason;
          sample["diagnostics"] = outcome.diagnostics;
          report.skip_samples.push_back(std::move(sample));
        }
        break;
    }
  }
  std::stable_sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [key, entry] : found) report.counterexamples.push_back(std::move(entry));
  report.details = check->details(report.details_failed);
  if (options.timing) {
    report.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
  return report;
}

inline VerifyReport verify(TheoremId id, const CorpusSpec& spec, const VerifyOptions& options) {
  return verify(id, materialize(spec, options.seed, options.budget), options, describe(spec));
}

}  // namespace frl
