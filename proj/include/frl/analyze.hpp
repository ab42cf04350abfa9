#pragma once

#include <sstream>
#include <string>

#include "json.hpp"

#include "frl/algebra.hpp"
#include "frl/families.hpp"
#include "frl/line_graph.hpp"
#include "frl/minors.hpp"
#include "frl/shelling.hpp"
#include "frl/verify.hpp"

namespace frl {

namespace detail {

/// Runs `f`; a search cap turns into {"budget_exceeded": message} instead of aborting the report.
template <class F>
ojson guarded(F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::BudgetExceeded && e.kind() != ErrorKind::DegenerateDual) throw;
    ojson j;
    j[e.kind() == ErrorKind::BudgetExceeded ? "budget_exceeded" : "not_applicable"] = e.what();
    return j;
  }
}

inline ojson graph_json(const Graph& g) {
  ojson j;
  j["order"] = g.order();
  ojson edges = ojson::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  j["edges"] = edges;
  return j;
}

inline ojson distance_json(std::size_t d) { return d == infinite_distance ? ojson("inf") : ojson(d); }

}  // namespace detail

/// Everything the library can say about one complex, as JSON.
inline ojson analyze(const SimplicialComplex& complex, Field field = Field::GF2,
                     const Budget& budget = Budget::from_env(), std::optional<std::string> name = std::nullopt) {
  ojson j;
  j["complex"] = ComplexDocument::from_complex(complex, name).to_json();
  j["field"] = std::string(to_string(field));
  j["pure"] = complex.is_pure();
  j["dimension"] = complex.dimension();
  j["facet_count"] = complex.facet_count();
  j["complex_chordal"] = detail::guarded([&] { return ojson(is_chordal_complex(complex, budget)); });

  const bool line_graph_defined = complex.is_pure() && complex.facets().front().size() >= 2;
  if (line_graph_defined) {
    const std::size_t d = complex.facets().front().size();
    auto lg = line_graph(complex);
    ojson l = detail::graph_json(lg.graph);
    auto counts = edge_count_identities(complex);
    l["edge_count_constructed"] = counts.counted;
    l["edge_count_formula"] = counts.formula;
    l["degree_sum"] = counts.degree_sum;
    l["connected"] = is_connected(lg.graph);
    l["diameter"] = detail::distance_json(diameter(lg.graph));
    auto peo = is_chordal_graph(lg.graph);
    l["chordal"] = peo.has_value();
    j["line_graph"] = l;

    ojson tris = ojson::array();
    for (const auto& t : classify_triangles(complex)) {
      tris.push_back({{"facets", t.facets}, {"type", std::string(to_string(t.type))}});
    }
    j["triangles"] = tris;

    ojson beta2;
    auto oracle = detail::guarded([&] { return ojson(beta(facet_ideal(complex), 2, static_cast<int>(d) + 1, field)); });
    beta2["oracle"] = oracle;
    for (auto interp : all_interpretations) {
      beta2["interpretations"][std::string(to_string(interp))] = detail::guarded([&] {
        auto nt = count_Nt(complex, interp, budget);
        long long predicted = static_cast<long long>(counts.counted) - static_cast<long long>(nt);
        ojson e;
        e["Nt"] = nt;
        e["predicted"] = predicted;
        if (oracle.is_number()) e["matches_oracle"] = predicted == oracle.get<long long>();
        return e;
      });
    }
    j["beta_2_d_plus_1"] = beta2;

    j["shelling"] = detail::guarded([&] {
      auto order = is_shellable(complex, budget);
      return order ? ojson(*order) : ojson(nullptr);
    });
    if (is_complete_graph(lg.graph)) j["complete_form"] = std::string(to_string(characterize_complete(complex)));
    if (complex.facet_count() >= 4 && is_cycle_graph(lg.graph)) {
      j["cycle_family"] = detail::guarded([&] { return ojson(matches_cycle_family(complex)); });
    }
  } else {
    j["line_graph"] = nullptr;
    j["shelling_nonpure"] = detail::guarded([&] {
      auto order = is_shellable_nonpure(complex, budget);
      return order ? ojson(*order) : ojson(nullptr);
    });
  }

  j["cohen_macaulay"] = detail::guarded([&] { return ojson(is_cohen_macaulay(complex, field)); });
  if (line_graph_defined) {
    // C(Δ) is the clutter of facets; Ind(C(Δ)) is the complex whose Stanley–Reisner ideal is I(Δ).
    j["independence_complex_cohen_macaulay"] =
        detail::guarded([&] { return ojson(is_cohen_macaulay(independence_complex(clutter_of(complex)), field)); });
  }

  if (complex.is_pure() && complex.facets().front().size() == 2) {
    j["froberg"] = detail::guarded([&] {
      auto check = froberg_check(detail::graph_of_complex(complex), field);
      ojson f;
      f["linear_resolution"] = check.linear_resolution;
      f["complement_chordal"] = check.complement_chordal;
      f["agree"] = check.agree();
      return f;
    });
  }
  return j;
}

/// Human-readable rendering of an `analyze` report.
inline std::string analyze_text(const ojson& report) {
  std::ostringstream out;
  auto line = [&](const char* key, const ojson& value) {
    out << key;
    for (std::size_t pad = std::string_view(key).size(); pad < 28; ++pad) out << ' ';
    out << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
  };
  line("facets", report["complex"]["facets"]);
  line("pure", report["pure"]);
  line("dimension", report["dimension"]);
  line("chordal (complex)", report["complex_chordal"]);
  if (!report["line_graph"].is_null()) {
    const auto& l = report["line_graph"];
    line("L edges", l["edges"]);
    line("L edge count (constructed)", l["edge_count_constructed"]);
    line("L edge count (formula)", l["edge_count_formula"]);
    line("L connected", l["connected"]);
    line("L diameter", l["diameter"]);
    line("L chordal", l["chordal"]);
    line("triangles", report["triangles"]);
    line("beta_{2,d+1} oracle", report["beta_2_d_plus_1"]["oracle"]);
    for (const auto& [name, e] : report["beta_2_d_plus_1"]["interpretations"].items()) {
      out << "  " << name << ": " << e.dump() << '\n';
    }
    line("shelling", report["shelling"]);
    if (report.contains("complete_form")) line("complete form", report["complete_form"]);
    if (report.contains("cycle_family")) line("cycle family", report["cycle_family"]);
  } else {
    line("shelling (nonpure)", report["shelling_nonpure"]);
  }
  line("Cohen-Macaulay", report["cohen_macaulay"]);
  if (report.contains("independence_complex_cohen_macaulay")) {
    line("Ind(C) Cohen-Macaulay", report["independence_complex_cohen_macaulay"]);
  }
  if (report.contains("froberg")) line("Froberg", report["froberg"]);
  return out.str();
}

}  // namespace frl
