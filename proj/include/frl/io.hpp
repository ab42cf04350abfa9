#pragma once

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "frl/complex.hpp"

namespace frl {

/// On-disk description of a complex.
///
/// JSON:  {"name": "...", "ambient": [1,2,...], "facets": [[1,2,3], ...]}
/// Text:  one facet per line, whitespace-separated positive integers; '#' starts a comment.
struct ComplexDocument {
  std::vector<std::vector<int>> facets;
  std::optional<std::vector<int>> ambient;
  std::optional<std::string> name;

  SimplicialComplex to_complex() const {
    std::vector<FaceSet> faces;
    for (const auto& f : facets) faces.push_back(FaceSet::from_range(f));
    std::optional<FaceSet> amb;
    if (ambient) amb = FaceSet::from_range(*ambient);
    return SimplicialComplex::from_facets(std::move(faces), amb);
  }

  static ComplexDocument from_complex(const SimplicialComplex& complex, std::optional<std::string> name = {}) {
    ComplexDocument doc;
    for (FaceSet f : complex.facets()) doc.facets.push_back(f.members());
    doc.ambient = complex.ambient().members();
    doc.name = std::move(name);
    return doc;
  }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    if (name) j["name"] = *name;
    if (ambient) j["ambient"] = *ambient;
    j["facets"] = facets;
    return j;
  }
};

namespace detail {

[[noreturn]] inline void parse_fail(std::size_t line, std::size_t column, const std::string& what) {
  throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what);
}

/// Line and column (1-based) of a byte offset.
inline std::pair<std::size_t, std::size_t> locate(std::string_view text, std::size_t offset) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

inline std::vector<int> json_vertex_list(const nlohmann::json& value, const std::string& where) {
  if (!value.is_array()) parse_fail(1, 1, where + " must be an array of positive integers");
  std::vector<int> out;
  for (const auto& v : value) {
    if (!v.is_number_integer() || v.get<long long>() < 1 || v.get<long long>() > FaceSet::max_vertex) {
      parse_fail(1, 1, where + " contains " + v.dump() + ", expected an integer in [1, 64]");
    }
    out.push_back(v.get<int>());
  }
  return out;
}

inline ComplexDocument parse_json_document(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    auto [line, column] = locate(text, e.byte == 0 ? 0 : e.byte - 1);
    parse_fail(line, column, e.what());
  }
  if (!j.is_object()) parse_fail(1, 1, "top-level JSON value must be an object");
  if (!j.contains("facets")) parse_fail(1, 1, "missing \"facets\"");
  ComplexDocument doc;
  const auto& facets = j.at("facets");
  if (!facets.is_array()) parse_fail(1, 1, "\"facets\" must be an array");
  for (std::size_t i = 0; i < facets.size(); ++i) {
    doc.facets.push_back(json_vertex_list(facets[i], "facets[" + std::to_string(i) + "]"));
  }
  if (j.contains("ambient") && !j.at("ambient").is_null()) doc.ambient = json_vertex_list(j.at("ambient"), "ambient");
  if (j.contains("name") && !j.at("name").is_null()) {
    if (!j.at("name").is_string()) parse_fail(1, 1, "\"name\" must be a string");
    doc.name = j.at("name").get<std::string>();
  }
  return doc;
}

inline ComplexDocument parse_text_document(std::string_view text) {
  ComplexDocument doc;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::vector<int> facet;
    std::size_t pos = 0;
    while (pos < line.size()) {
      if (std::isspace(static_cast<unsigned char>(line[pos]))) {
        ++pos;
        continue;
      }
      std::size_t token_start = pos;
      while (pos < line.size() && !std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
      std::string token(line.substr(token_start, pos - token_start));
      bool digits = std::all_of(token.begin(), token.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
      if (!digits || token.size() > 3 || std::stoi(token) < 1 || std::stoi(token) > FaceSet::max_vertex) {
        parse_fail(line_no, token_start + 1, "expected a vertex in [1, 64], got '" + token + "'");
      }
      facet.push_back(std::stoi(token));
    }
    if (!facet.empty()) doc.facets.push_back(std::move(facet));
    if (end == text.size()) break;
    start = end + 1;
  }
  return doc;
}

}  // namespace detail

/// Accepts either format: input whose first non-blank character is '{' is JSON.
inline ComplexDocument parse_document(std::string_view text) {
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return detail::parse_json_document(text);
  return detail::parse_text_document(text);
}

inline SimplicialComplex parse_complex(std::string_view text) { return parse_document(text).to_complex(); }

/// Canonical JSON form (ambient always written, so parse_complex inverts it).
inline std::string serialize_complex(const SimplicialComplex& complex, std::optional<std::string> name = {}) {
  return ComplexDocument::from_complex(complex, std::move(name)).to_json().dump() + "\n";
}

/// Line-per-facet text; the ambient is not representable in this format.
inline std::string serialize_complex_text(const SimplicialComplex& complex) {
  std::ostringstream out;
  for (FaceSet f : complex.facets()) {
    bool first = true;
    for (Vertex v : f) {
      out << (first ? "" : " ") << v;
      first = false;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace frl
