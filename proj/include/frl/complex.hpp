#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "frl/error.hpp"
#include "frl/face_set.hpp"

namespace frl {

/// A simplicial complex given by its facets over an explicit ambient vertex set.
///
/// Facets are kept as an antichain in canonical ascending order. A complex with
/// no facets at all (the void complex) only arises from minors; it is legal as
/// a value but every constructor from user data rejects it.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Builds a complex from arbitrary faces: dominated faces are dropped and the
  /// ambient defaults to the union of the faces.
  static SimplicialComplex from_facets(std::vector<FaceSet> faces, std::optional<FaceSet> ambient = std::nullopt) {
    if (faces.empty()) throw Error(ErrorKind::EmptyInput, "no faces given");
    FaceSet support;
    for (FaceSet f : faces) support = support | f;
    if (ambient && !support.is_subset_of(*ambient)) {
      throw Error(ErrorKind::OutOfAmbient,
                  "faces use " + (support - *ambient).to_string() + " outside ambient " + ambient->to_string());
    }
    SimplicialComplex c;
    c.ambient_ = ambient.value_or(support);
    c.facets_ = maximal_sets(std::move(faces));
    return c;
  }

  /// The complex with no faces, not even the empty one.
  static SimplicialComplex void_complex(FaceSet ambient) {
    SimplicialComplex c;
    c.ambient_ = ambient;
    return c;
  }

  const FaceSet& ambient() const noexcept { return ambient_; }
  const std::vector<FaceSet>& facets() const noexcept { return facets_; }
  std::size_t facet_count() const noexcept { return facets_.size(); }
  bool is_void() const noexcept { return facets_.empty(); }

  /// Union of the facets (vertices that actually occur).
  FaceSet support() const noexcept {
    FaceSet s;
    for (FaceSet f : facets_) s = s | f;
    return s;
  }

  /// max |F| - 1; the void complex also reports -1.
  int dimension() const noexcept {
    int dim = -1;
    for (FaceSet f : facets_) dim = std::max(dim, static_cast<int>(f.size()) - 1);
    return dim;
  }

  bool is_pure() const noexcept {
    return std::all_of(facets_.begin(), facets_.end(),
                       [&](FaceSet f) { return f.size() == facets_.front().size(); });
  }

  bool contains_face(FaceSet face) const noexcept {
    return std::any_of(facets_.begin(), facets_.end(), [&](FaceSet f) { return face.is_subset_of(f); });
  }

  bool operator==(const SimplicialComplex&) const = default;

  std::string to_string() const {
    std::string out = "<";
    for (std::size_t i = 0; i < facets_.size(); ++i) {
      if (i) out += ",";
      out += facets_[i].to_string();
    }
    return out + "> on " + ambient_.to_string();
  }

 private:
  FaceSet ambient_;
  std::vector<FaceSet> facets_;
};

/// An antichain of circuits over an ambient vertex set.
class Clutter {
 public:
  static Clutter from_circuits(std::vector<FaceSet> circuits, std::optional<FaceSet> ambient = std::nullopt) {
    std::sort(circuits.begin(), circuits.end());
    if (std::adjacent_find(circuits.begin(), circuits.end()) != circuits.end() || !is_antichain(circuits)) {
      throw Error(ErrorKind::NotAntichain, "circuits must be pairwise incomparable");
    }
    FaceSet support;
    for (FaceSet c : circuits) support = support | c;
    if (ambient && !support.is_subset_of(*ambient)) {
      throw Error(ErrorKind::OutOfAmbient, "circuit outside ambient " + ambient->to_string());
    }
    Clutter out;
    out.ambient_ = ambient.value_or(support);
    out.circuits_ = std::move(circuits);
    return out;
  }

  const FaceSet& ambient() const noexcept { return ambient_; }
  const std::vector<FaceSet>& circuits() const noexcept { return circuits_; }

  bool operator==(const Clutter&) const = default;

 private:
  FaceSet ambient_;
  std::vector<FaceSet> circuits_;
};

/// C(Δ): the clutter whose circuits are the facets of Δ, on the same ambient.
inline Clutter clutter_of(const SimplicialComplex& complex) {
  return Clutter::from_circuits(complex.facets(), complex.ambient());
}

inline SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
  if (a.ambient().intersects(b.ambient())) {
    throw Error(ErrorKind::OverlappingAmbients,
                "ambients share " + (a.ambient() & b.ambient()).to_string());
  }
  std::vector<FaceSet> faces;
  for (FaceSet f : a.facets()) {
    for (FaceSet g : b.facets()) faces.push_back(f | g);
  }
  if (faces.empty()) return SimplicialComplex::void_complex(a.ambient() | b.ambient());
  return SimplicialComplex::from_facets(std::move(faces), a.ambient() | b.ambient());
}

/// Δ^c: facets are the ambient-complements of the facets of Δ.
inline SimplicialComplex complement_complex(const SimplicialComplex& complex) {
  if (complex.is_void()) throw Error(ErrorKind::EmptyInput, "void complex has no complement");
  std::vector<FaceSet> faces;
  for (FaceSet f : complex.facets()) {
    if (f == complex.ambient()) {
      throw Error(ErrorKind::DegenerateComplement, "facet " + f.to_string() + " equals the ambient");
    }
    faces.push_back(complex.ambient() - f);
  }
  return SimplicialComplex::from_facets(std::move(faces), complex.ambient());
}

/// Inclusion-minimal subsets of the ambient that are not faces, in canonical order.
///
/// These are the minimal transversals of the facet complements. The full simplex
/// has none; the void complex has exactly the empty set.
inline std::vector<FaceSet> minimal_nonfaces(const SimplicialComplex& complex) {
  std::vector<FaceSet> complements;
  for (FaceSet f : complex.facets()) complements.push_back(complex.ambient() - f);
  return minimal_transversals(complements);
}

/// Δ∨ = { ambient \ N : N not a face }, given by the complements of the minimal
/// nonfaces. The dual of the full simplex is returned as the void complex.
inline SimplicialComplex alexander_dual(const SimplicialComplex& complex) {
  auto nonfaces = minimal_nonfaces(complex);
  if (nonfaces.empty()) return SimplicialComplex::void_complex(complex.ambient());
  std::vector<FaceSet> faces;
  for (FaceSet n : nonfaces) faces.push_back(complex.ambient() - n);
  return SimplicialComplex::from_facets(std::move(faces), complex.ambient());
}

/// Ind(C): facets are the maximal subsets of the ambient containing no circuit,
/// i.e. complements of the minimal vertex covers.
inline SimplicialComplex independence_complex(const Clutter& clutter) {
  auto covers = minimal_transversals(clutter.circuits());
  if (covers.empty()) return SimplicialComplex::void_complex(clutter.ambient());
  std::vector<FaceSet> faces;
  for (FaceSet c : covers) faces.push_back(clutter.ambient() - c);
  return SimplicialComplex::from_facets(std::move(faces), clutter.ambient());
}

}  // namespace frl
