#pragma once

#include <vector>

#include "hpl/torus/exterior.hpp"
#include "hpl/torus/fourier_form.hpp"
#include "hpl/torus/geometry.hpp"

namespace hpl::torus {

// Orthonormal basis of the constant primitive n-forms, grouped by type:
// group α holds the forms of type (n-α, α).
//
// Within a type the monomials dz_I ∧ dz̄_J are taken in order of increasing
// |I ∩ J|, then lexicographically in (I, J); each is projected onto the
// primitive subspace and orthonormalized against the previous ones (Gram–
// Schmidt in the flat metric), and dependent ones are dropped.
class PrimitiveBasis {
 public:
  PrimitiveBasis(GeometryPtr geometry, int degree);

  GeometryPtr const& geometry_ptr() const { return geometry_; }
  int degree() const { return degree_; }
  int dimension() const { return static_cast<int>(elements_.size()); }
  // (h^{n,0}, ..., h^{0,n}) of the primitive part.
  std::vector<int> const& hodge_numbers() const { return hodge_numbers_; }
  int group_offset(int alpha) const { return offsets_[alpha]; }
  int group_size(int alpha) const { return hodge_numbers_[alpha]; }

  ExteriorElement const& element(int index) const { return elements_[index]; }
  // Band-0 form of the basis element.
  FourierForm form(int index, int band = 0) const;

  // Coordinates ⟨e, η_i⟩ of the orthogonal projection of e onto the span.
  Vector coordinates(ExteriorElement const& e) const;
  // Coordinates of the constant part of f.
  Vector coordinates(FourierForm const& f) const;

 private:
  GeometryPtr geometry_;
  int degree_;
  std::vector<ExteriorElement> elements_;
  std::vector<int> hodge_numbers_;
  std::vector<int> offsets_;
};

}  // namespace hpl::torus
