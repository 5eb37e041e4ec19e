#pragma once

#include <span>
#include <vector>

#include "hpl/torus/geometry.hpp"
#include "hpl/torus/mode_lattice.hpp"
#include "hpl/types.hpp"

namespace hpl::torus {

// A (p,q)-form Σ_k Σ_{I,J} c_{k,I,J} e^{2πi⟨k,x⟩} dz_I ∧ dz̄_J truncated to
// the modes |k|_∞ ≤ band. Coefficients are stored mode-major in the
// component order of the geometry's FormSpace.
class FourierForm {
 public:
  FourierForm(GeometryPtr geometry, Bidegree bidegree, int band);

  GeometryPtr const& geometry_ptr() const { return geometry_; }
  TorusGeometry const& geometry() const { return *geometry_; }
  Bidegree bidegree() const { return bidegree_; }
  int band() const { return lattice_->band(); }
  ModeLattice const& lattice() const { return *lattice_; }
  FormSpace const& space() const { return *space_; }
  int mode_count() const { return lattice_->size(); }
  int component_count() const { return space_->size(); }

  Complex& at(int mode, int component) {
    return data_[static_cast<std::size_t>(mode) * component_count() +
                 component];
  }
  Complex at(int mode, int component) const {
    return data_[static_cast<std::size_t>(mode) * component_count() +
                 component];
  }
  std::span<Complex> mode_coefficients(int mode) {
    return {data_.data() + static_cast<std::size_t>(mode) * component_count(),
            static_cast<std::size_t>(component_count())};
  }
  std::span<Complex const> mode_coefficients(int mode) const {
    return {data_.data() + static_cast<std::size_t>(mode) * component_count(),
            static_cast<std::size_t>(component_count())};
  }
  std::vector<Complex>& data() { return data_; }
  std::vector<Complex> const& data() const { return data_; }

  Complex coefficient(std::span<int const> mode, Mask holo, Mask anti) const;
  void set_coefficient(std::span<int const> mode, Mask holo, Mask anti,
                       Complex value);

  // Zero-padded or truncated copy.
  FourierForm with_band(int band) const;
  // L² norm of the modes outside the given band.
  double mass_outside(int band) const;
  // Largest |k|_∞ among nonzero modes; 0 for the zero form.
  int effective_band() const;
  bool is_constant() const { return effective_band() == 0; }
  // coefficient(-k, J, I) = (-1)^{pq} conj coefficient(k, I, J); only
  // meaningful for p = q.
  bool is_real(double tol) const;

  FourierForm& operator+=(FourierForm const& other);
  FourierForm& operator-=(FourierForm const& other);
  FourierForm& operator*=(Complex s);

 private:
  GeometryPtr geometry_;
  Bidegree bidegree_;
  ModeLattice const* lattice_;
  FormSpace const* space_;
  std::vector<Complex> data_;
};

FourierForm operator+(FourierForm const& a, FourierForm const& b);
FourierForm operator-(FourierForm const& a, FourierForm const& b);
FourierForm operator*(Complex s, FourierForm a);

// L² inner product, linear in the first argument; volume normalized to 1.
Complex inner(FourierForm const& a, FourierForm const& b);
double norm(FourierForm const& a);

}  // namespace hpl::torus
