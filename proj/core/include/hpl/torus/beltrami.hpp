#pragma once

#include <span>
#include <vector>

#include "hpl/torus/fourier_form.hpp"
#include "hpl/types.hpp"

namespace hpl::torus {

// A T^{1,0}-valued (0,k)-form Σ_k Σ_{i,K} c_{k,i,K} e^{2πi⟨k,x⟩} dz̄_K ⊗ ∂_i.
// Components are ordered vector index major: i·C(d,k) + position of K.
class VectorForm {
 public:
  VectorForm(GeometryPtr geometry, int degree, int band);
  // Constant Beltrami differential with phi(i, j) the coefficient of
  // dz̄_j ⊗ ∂_i.
  static VectorForm constant(GeometryPtr geometry, Matrix const& phi,
                             int band = 0);

  GeometryPtr const& geometry_ptr() const { return geometry_; }
  TorusGeometry const& geometry() const { return *geometry_; }
  int degree() const { return degree_; }
  int band() const { return lattice_->band(); }
  ModeLattice const& lattice() const { return *lattice_; }
  int mode_count() const { return lattice_->size(); }
  int component_count() const {
    return geometry_->dimension() * static_cast<int>(anti_.size());
  }
  int component(int vector_index, Mask anti) const;
  int vector_index_of(int component) const {
    return component / static_cast<int>(anti_.size());
  }
  Mask anti_of(int component) const {
    return anti_[component % anti_.size()];
  }
  std::vector<Mask> const& anti_indices() const { return anti_; }

  Complex& at(int mode, int component) {
    return data_[static_cast<std::size_t>(mode) * component_count() +
                 component];
  }
  Complex at(int mode, int component) const {
    return data_[static_cast<std::size_t>(mode) * component_count() +
                 component];
  }
  std::span<Complex const> mode_coefficients(int mode) const {
    return {data_.data() + static_cast<std::size_t>(mode) * component_count(),
            static_cast<std::size_t>(component_count())};
  }
  std::vector<Complex>& data() { return data_; }
  std::vector<Complex> const& data() const { return data_; }

  Complex coefficient(std::span<int const> mode, int vector_index,
                      Mask anti) const;
  void set_coefficient(std::span<int const> mode, int vector_index, Mask anti,
                       Complex value);

  VectorForm with_band(int band) const;
  int effective_band() const;
  bool is_constant() const { return effective_band() == 0; }
  // The coefficient matrix of the mode-0 part (degree 1 only).
  Matrix constant_matrix() const;

  VectorForm& operator+=(VectorForm const& other);
  VectorForm& operator-=(VectorForm const& other);
  VectorForm& operator*=(Complex s);

 private:
  GeometryPtr geometry_;
  int degree_;
  ModeLattice const* lattice_;
  std::vector<Mask> anti_;
  std::vector<int> anti_position_;
  std::vector<Complex> data_;
};

using BeltramiDifferential = VectorForm;

VectorForm operator+(VectorForm const& a, VectorForm const& b);
VectorForm operator-(VectorForm const& a, VectorForm const& b);
VectorForm operator*(Complex s, VectorForm a);

// L² product with ⟨∂_i, ∂_j⟩ = g_ij on the vector part.
Complex inner(VectorForm const& a, VectorForm const& b);
double norm(VectorForm const& a);

// ∂̄ applied to the coefficient forms.
VectorForm dbar(VectorForm const& phi);

// [φ, ψ] = Σ_{i,j} (φ^i ∧ ∂_i ψ^j − (−1)^{kl} ψ^i ∧ ∂_i φ^j) ⊗ ∂_j for φ of
// degree k and ψ of degree l; exact, on the sum of the bands.
VectorForm lie_bracket(VectorForm const& phi, VectorForm const& psi);

// ‖∂̄φ − ½[φ, φ]‖.
double maurer_cartan_residual(VectorForm const& phi);

}  // namespace hpl::torus
