#pragma once

#include <compare>
#include <memory>
#include <span>
#include <vector>

#include "hpl/torus/multi_index.hpp"
#include "hpl/types.hpp"

namespace hpl::torus {

struct Bidegree {
  int p = 0;
  int q = 0;

  int total() const { return p + q; }
  auto operator<=>(Bidegree const&) const = default;
};

// Signed image of a basis monomial under wedging with one generator.
struct WedgeImage {
  int target = -1;
  int sign = 0;
};

// Basis data for constant (p,q)-forms: monomials dz_I ∧ dz̄_J with component
// index (position of I)·C(d,q) + (position of J).
class FormSpace {
 public:
  Bidegree bidegree;
  int dimension = 0;
  std::vector<Mask> holomorphic;
  std::vector<Mask> antiholomorphic;
  // ⟨u, v⟩ = vᴴ·gram·u on coefficient vectors.
  Matrix gram;
  Matrix gram_inverse;
  // dz_i ∧ · into (p+1,q) and dz̄_j ∧ · into (p,q+1), indexed [i][component].
  std::vector<std::vector<WedgeImage>> dz_wedge;
  std::vector<std::vector<WedgeImage>> dzbar_wedge;
  // Adjoints of dz_i ∧ · from (p-1,q) and dz̄_j ∧ · from (p,q-1): matrices
  // from (p,q) into the lower degree. The adjoint of a ∧ · with
  // a = Σ a_i dz_i is Σ conj(a_i)·dz_interior[i].
  std::vector<Matrix> dz_interior;
  std::vector<Matrix> dzbar_interior;
  // Orthogonal projector onto ker ω^{d-p-q+1} ∧ ·, when p+q ≤ d.
  Matrix primitive_projector;

  int size() const { return static_cast<int>(holomorphic.size() *
                                             antiholomorphic.size()); }
  int index(Mask holo, Mask anti) const;
  Mask holo_of(int component) const {
    return holomorphic[component / antiholomorphic.size()];
  }
  Mask anti_of(int component) const {
    return antiholomorphic[component % antiholomorphic.size()];
  }

 private:
  friend class TorusGeometry;
  std::vector<int> holo_position_;
  std::vector<int> anti_position_;
};

// The flat torus ℂ^d / (ℤ^d + τℤ^d) with constant Kähler metric g.
//
// Real coordinates x = (a, b) ∈ [0,1)^{2d} give z = a + τ b, and the mode
// k = (k_a, k_b) ∈ ℤ^{2d} is the plane wave e^{2πi(k_a·a + k_b·b)}. With
// τ = X + iY and w = Y^{-ᵀ}(k_b − Xᵀk_a), ∂/∂z_i acts on it by 2πi·α_i and
// ∂/∂z̄_i by 2πi·β_i where α = (k_a − i w)/2 and β = conj(α).
//
// The metric on T^{1,0} is ⟨∂_i, ∂_j⟩ = g_ij; covectors carry
// ⟨dz_i, dz_j⟩ = (g⁻¹)_ji and ⟨dz̄_i, dz̄_j⟩ = (g⁻¹)_ij; forms carry the
// induced determinant metric, and the volume is normalized to 1. The Kähler
// form is ω = i Σ g_ij dz_i ∧ dz̄_j.
class TorusGeometry {
 public:
  static std::shared_ptr<TorusGeometry const> create(Matrix modulus,
                                                     Matrix kahler);
  // τ = i·Id, g = Id.
  static std::shared_ptr<TorusGeometry const> square(int d);

  int dimension() const { return d_; }
  Matrix const& modulus() const { return tau_; }
  Matrix const& kahler() const { return g_; }
  Matrix const& cometric() const { return cometric_; }

  bool has_space(Bidegree b) const {
    return b.p >= 0 && b.q >= 0 && b.p <= d_ && b.q <= d_;
  }
  FormSpace const& space(Bidegree b) const;

  // Writes α for the mode (length 2d) into alpha (length d).
  void holomorphic_frequency(std::span<int const> mode,
                             std::span<Complex> alpha) const;
  // |2πi Σ β_j dz̄_j|², the Laplacian eigenvalue of the mode.
  double laplacian_eigenvalue(std::span<int const> mode) const;

 private:
  TorusGeometry(Matrix modulus, Matrix kahler);
  void build_spaces();

  int d_;
  Matrix tau_;
  Matrix g_;
  Matrix cometric_;
  RealMatrix frequency_b_;
  RealMatrix frequency_a_;
  std::vector<FormSpace> spaces_;
};

using GeometryPtr = std::shared_ptr<TorusGeometry const>;

}  // namespace hpl::torus
