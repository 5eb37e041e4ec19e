#pragma once

#include "hpl/torus/beltrami.hpp"
#include "hpl/torus/fourier_form.hpp"
#include "hpl/torus/operators.hpp"

namespace hpl::torus {

// i_φ σ = Σ dz̄_K ∧ (ι_{∂_i} σ) for φ = Σ φ^i_K dz̄_K ⊗ ∂_i, with
// ι_{∂_i}(dz_{i_1} ∧ .. ∧ dz_{i_p}) = Σ_a (−1)^{a-1} δ_{i,i_a} (omit i_a).
// Maps (p,q) to (p-1,q+k). Products are exact, on the sum of the bands.
// When p = 0 or q+k > d the result is the zero form at the input bidegree.
FourierForm contract_full(VectorForm const& phi, FourierForm const& f);

struct BandLimitedForm {
  FourierForm form;
  // L² norm of the part discarded by truncating back to the input band.
  double truncation_residual = 0.0;
};

// contract_full truncated back to the band of f.
BandLimitedForm contract(VectorForm const& phi, FourierForm const& f);

GradedForm contract_full(VectorForm const& phi, GradedForm const& f);

// Σ_k i_φ^k / k!, exact.
GradedForm exp_contraction(VectorForm const& phi, FourierForm const& f);
GradedForm exp_contraction(VectorForm const& phi, GradedForm const& f);

// 𝓛_φ = (−1)^k d∘i_φ + i_φ∘d for φ of degree k.
GradedForm lie_derivative(VectorForm const& phi, GradedForm const& f);

// ‖e^{−i_φ} d e^{i_φ} f − (d − 𝓛_φ − i_{½[φ,φ]}) f‖, exact products.
double conjugation_residual(VectorForm const& phi, FourierForm const& f);

// ‖[φ,φ]⌟σ − 2φ⌟∂(φ⌟σ) + ∂(φ⌟φ⌟σ) + φ⌟φ⌟∂σ‖, exact products.
double generalized_cartan_residual(VectorForm const& phi,
                                   FourierForm const& sigma);

}  // namespace hpl::torus
