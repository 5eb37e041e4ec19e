#pragma once

#include <span>

#include "hpl/torus/beltrami.hpp"
#include "hpl/torus/fourier_form.hpp"

namespace hpl::torus {

// φ(x) as the d x d matrix of dz̄_j ⊗ ∂_i coefficients at real coordinates
// x ∈ [0,1)^{2d}.
Matrix evaluate(VectorForm const& phi, std::span<double const> x);
// Component values of f at x.
Vector evaluate(FourierForm const& f, std::span<double const> x);

struct SupNormOptions {
  // Points per real dimension are at least oversampling·(2K+1), where K is
  // the largest mode present in φ.
  int oversampling = 4;
  // Local refinement around the best grid points.
  int refined_candidates = 4;
  // The search step halves until it drops below this, in torus coordinates.
  double step_tolerance = 1e-9;
};

// sup_x ‖φ(x)‖ with φ(x): T^{0,1} → T^{1,0} measured in the metric g.
double sup_operator_norm(VectorForm const& phi,
                         SupNormOptions const& options = {});

// No eigenvalue of φ(x)·conj(φ(x)) within tol of 1 at any grid sample.
bool finite_distance_check(VectorForm const& phi, double tol = 1e-8,
                           SupNormOptions const& options = {});

}  // namespace hpl::torus
