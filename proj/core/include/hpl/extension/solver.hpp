#pragma once

#include <optional>

#include "hpl/torus/beltrami.hpp"
#include "hpl/torus/fourier_form.hpp"
#include "hpl/torus/operators.hpp"

namespace hpl::extension {

using torus::FourierForm;
using torus::GradedForm;
using torus::VectorForm;

struct SolverOptions {
  double tolerance = 1e-10;
  int max_iterations = 10000;
};

// σ = σ₀ − T i_φ σ on the band K, for harmonic primitive σ₀ and an
// integrable φ with sup norm below 1.
class ExtensionProblem {
 public:
  // Throws invalid_problem if σ₀ is not harmonic primitive or φ fails the
  // Maurer–Cartan equation, contraction_violation if ‖φ‖_sup ≥ 1.
  ExtensionProblem(FourierForm const& sigma0, VectorForm phi, int band,
                   SolverOptions options = {});

  FourierForm const& sigma0() const { return sigma0_; }
  VectorForm const& phi() const { return phi_; }
  int band() const { return band_; }
  SolverOptions const& options() const { return options_; }
  double phi_sup_norm() const { return phi_sup_norm_; }

 private:
  FourierForm sigma0_;
  VectorForm phi_;
  int band_;
  SolverOptions options_;
  double phi_sup_norm_;
};

struct ExtensionSolution {
  FourierForm sigma;
  int iterations = 0;
  // ‖σ − σ₀ + T P_K i_φ σ‖.
  double fixed_point_residual = 0.0;
  // Obstruction residuals of the banded equation (φ⌟σ truncated to K).
  double obstruction_residual_partial = 0.0;
  double obstruction_residual_dbar = 0.0;
  // ‖d e^{i_φ} σ‖ with exact products.
  double d_closed_residual = 0.0;
  // ‖(I − P_K) i_φ σ‖ + ‖∂ (I − P_K) i_φ σ‖: the part of i_φ σ beyond the
  // band, which the banded equation cannot see.
  double truncation_residual = 0.0;
};

// One step of the map σ ↦ T P_K i_φ σ.
FourierForm t_contraction(VectorForm const& phi, FourierForm const& sigma);

// Fixed-point iteration from σ₀ until successive iterates differ by at most
// the tolerance; throws non_convergence with the last difference otherwise.
ExtensionSolution solve_extension(ExtensionProblem const& problem);

// Σ_{k=0}^{order} (−T P_K i_φ)^k σ₀.
FourierForm neumann_partial_sum(ExtensionProblem const& problem, int order);

inline constexpr int kDenseLimit = 4096;

// Dense LU solve of (I + T P_K i_φ) σ = σ₀ on the band; throws
// invalid_problem beyond kDenseLimit unknowns.
FourierForm dense_extension_solve(ExtensionProblem const& problem);

// (‖∂σ‖, ‖∂̄σ + ∂(φ⌟σ)‖) with exact products, or with φ⌟σ truncated to
// the given band.
std::pair<double, double> obstruction_residuals(
    FourierForm const& sigma, VectorForm const& phi,
    std::optional<int> band = std::nullopt);

// e^{i_φ} σ for the solution σ.
GradedForm extended_form(ExtensionProblem const& problem);
GradedForm extended_form(ExtensionProblem const& problem,
                         ExtensionSolution const& solution);

}  // namespace hpl::extension
