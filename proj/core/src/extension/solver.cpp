#include "hpl/extension/solver.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hpl/error.hpp"
#include "hpl/torus/contraction.hpp"
#include "hpl/torus/pointwise.hpp"

namespace hpl::extension {

using torus::Bidegree;

ExtensionProblem::ExtensionProblem(FourierForm const& sigma0, VectorForm phi,
                                   int const band, SolverOptions options)
    : sigma0_(sigma0.with_band(std::max(band, 0))),
      phi_(std::move(phi)),
      band_(band),
      options_(options),
      phi_sup_norm_(0.0) {
  if (band < 0) {
    throw Error(ErrorKind::invalid_problem, "band must be non-negative");
  }
  if (sigma0.geometry_ptr() != phi_.geometry_ptr()) {
    throw Error(ErrorKind::invalid_problem, "σ₀ and φ live on different tori");
  }
  if (phi_.degree() != 1) {
    throw Error(ErrorKind::invalid_problem, "φ must be a (0,1) vector form");
  }
  int const d = sigma0.geometry().dimension();
  if (sigma0.bidegree().total() > d) {
    throw Error(ErrorKind::invalid_problem, "σ₀ must have degree ≤ d");
  }
  if (sigma0.mass_outside(band) > 0.0) {
    throw Error(ErrorKind::invalid_problem, "σ₀ exceeds the band");
  }
  double const scale = std::max(1.0, norm(sigma0_));
  if (norm(torus::primitive_projection(sigma0_) - sigma0_) > 1e-12 * scale) {
    throw Error(ErrorKind::invalid_problem,
                "σ₀ is not harmonic and primitive");
  }
  double const mc = torus::maurer_cartan_residual(phi_);
  if (mc > 1e-10) {
    std::ostringstream message;
    message << "φ is not integrable (Maurer–Cartan residual " << mc << ")";
    throw Error(ErrorKind::invalid_problem, message.str());
  }
  phi_sup_norm_ = torus::sup_operator_norm(phi_);
  if (phi_sup_norm_ >= 1.0) {
    std::ostringstream message;
    message << "‖φ‖_sup = " << phi_sup_norm_ << " ≥ 1";
    throw Error(ErrorKind::contraction_violation, message.str());
  }
}

FourierForm t_contraction(VectorForm const& phi, FourierForm const& sigma) {
  torus::BandLimitedForm const contracted = torus::contract(phi, sigma);
  if (contracted.form.bidegree() == sigma.bidegree()) {
    // Nothing to contract: σ has no holomorphic degree.
    return FourierForm(sigma.geometry_ptr(), sigma.bidegree(), sigma.band());
  }
  return torus::t_operator(contracted.form);
}

namespace {

double truncation_bound(VectorForm const& phi, FourierForm const& sigma) {
  FourierForm const full = torus::contract_full(phi, sigma);
  if (full.bidegree() == sigma.bidegree()) {
    return 0.0;
  }
  FourierForm outside = full;
  FourierForm const inside = full.with_band(sigma.band()).with_band(full.band());
  outside -= inside;
  double const mass = norm(outside);
  double derivative = 0.0;
  if (outside.bidegree().p < outside.geometry().dimension()) {
    derivative = norm(torus::partial(outside));
  }
  return mass + derivative;
}

}  // namespace

ExtensionSolution solve_extension(ExtensionProblem const& problem) {
  FourierForm const& sigma0 = problem.sigma0();
  VectorForm const& phi = problem.phi();
  SolverOptions const& options = problem.options();
  FourierForm sigma = sigma0;
  double difference = 0.0;
  int iterations = 0;
  bool converged = false;
  while (iterations < options.max_iterations) {
    ++iterations;
    FourierForm next = sigma0 - t_contraction(phi, sigma);
    difference = norm(next - sigma);
    sigma = std::move(next);
    if (!std::isfinite(difference)) {
      break;
    }
    if (difference <= options.tolerance) {
      converged = true;
      break;
    }
  }
  if (!converged) {
    std::ostringstream message;
    message << "no convergence after " << iterations
            << " iterations; last difference " << difference;
    throw Error(ErrorKind::non_convergence, message.str());
  }
  ExtensionSolution solution{sigma, iterations};
  solution.fixed_point_residual =
      norm(sigma - sigma0 + t_contraction(phi, sigma));
  auto const [partial_residual, dbar_residual] =
      obstruction_residuals(sigma, phi, problem.band());
  solution.obstruction_residual_partial = partial_residual;
  solution.obstruction_residual_dbar = dbar_residual;
  solution.d_closed_residual = norm(torus::exterior_derivative(
      torus::exp_contraction(phi, sigma)));
  solution.truncation_residual = truncation_bound(phi, sigma);
  return solution;
}

FourierForm neumann_partial_sum(ExtensionProblem const& problem,
                                int const order) {
  FourierForm term = problem.sigma0();
  FourierForm sum = term;
  for (int k = 1; k <= order; ++k) {
    term = Complex(-1.0) * t_contraction(problem.phi(), term);
    sum += term;
  }
  return sum;
}

FourierForm dense_extension_solve(ExtensionProblem const& problem) {
  FourierForm const& sigma0 = problem.sigma0();
  int const modes = sigma0.mode_count();
  int const components = sigma0.component_count();
  int const n = modes * components;
  if (n > kDenseLimit) {
    throw Error(ErrorKind::invalid_problem,
                "band too large for the dense solve: " + std::to_string(n) +
                    " unknowns");
  }
  Matrix system = Matrix::Identity(n, n);
  FourierForm unit(sigma0.geometry_ptr(), sigma0.bidegree(), sigma0.band());
  for (int column = 0; column < n; ++column) {
    unit.data()[column] = 1.0;
    FourierForm const image = t_contraction(problem.phi(), unit);
    for (int row = 0; row < n; ++row) {
      system(row, column) += image.data()[row];
    }
    unit.data()[column] = 0.0;
  }
  Eigen::Map<Vector const> rhs(sigma0.data().data(), n);
  Vector const x = system.partialPivLu().solve(rhs);
  FourierForm result(sigma0.geometry_ptr(), sigma0.bidegree(), sigma0.band());
  std::copy(x.data(), x.data() + n, result.data().begin());
  return result;
}

std::pair<double, double> obstruction_residuals(FourierForm const& sigma,
                                                VectorForm const& phi,
                                                std::optional<int> band) {
  GradedForm const s(sigma);
  double const partial_residual = norm(torus::partial(s));
  GradedForm contracted = torus::contract_full(phi, s);
  if (band) {
    GradedForm truncated;
    for (auto const& [b, piece] : contracted.pieces()) {
      truncated += piece.with_band(*band);
    }
    contracted = std::move(truncated);
  }
  GradedForm const combined = torus::dbar(s) + torus::partial(contracted);
  return {partial_residual, norm(combined)};
}

GradedForm extended_form(ExtensionProblem const& problem,
                         ExtensionSolution const& solution) {
  return torus::exp_contraction(problem.phi(), solution.sigma);
}

GradedForm extended_form(ExtensionProblem const& problem) {
  return extended_form(problem, solve_extension(problem));
}

}  // namespace hpl::extension
