#pragma once

#include "hpl/extension/solver.hpp"
#include "hpl/torus/harmonic_basis.hpp"

namespace hpl::extension {

// Coordinates in the primitive basis of ℍ_pr applied to each graded piece of
// e^{i_φ}σ. The piece of type (p-j, q+j) fills basis group n-p+j; the
// leading group carries the coordinates of σ₀ itself, which is exact since
// ℍσ = σ₀.
Vector cohomology_class(ExtensionProblem const& problem,
                        torus::PrimitiveBasis const& basis);
Vector cohomology_class(ExtensionProblem const& problem,
                        ExtensionSolution const& solution,
                        torus::PrimitiveBasis const& basis);

// Rows of the deformation section for basis group p (forms of type
// (n-p, p)): one row per basis element, identity on the group's own slots.
Matrix section_tilde(int p, VectorForm const& phi,
                     torus::PrimitiveBasis const& basis, int band,
                     SolverOptions const& options = {});

}  // namespace hpl::extension
