#pragma once

#include "hpl/cli/config.hpp"
#include "hpl/cli/report.hpp"

namespace hpl::cli {

// Hodge–Riemann relations and orbit membership, either for the explicit
// frame/polarization pair of the config or for the family's deformed frames
// at the grid points (the base point when the grid is empty).
CommandOutput cmd_check(RunConfig const& config);
// solve_extension for every basis element at every grid point.
CommandOutput cmd_extend(RunConfig const& config);
// Φ(t) blocks at every grid point.
CommandOutput cmd_periods(RunConfig const& config);
// Section coincidence and the derivative relation at every grid point.
CommandOutput cmd_compare(RunConfig const& config);
// Ψ(t) and the rank of its Jacobian at every grid point.
CommandOutput cmd_affine(RunConfig const& config);

}  // namespace hpl::cli
