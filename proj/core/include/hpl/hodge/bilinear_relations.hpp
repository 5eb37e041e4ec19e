#pragma once

#include "hpl/hodge/block_matrix.hpp"
#include "hpl/hodge/hodge_type.hpp"
#include "hpl/types.hpp"

namespace hpl::hodge {

// Largest |Q(u, v)| over rows u of F^i and v of F^{n-i+1}, all i.
double first_bilinear_residual(HodgeFrame const& frame, Polarization const& q);

// Q(F^i, F^{n-i+1}) = 0 within tol.
bool check_first_bilinear_relation(HodgeFrame const& frame,
                                   Polarization const& q, double tol);

// Smallest eigenvalue of v ↦ i^{2k-n} Q(v, v̄) over all groups H^{k,n-k}.
// Throws invalid_frame if conjugation does not exchange the groups α and
// n-α within tol.
double min_weil_eigenvalue(HodgeFrame const& frame, Polarization const& q,
                           double tol);

bool check_second_bilinear_relation(HodgeFrame const& frame,
                                    Polarization const& q, double tol);

// ‖gᵀ Q g − Q‖_max ≤ tol.
bool group_membership(Matrix const& g, Polarization const& q, double tol);

// Only the first super-diagonal blocks (α, α+1) are nonzero.
bool is_horizontal(BlockMatrix const& v, double tol = 0.0);

}  // namespace hpl::hodge
