#pragma once

#include <vector>

#include "hpl/period/period_point.hpp"

namespace hpl::period {

// Largest entry difference between the Lie and deformation section tables.
double compare_sections(BeltramiFamily const& family, Parameter const& t,
                        TorusHodgeStructure const& structure, int band = 1,
                        extension::SolverOptions const& options = {});

// max over (p, i ≥ 2) of ‖D Φ^{(p,p+i)} − D Φ^{(p,p+1)} Φ^{(p+1,p+i)}(t)‖_max
// with D the central difference of step h along t_μ. Throws step if
// t ± h e_μ leaves the admissible radius.
double derivative_relation_residual(BeltramiFamily const& family,
                                    Parameter const& t, int mu, double h,
                                    TorusHodgeStructure const& structure);

struct DifferentialBlocks {
  // Per μ: the blocks (p, p+1) of ∂Φ/∂t_μ, all other blocks zero.
  std::vector<hodge::BlockMatrix> tangents;
  // Per μ: Φ(t)⁻¹ ∂Φ/∂t_μ from the same differences; horizontal up to the
  // difference error.
  std::vector<hodge::BlockMatrix> logarithmic;
};

DifferentialBlocks differential_blocks(BeltramiFamily const& family,
                                       Parameter const& t, double h,
                                       TorusHodgeStructure const& structure);

// Ψ(t): the flattened Φ^{(0,1)}(t).
Vector affine_map(BeltramiFamily const& family, Parameter const& t,
                  TorusHodgeStructure const& structure);

struct JacobianRank {
  int rank = 0;
  RealVector singular_values;
};

// Numerical rank (singular values > 1e-8) of the central-difference
// Jacobian of Ψ.
JacobianRank affine_jacobian_rank(BeltramiFamily const& family,
                                  Parameter const& t, double h,
                                  TorusHodgeStructure const& structure);

struct OrbitSample {
  Parameter parameter;
  bool in_orbit = false;
  double min_leading_determinant = 0.0;
  // First failing block of block_lu, -1 if none.
  int failed_block = -1;
};

OrbitSample orbit_check(hodge::BlockMatrix const& frame);
std::vector<OrbitSample> orbit_scan(BeltramiFamily const& family,
                                    std::vector<Parameter> const& path,
                                    TorusHodgeStructure const& structure);

}  // namespace hpl::period
