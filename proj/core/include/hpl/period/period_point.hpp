#pragma once

#include <vector>

#include "hpl/hodge/bilinear_relations.hpp"
#include "hpl/extension/solver.hpp"
#include "hpl/hodge/block_matrix.hpp"
#include "hpl/period/family.hpp"
#include "hpl/torus/harmonic_basis.hpp"

namespace hpl::period {

// The polarized Hodge structure on primitive degree-n cohomology of the base
// torus, expressed in the primitive basis η.
class TorusHodgeStructure {
 public:
  TorusHodgeStructure(torus::GeometryPtr geometry, int degree);

  torus::PrimitiveBasis const& basis() const { return basis_; }
  hodge::HodgeType const& hodge_type() const { return type_; }
  int degree() const { return basis_.degree(); }
  int dimension() const { return basis_.dimension(); }

  // Q(a, b) = (−1)^{n(n−1)/2} ∫ a ∧ b ∧ ω^{d−n}.
  Complex pairing(torus::ExteriorElement const& a,
                  torus::ExteriorElement const& b) const;
  // Q(η_i, η_j).
  hodge::Polarization const& polarization() const { return q_eta_; }

  // Rows are the η-coordinates of a real basis of the primitive space, built
  // from the real and imaginary parts of the η_i.
  Matrix const& real_basis() const { return real_; }
  // Q in the real basis.
  hodge::Polarization const& real_polarization() const { return q_real_; }
  // The frame with rows in η-coordinates rewritten in the real basis.
  hodge::HodgeFrame real_frame(Matrix const& eta_rows) const;
  // The base point frame (identity in η-coordinates).
  hodge::HodgeFrame base_frame() const;

 private:
  torus::PrimitiveBasis basis_;
  hodge::HodgeType type_;
  hodge::Polarization q_eta_;
  Matrix real_;
  hodge::Polarization q_real_;
};

struct PeriodPoint {
  Parameter parameter;
  // Φ(t): block upper unipotent.
  hodge::BlockMatrix matrix;
  // Deformed classes in η-coordinates, one row per basis element.
  hodge::BlockMatrix frame;
  // Largest |Q(F^i, F^{n−i+1})| of the deformed filtration.
  double first_relation_residual = 0.0;

  Matrix block(int p, int q) const { return matrix.block(p, q); }
};

// η-coordinates of the deformed classes, one row per basis element.
// Throws unsupported_oracle for non-constant families.
hodge::BlockMatrix deformed_frame(BeltramiFamily const& family,
                                  Parameter const& t,
                                  TorusHodgeStructure const& structure);

// Expands Π(dz_i + Σ_j φ_ij(t) dz̄_j) and conjugates for every basis element,
// reads off η-coordinates and keeps the unipotent factor of block_lu.
// Throws unsupported_oracle for non-constant families and not_in_orbit
// when block_lu fails.
PeriodPoint oracle_period(BeltramiFamily const& family, Parameter const& t,
                          TorusHodgeStructure const& structure);
PeriodPoint oracle_period(BeltramiFamily const& family, Parameter const& t);

enum class SectionSource { lie, deformation };

struct SectionTable {
  Parameter parameter;
  SectionSource source = SectionSource::lie;
  // rows[p]: h_p × m rows of Ω_(p)(t) in η-coordinates.
  std::vector<Matrix> rows;

  Matrix stacked(int through) const;
};

SectionTable lie_sections(PeriodPoint const& point);
SectionTable deformation_sections(BeltramiFamily const& family,
                                  Parameter const& t,
                                  TorusHodgeStructure const& structure,
                                  int band,
                                  extension::SolverOptions const& options = {});

}  // namespace hpl::period
