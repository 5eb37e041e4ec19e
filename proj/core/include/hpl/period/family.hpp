#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hpl/torus/beltrami.hpp"
#include "hpl/torus/geometry.hpp"

namespace hpl::period {

using Parameter = std::vector<Complex>;

// φ(t) = Σ t_μ χ_μ on a fixed torus, studied on primitive cohomology of the
// given degree.
class BeltramiFamily {
 public:
  // A non-positive radius is certified with certify_admissible_radius.
  BeltramiFamily(std::string name, torus::GeometryPtr geometry,
                 std::vector<torus::VectorForm> fields, int degree,
                 double admissible_radius = 0.0);

  std::string const& name() const { return name_; }
  torus::GeometryPtr const& geometry_ptr() const { return geometry_; }
  torus::TorusGeometry const& geometry() const { return *geometry_; }
  std::vector<torus::VectorForm> const& fields() const { return fields_; }
  int parameter_count() const { return static_cast<int>(fields_.size()); }
  int degree() const { return degree_; }
  double admissible_radius() const { return radius_; }
  bool is_constant() const;
  int band() const;

  torus::VectorForm at(std::span<Complex const> t) const;
  // Euclidean |t| < admissible radius.
  bool admits(std::span<Complex const> t) const;

 private:
  std::string name_;
  torus::GeometryPtr geometry_;
  std::vector<torus::VectorForm> fields_;
  int degree_;
  double radius_;
};

// 0.9 / max_{|u|=1} ‖φ(u)‖_sup over a fixed set of directions u ∈ ℂ^N
// (coordinate axes, their pairwise combinations and seeded random
// directions). Throws invalid_problem if a sampled φ fails the
// Maurer–Cartan equation.
double certify_admissible_radius(std::vector<torus::VectorForm> const& fields);

// elliptic: d=1, τ=i, φ = t dz̄⊗∂.
// abelian-diagonal: d=2, τ=i·Id, φ = diag(t1, t2).
// abelian-full: d=2, φ = [[t1, t3], [t3, t2]] (symmetric, polarized).
// abelian-upper: d=2, φ = [[t1, t3], [0, t2]].
// abelian-degenerate: d=2, χ1 = χ2 = dz̄1⊗∂1.
BeltramiFamily preset(std::string_view name);
std::vector<std::string> preset_names();

}  // namespace hpl::period
