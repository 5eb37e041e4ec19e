#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <random>

#include "hpl/error.hpp"
#include "hpl/extension/sections.hpp"
#include "hpl/extension/solver.hpp"
#include "hpl/torus/contraction.hpp"
#include "hpl/torus/exterior.hpp"
#include "hpl/torus/harmonic_basis.hpp"
#include "hpl/torus/pointwise.hpp"
#include "support/random_forms.hpp"

namespace hpl::extension {
namespace {

using torus::Bidegree;
using torus::GeometryPtr;
using torus::PrimitiveBasis;
using torus::TorusGeometry;

VectorForm diagonal_field(GeometryPtr const& g, Complex t1, Complex t2) {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 0) = t1;
  m(1, 1) = t2;
  return VectorForm::constant(g, m);
}

// A single non-constant term c e_k dz̄⊗∂ on the square elliptic curve;
// integrable since every (0,2) object vanishes in dimension one.
VectorForm single_mode_field(GeometryPtr const& g, Complex c) {
  VectorForm phi(g, 1, 1);
  std::array<int, 2> const k{1, 0};
  phi.set_coefficient(k, 0, 1u, c);
  return phi;
}

TEST(SolveExtension, ZeroFieldReturnsInitialForm) {
  auto const g = TorusGeometry::square(2);
  PrimitiveBasis const basis(g, 2);
  auto const sigma0 = basis.form(1, 2);
  ExtensionProblem const problem(sigma0, VectorForm(g, 1, 0), 2);
  auto const s = solve_extension(problem);
  EXPECT_EQ(s.iterations, 1);
  EXPECT_EQ(norm(s.sigma - sigma0), 0.0);
  EXPECT_EQ(s.fixed_point_residual, 0.0);
}

TEST(SolveExtension, ConstantFieldKeepsConstantForm) {
  auto const g = TorusGeometry::square(2);
  PrimitiveBasis const basis(g, 2);
  auto const phi = diagonal_field(g, 0.3, Complex(0.1, 0.2));
  for (int i = 0; i < basis.dimension(); ++i) {
    auto const sigma0 = basis.form(i, 2);
    // T i_φ σ₀ = 0 because ∂ annihilates constants.
    EXPECT_EQ(norm(t_contraction(phi, sigma0)), 0.0);
    auto const s = solve_extension(ExtensionProblem(sigma0, phi, 2));
    EXPECT_EQ(norm(s.sigma - sigma0), 0.0);
  }
}

TEST(SolveExtension, MatchesIndependentNeumannSum) {
  auto const g = TorusGeometry::square(1);
  PrimitiveBasis const basis(g, 1);
  auto const phi = single_mode_field(g, 0.1);
  auto const sigma0 = basis.form(0, 3);
  auto const s = solve_extension(ExtensionProblem(sigma0, phi, 3));
  // Σ_{k≤3} (−T P_K i_φ)^k σ₀ composed from the operator primitives.
  FourierForm term = sigma0;
  FourierForm sum = sigma0;
  for (int k = 1; k <= 3; ++k) {
    auto const contracted = torus::contract(phi, term).form;
    term = -1.0 * torus::t_operator(contracted);
    sum += term;
  }
  EXPECT_LT(norm(s.sigma - sum), 1e-6);
  EXPECT_GT(norm(s.sigma - sigma0), 1e-3);
}

TEST(SolveExtension, HarmonicPartIsPreserved) {
  std::mt19937_64 rng(41);
  auto const g = TorusGeometry::square(2);
  PrimitiveBasis const basis(g, 2);
  for (int trial = 0; trial < 4; ++trial) {
    auto const phi = testing::triangular_field(rng, g, 0.5);
    auto const sigma0 = basis.form(trial, 2);
    auto const s = solve_extension(ExtensionProblem(sigma0, phi, 2));
    EXPECT_LT(norm(torus::harmonic_projection(s.sigma) - sigma0), 1e-15);
  }
}

TEST(SolveExtension, ResidualContract) {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 6; ++trial) {
    bool const flat = trial % 2 == 0;
    GeometryPtr const g = flat ? testing::random_geometry(rng, 1)
                               : TorusGeometry::square(2);
    auto const phi = flat ? testing::scaled_vector_form(rng, g, 1, 0.5)
                          : testing::triangular_field(rng, g, 0.5);
    PrimitiveBasis const basis(g, g->dimension());
    int const band = flat ? 3 : 2;
    ExtensionProblem const problem(basis.form(trial % basis.dimension(), band),
                                   phi, band);
    auto const s = solve_extension(problem);
    EXPECT_LE(s.fixed_point_residual, 1e-10);
    EXPECT_LE(s.obstruction_residual_partial, 1e-8);
    EXPECT_LE(s.obstruction_residual_dbar, 1e-8);
    EXPECT_LE(s.d_closed_residual, 1e-8 + s.truncation_residual);
    int const order = static_cast<int>(
        std::ceil(std::log(1e-10) / std::log(problem.phi_sup_norm())));
    auto const neumann = neumann_partial_sum(problem, order);
    EXPECT_LE(norm(neumann - s.sigma), 1e-9);
    auto const dense = dense_extension_solve(problem);
    EXPECT_LE(norm(dense - s.sigma), 1e-9);
  }
}

TEST(SolveExtension, LinearInInitialForm) {
  std::mt19937_64 rng(43);
  auto const g = TorusGeometry::square(2);
  PrimitiveBasis const basis(g, 2);
  auto const phi = testing::triangular_field(rng, g, 0.4);
  Complex const a(0.6, -0.3);
  Complex const b(-1.1, 0.2);
  auto const f1 = basis.form(1, 2);
  auto const f2 = basis.form(3, 2);
  auto const s1 = solve_extension(ExtensionProblem(f1, phi, 2)).sigma;
  auto const s2 = solve_extension(ExtensionProblem(f2, phi, 2)).sigma;
  auto const s =
      solve_extension(ExtensionProblem(a * f1 + b * f2, phi, 2)).sigma;
  EXPECT_LE(norm(s - (a * s1 + b * s2)), 1e-10);
}

TEST(SolveExtension, RejectsLargeField) {
  auto const g = TorusGeometry::square(1);
  PrimitiveBasis const basis(g, 1);
  auto const phi = VectorForm::constant(g, Matrix::Constant(1, 1, 1.2));
  try {
    ExtensionProblem const problem(basis.form(0, 1), phi, 1);
    FAIL() << "accepted a field with sup norm 1.2";
  } catch (Error const& e) {
    EXPECT_EQ(e.kind(), ErrorKind::contraction_violation);
  }
}

TEST(SolveExtension, RejectsNonHarmonicOrNonPrimitiveInput) {
  auto const g = TorusGeometry::square(2);
  VectorForm const phi(g, 1, 0);
  FourierForm wave(g, {1, 1}, 1);
  std::array<int, 4> const k{1, 0, 0, 0};
  wave.set_coefficient(k, 1u, 2u, 1.0);
  EXPECT_THROW(ExtensionProblem(wave, phi, 1), Error);

  FourierForm omega(g, {1, 1}, 1);
  auto const kahler = torus::ExteriorElement::kahler_form(g->kahler());
  auto const components = kahler.components(g->space({1, 1}));
  for (int c = 0; c < omega.component_count(); ++c) {
    omega.at(omega.lattice().zero_index(), c) = components(c);
  }
  try {
    ExtensionProblem const problem(omega, phi, 1);
    FAIL() << "accepted a non-primitive form";
  } catch (Error const& e) {
    EXPECT_EQ(e.kind(), ErrorKind::invalid_problem);
  }
}

TEST(SolveExtension, RejectsNonIntegrableField) {
  std::mt19937_64 rng(44);
  auto const g = TorusGeometry::square(2);
  PrimitiveBasis const basis(g, 2);
  auto const phi = testing::scaled_vector_form(rng, g, 1, 0.3);
  try {
    ExtensionProblem const problem(basis.form(0, 1), phi, 1);
    FAIL() << "accepted a field failing Maurer-Cartan";
  } catch (Error const& e) {
    EXPECT_EQ(e.kind(), ErrorKind::invalid_problem);
  }
}

TEST(SolveExtension, ReportsNonConvergence) {
  auto const g = TorusGeometry::square(1);
  PrimitiveBasis const basis(g, 1);
  ExtensionProblem const problem(basis.form(0, 2),
                                 single_mode_field(g, 0.5), 2,
                                 {.tolerance = 1e-14, .max_iterations = 2});
  try {
    solve_extension(problem);
    FAIL() << "converged in two iterations";
  } catch (Error const& e) {
    EXPECT_EQ(e.kind(), ErrorKind::non_convergence);
  }
}

TEST(SolveExtension, DenseSolveRefusesLargeSystems) {
  auto const g = TorusGeometry::square(2);
  PrimitiveBasis const basis(g, 2);
  ExtensionProblem const problem(basis.form(0, 4), VectorForm(g, 1, 0), 4);
  EXPECT_THROW(dense_extension_solve(problem), Error);
}

TEST(Obstruction, ConstantDataIsUnobstructed) {
  auto const g = TorusGeometry::square(2);
  PrimitiveBasis const basis(g, 2);
  auto const phi = diagonal_field(g, 0.2, 0.1);
  auto const [dp, db] = obstruction_residuals(basis.form(2, 1), phi);
  EXPECT_EQ(dp, 0.0);
  EXPECT_EQ(db, 0.0);
}

TEST(Obstruction, GenericFormIsObstructed) {
  std::mt19937_64 rng(45);
  auto const g = TorusGeometry::square(2);
  auto const phi = testing::triangular_field(rng, g, 0.5);
  auto const sigma = testing::random_form(rng, g, {1, 1}, 1);
  auto const [dp, db] = obstruction_residuals(sigma, phi);
  EXPECT_GT(dp, 1e-3);
  EXPECT_GT(db, 1e-3);
}

TEST(Obstruction, SolutionIsUnobstructed) {
  auto const g = TorusGeometry::square(1);
  PrimitiveBasis const basis(g, 1);
  auto const phi = single_mode_field(g, 0.1);
  ExtensionProblem const problem(basis.form(0, 3), phi, 3);
  auto const s = solve_extension(problem);
  auto const [dp, db] = obstruction_residuals(s.sigma, phi, problem.band());
  EXPECT_LE(dp, 1e-8);
  EXPECT_LE(db, 1e-8);
}

TEST(ExtendedForm, ZeroField) {
  auto const g = TorusGeometry::square(1);
  PrimitiveBasis const basis(g, 1);
  auto const sigma0 = basis.form(0, 1);
  auto const e = extended_form(ExtensionProblem(sigma0, VectorForm(g, 1, 0), 1));
  EXPECT_EQ(norm(e - GradedForm(sigma0)), 0.0);
}

TEST(ExtendedForm, EllipticCurve) {
  auto const g = TorusGeometry::square(1);
  PrimitiveBasis const basis(g, 1);
  Complex const t(0.25, -0.1);
  auto const phi = VectorForm::constant(g, Matrix::Constant(1, 1, t));
  auto const e = extended_form(ExtensionProblem(basis.form(0, 1), phi, 1));
  std::array<int, 2> const zero{0, 0};
  EXPECT_EQ(e.piece({1, 0})->coefficient(zero, 1u, 0u), 1.0);
  EXPECT_EQ(e.piece({0, 1})->coefficient(zero, 0u, 1u), t);
}

TEST(ExtendedForm, DiagonalFamilyWedgeExpansion) {
  auto const g = TorusGeometry::square(2);
  PrimitiveBasis const basis(g, 2);
  Complex const t1(0.2, 0.05);
  Complex const t2(-0.1, 0.15);
  auto const e =
      extended_form(ExtensionProblem(basis.form(0, 1), diagonal_field(g, t1, t2), 1));
  std::array<int, 4> const zero{0, 0, 0, 0};
  EXPECT_EQ(e.piece({2, 0})->coefficient(zero, 3u, 0u), 1.0);
  EXPECT_EQ(e.piece({1, 1})->coefficient(zero, 1u, 2u), t2);
  EXPECT_EQ(e.piece({1, 1})->coefficient(zero, 2u, 1u), -t1);
  EXPECT_EQ(e.piece({0, 2})->coefficient(zero, 0u, 3u), t1 * t2);
  EXPECT_LE(norm(torus::exterior_derivative(e)), 1e-15);
}

TEST(CohomologyClass, ZeroField) {
  auto const g = TorusGeometry::square(2);
  PrimitiveBasis const basis(g, 2);
  ExtensionProblem const problem(basis.form(2, 1), VectorForm(g, 1, 0), 1);
  Vector expected = Vector::Zero(basis.dimension());
  expected(2) = 1.0;
  EXPECT_EQ(max_norm(cohomology_class(problem, basis) - expected), 0.0);
}

TEST(CohomologyClass, EllipticCurve) {
  auto const g = TorusGeometry::square(1);
  PrimitiveBasis const basis(g, 1);
  Complex const t(-0.3, 0.2);
  auto const phi = VectorForm::constant(g, Matrix::Constant(1, 1, t));
  auto const c = cohomology_class(ExtensionProblem(basis.form(0, 1), phi, 1),
                                  basis);
  ASSERT_EQ(c.size(), 2);
  EXPECT_EQ(c(0), 1.0);
  EXPECT_LT(std::abs(c(1) - t), 1e-15);
}

TEST(CohomologyClass, DiagonalFamily) {
  // Basis order: dz₁∧dz₂; dz₁∧dz̄₂, dz₂∧dz̄₁, (dz₁∧dz̄₁ − dz₂∧dz̄₂)/√2;
  // dz̄₁∧dz̄₂.
  auto const g = TorusGeometry::square(2);
  PrimitiveBasis const basis(g, 2);
  ASSERT_EQ(basis.hodge_numbers(), (std::vector<int>{1, 3, 1}));
  Complex const t1(0.2, 0.1);
  Complex const t2(0.05, -0.3);
  auto const c = cohomology_class(
      ExtensionProblem(basis.form(0, 1), diagonal_field(g, t1, t2), 1), basis);
  Vector expected(5);
  expected << 1.0, t2, -t1, 0.0, t1 * t2;
  EXPECT_LT(max_norm(c - expected), 1e-15);
}

TEST(SectionTilde, BasePointGivesIdentityRows) {
  auto const g = TorusGeometry::square(2);
  PrimitiveBasis const basis(g, 2);
  VectorForm const phi(g, 1, 0);
  for (int p = 0; p <= 2; ++p) {
    Matrix const rows = section_tilde(p, phi, basis, 1);
    ASSERT_EQ(rows.rows(), basis.group_size(p));
    Matrix expected = Matrix::Zero(rows.rows(), basis.dimension());
    expected.block(0, basis.group_offset(p), rows.rows(), rows.rows()) =
        Matrix::Identity(rows.rows(), rows.rows());
    EXPECT_EQ(max_norm(rows - expected), 0.0);
  }
}

TEST(SectionTilde, EllipticRow) {
  auto const g = TorusGeometry::square(1);
  PrimitiveBasis const basis(g, 1);
  Complex const t(0.4, 0.1);
  auto const phi = VectorForm::constant(g, Matrix::Constant(1, 1, t));
  Matrix const row = section_tilde(0, phi, basis, 1);
  ASSERT_EQ(row.rows(), 1);
  EXPECT_EQ(row(0, 0), 1.0);
  EXPECT_LT(std::abs(row(0, 1) - t), 1e-15);
}

TEST(SectionTilde, StackedRowsHaveFullRank) {
  std::mt19937_64 rng(46);
  auto const g = TorusGeometry::square(2);
  PrimitiveBasis const basis(g, 2);
  for (int trial = 0; trial < 3; ++trial) {
    auto const phi = testing::triangular_field(rng, g, 0.6);
    Matrix stacked(0, basis.dimension());
    for (int p = 0; p <= 2; ++p) {
      Matrix const rows = section_tilde(p, phi, basis, 2);
      for (int a = 0; a < rows.rows(); ++a) {
        EXPECT_EQ(rows(a, basis.group_offset(p) + a), 1.0);
      }
      Matrix next(stacked.rows() + rows.rows(), basis.dimension());
      next << stacked, rows;
      stacked = next;
      Eigen::JacobiSVD<Matrix> svd(stacked);
      EXPECT_GT(svd.singularValues().minCoeff(), 1e-8);
    }
  }
}

}  // namespace
}  // namespace hpl::extension
