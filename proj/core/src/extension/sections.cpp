#include "hpl/extension/sections.hpp"

#include <vector>

#include "hpl/error.hpp"
#include "hpl/parallel.hpp"
#include "hpl/torus/contraction.hpp"

namespace hpl::extension {

Vector cohomology_class(ExtensionProblem const& problem,
                        ExtensionSolution const& solution,
                        torus::PrimitiveBasis const& basis) {
  torus::Bidegree const b0 = problem.sigma0().bidegree();
  int const n = basis.degree();
  if (b0.total() != n) {
    throw Error(ErrorKind::degree, "σ₀ does not match the basis degree");
  }
  Vector result = Vector::Zero(basis.dimension());
  GradedForm const extended = extended_form(problem, solution);
  for (auto const& [b, piece] : extended.pieces()) {
    int const group = n - b.p;
    int const offset = basis.group_offset(group);
    int const size = basis.group_size(group);
    FourierForm const source = b == b0 ? problem.sigma0() : piece;
    Vector const coordinates =
        basis.coordinates(torus::primitive_projection(source));
    result.segment(offset, size) = coordinates.segment(offset, size);
  }
  return result;
}

Vector cohomology_class(ExtensionProblem const& problem,
                        torus::PrimitiveBasis const& basis) {
  return cohomology_class(problem, solve_extension(problem), basis);
}

Matrix section_tilde(int const p, VectorForm const& phi,
                     torus::PrimitiveBasis const& basis, int const band,
                     SolverOptions const& options) {
  if (p < 0 || p > basis.degree()) {
    throw Error(ErrorKind::degree, "section index out of range");
  }
  int const offset = basis.group_offset(p);
  int const size = basis.group_size(p);
  Matrix rows = Matrix::Zero(size, basis.dimension());
  std::vector<Vector> results(size);
  parallel_for(static_cast<std::size_t>(size), [&](std::size_t const i) {
    ExtensionProblem const problem(basis.form(offset + static_cast<int>(i)),
                                   phi, band, options);
    results[i] = cohomology_class(problem, basis);
  });
  for (int i = 0; i < size; ++i) {
    rows.row(i) = results[i].transpose();
    // Leading-term normalization: the class starts at η_i.
    rows.block(i, offset, 1, size).setZero();
    rows(i, offset + i) = 1.0;
  }
  return rows;
}

}  // namespace hpl::extension
