#include "hpl/hodge/bilinear_relations.hpp"

#include <algorithm>
#include <limits>

#include "hpl/error.hpp"

namespace hpl::hodge {

namespace {

void require_same_dimension(HodgeFrame const& frame, Polarization const& q) {
  if (frame.hodge_type().dimension() != q.dimension()) {
    throw Error(ErrorKind::shape, "frame and polarization dimensions differ");
  }
}

Complex weil_factor(int const k, int const n) {
  // i^{2k-n}, exactly.
  int const e = ((2 * k - n) % 4 + 4) % 4;
  constexpr Complex powers[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return powers[e];
}

}  // namespace

double first_bilinear_residual(HodgeFrame const& frame,
                               Polarization const& q) {
  require_same_dimension(frame, q);
  int const n = frame.hodge_type().weight();
  double worst = 0.0;
  for (int i = 0; i <= n; ++i) {
    Matrix const left = frame.filtration_piece(i);
    Matrix const right = frame.filtration_piece(n - i + 1);
    if (left.rows() == 0 || right.rows() == 0) {
      continue;
    }
    worst = std::max(worst,
                     max_norm(left * q.matrix() * right.transpose()));
  }
  return worst;
}

bool check_first_bilinear_relation(HodgeFrame const& frame,
                                   Polarization const& q, double const tol) {
  return first_bilinear_residual(frame, q) <= tol;
}

double min_weil_eigenvalue(HodgeFrame const& frame, Polarization const& q,
                           double const tol) {
  require_same_dimension(frame, q);
  HodgeType const& type = frame.hodge_type();
  int const n = type.weight();
  double lowest = std::numeric_limits<double>::infinity();
  for (int alpha = 0; alpha <= n; ++alpha) {
    Matrix const rows = frame.group(alpha);
    Matrix const mirror = frame.group(n - alpha);
    if (rows.rows() != mirror.rows()) {
      throw Error(ErrorKind::invalid_frame,
                  "Hodge numbers are not conjugation symmetric");
    }
    if (rows.rows() == 0) {
      continue;
    }
    Matrix const conjugate = rows.conjugate();
    Eigen::CompleteOrthogonalDecomposition<Matrix> span(mirror.transpose());
    Matrix const coefficients = span.solve(conjugate.transpose());
    double const mismatch =
        max_norm(mirror.transpose() * coefficients - conjugate.transpose());
    if (mismatch > tol * std::max(1.0, max_norm(rows))) {
      throw Error(ErrorKind::invalid_frame,
                  "frame is not adapted to the Hodge decomposition");
    }
    int const k = n - alpha;
    Matrix hermitian = weil_factor(k, n) * rows * q.matrix() *
                       conjugate.transpose();
    hermitian = (0.5 * (hermitian + hermitian.adjoint())).eval();
    Eigen::SelfAdjointEigenSolver<Matrix> eigen(hermitian,
                                                Eigen::EigenvaluesOnly);
    lowest = std::min(lowest, eigen.eigenvalues().minCoeff());
  }
  return lowest;
}

bool check_second_bilinear_relation(HodgeFrame const& frame,
                                    Polarization const& q, double const tol) {
  return min_weil_eigenvalue(frame, q, tol) > tol;
}

bool group_membership(Matrix const& g, Polarization const& q,
                      double const tol) {
  if (g.rows() != g.cols() || g.rows() != q.dimension()) {
    throw Error(ErrorKind::shape, "group element does not match polarization");
  }
  return max_norm(g.transpose() * q.matrix() * g - q.matrix()) <= tol;
}

bool is_horizontal(BlockMatrix const& v, double const tol) {
  for (int a = 0; a < v.block_count(); ++a) {
    for (int b = 0; b < v.block_count(); ++b) {
      if (b != a + 1 && max_norm(v.block(a, b)) > tol) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace hpl::hodge
