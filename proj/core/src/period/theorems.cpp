#include "hpl/period/theorems.hpp"

#include <Eigen/LU>
#include <Eigen/SVD>
#include <algorithm>

#include "hpl/error.hpp"
#include "hpl/hodge/block_lu.hpp"

namespace hpl::period {

namespace {

Parameter shifted(BeltramiFamily const& family, Parameter t, int const mu,
                  double const step) {
  if (mu < 0 || mu >= family.parameter_count()) {
    throw Error(ErrorKind::shape, "parameter direction out of range");
  }
  t[mu] += step;
  if (!family.admits(t)) {
    throw Error(ErrorKind::step,
                "difference step leaves the admissible radius");
  }
  return t;
}

Matrix central_difference(BeltramiFamily const& family, Parameter const& t,
                          int const mu, double const h,
                          TorusHodgeStructure const& structure) {
  auto const plus = oracle_period(family, shifted(family, t, mu, h), structure);
  auto const minus =
      oracle_period(family, shifted(family, t, mu, -h), structure);
  return (plus.matrix.entries() - minus.matrix.entries()) / (2.0 * h);
}

}  // namespace

double compare_sections(BeltramiFamily const& family, Parameter const& t,
                        TorusHodgeStructure const& structure, int const band,
                        extension::SolverOptions const& options) {
  auto const lie = lie_sections(oracle_period(family, t, structure));
  auto const deformation =
      deformation_sections(family, t, structure, band, options);
  double largest = 0.0;
  for (std::size_t p = 0; p < lie.rows.size(); ++p) {
    largest = std::max(largest, max_norm(lie.rows[p] - deformation.rows[p]));
  }
  return largest;
}

double derivative_relation_residual(BeltramiFamily const& family,
                                    Parameter const& t, int const mu,
                                    double const h,
                                    TorusHodgeStructure const& structure) {
  auto const point = oracle_period(family, t, structure);
  hodge::BlockMatrix const derivative(
      central_difference(family, t, mu, h, structure),
      point.matrix.partition());
  int const blocks = derivative.block_count();
  double largest = 0.0;
  for (int p = 0; p < blocks; ++p) {
    for (int q = p + 2; q < blocks; ++q) {
      Matrix const product =
          derivative.block(p, p + 1) * point.matrix.block(p + 1, q);
      largest = std::max(largest, max_norm(derivative.block(p, q) - product));
    }
  }
  return largest;
}

DifferentialBlocks differential_blocks(BeltramiFamily const& family,
                                       Parameter const& t, double const h,
                                       TorusHodgeStructure const& structure) {
  auto const point = oracle_period(family, t, structure);
  auto const& partition = point.matrix.partition();
  Matrix const inverse = point.matrix.entries().inverse();
  DifferentialBlocks result;
  for (int mu = 0; mu < family.parameter_count(); ++mu) {
    hodge::BlockMatrix const derivative(
        central_difference(family, t, mu, h, structure), partition);
    auto tangent = hodge::BlockMatrix::zero(partition);
    for (int p = 0; p + 1 < derivative.block_count(); ++p) {
      tangent.set_block(p, p + 1, derivative.block(p, p + 1));
    }
    result.tangents.push_back(std::move(tangent));
    result.logarithmic.emplace_back(inverse * derivative.entries(), partition);
  }
  return result;
}

Vector affine_map(BeltramiFamily const& family, Parameter const& t,
                  TorusHodgeStructure const& structure) {
  auto const point = oracle_period(family, t, structure);
  if (point.matrix.block_count() < 2) {
    return Vector(0);
  }
  Matrix const block = point.matrix.block(0, 1);
  Vector flat(block.size());
  for (Eigen::Index r = 0; r < block.rows(); ++r) {
    for (Eigen::Index c = 0; c < block.cols(); ++c) {
      flat(r * block.cols() + c) = block(r, c);
    }
  }
  return flat;
}

JacobianRank affine_jacobian_rank(BeltramiFamily const& family,
                                  Parameter const& t, double const h,
                                  TorusHodgeStructure const& structure) {
  int const n = family.parameter_count();
  Matrix jacobian;
  for (int mu = 0; mu < n; ++mu) {
    Vector const column =
        (affine_map(family, shifted(family, t, mu, h), structure) -
         affine_map(family, shifted(family, t, mu, -h), structure)) /
        (2.0 * h);
    if (mu == 0) {
      jacobian.resize(column.size(), n);
    }
    jacobian.col(mu) = column;
  }
  JacobianRank result;
  result.singular_values = Eigen::JacobiSVD<Matrix>(jacobian).singularValues();
  result.rank = static_cast<int>(
      (result.singular_values.array() > 1e-8).count());
  return result;
}

OrbitSample orbit_check(hodge::BlockMatrix const& frame) {
  OrbitSample sample;
  auto const determinants = hodge::leading_block_determinants(frame);
  sample.min_leading_determinant =
      *std::ranges::min_element(determinants);
  sample.failed_block = hodge::block_lu(frame).failed_block;
  sample.in_orbit = hodge::in_unipotent_orbit(frame);
  return sample;
}

std::vector<OrbitSample> orbit_scan(BeltramiFamily const& family,
                                    std::vector<Parameter> const& path,
                                    TorusHodgeStructure const& structure) {
  std::vector<OrbitSample> samples;
  for (auto const& t : path) {
    OrbitSample sample = orbit_check(deformed_frame(family, t, structure));
    sample.parameter = t;
    samples.push_back(std::move(sample));
  }
  return samples;
}

}  // namespace hpl::period
