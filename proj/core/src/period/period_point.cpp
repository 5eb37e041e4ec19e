#include "hpl/period/period_point.hpp"

#include <Eigen/LU>

#include "hpl/error.hpp"
#include "hpl/extension/sections.hpp"
#include "hpl/hodge/block_lu.hpp"
#include "hpl/parallel.hpp"

namespace hpl::period {

namespace {

using torus::ExteriorElement;
using torus::Mask;

Complex pairing_value(torus::PrimitiveBasis const& basis,
                      ExteriorElement const& a, ExteriorElement const& b) {
  auto const& geometry = *basis.geometry_ptr();
  int const d = geometry.dimension();
  int const n = basis.degree();
  ExteriorElement const omega = ExteriorElement::kahler_form(geometry.kahler());
  Complex const value =
      torus::integrate(wedge(wedge(a, b), power(omega, d - n)));
  return (n * (n - 1) / 2) % 2 == 0 ? value : -value;
}

Matrix pairing_matrix(torus::PrimitiveBasis const& basis) {
  int const m = basis.dimension();
  Matrix q(m, m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      q(i, j) = pairing_value(basis, basis.element(i), basis.element(j));
    }
  }
  return q;
}

// Greedy choice of m independent rows among Re η_i, Im η_i, in that order.
Matrix real_rows(torus::PrimitiveBasis const& basis) {
  int const m = basis.dimension();
  Matrix chosen(0, m);
  Matrix orthonormal(0, m);
  for (int i = 0; i < m && chosen.rows() < m; ++i) {
    Vector const self = Vector::Unit(m, i);
    Vector const mirror = basis.coordinates(basis.element(i).conjugate());
    for (Vector const& candidate :
         {Vector((self + mirror) / 2.0), Vector((self - mirror) / (2.0 * I))}) {
      Vector rest = candidate;
      for (int r = 0; r < orthonormal.rows(); ++r) {
        Vector const e = orthonormal.row(r).transpose();
        rest -= e.dot(rest) * e;
      }
      if (rest.norm() <= 1e-8 * candidate.norm() || candidate.norm() == 0.0) {
        continue;
      }
      chosen.conservativeResize(chosen.rows() + 1, m);
      chosen.row(chosen.rows() - 1) = candidate.transpose();
      orthonormal.conservativeResize(orthonormal.rows() + 1, m);
      orthonormal.row(orthonormal.rows() - 1) =
          (rest / rest.norm()).transpose();
    }
  }
  if (chosen.rows() != m) {
    throw Error(ErrorKind::invalid_frame,
                "primitive space is not closed under conjugation");
  }
  return chosen;
}

ExteriorElement deformed_wedge(std::vector<ExteriorElement> const& factors,
                               Mask const mask, int const d) {
  ExteriorElement result = ExteriorElement::monomial(d, 0, 0, 1.0);
  for (int i = 0; i < d; ++i) {
    if ((mask >> i) & 1u) {
      result = wedge(result, factors[i]);
    }
  }
  return result;
}

}  // namespace

TorusHodgeStructure::TorusHodgeStructure(torus::GeometryPtr geometry,
                                         int const degree)
    : basis_(std::move(geometry), degree),
      type_(basis_.hodge_numbers()),
      q_eta_(hodge::Polarization::for_weight(pairing_matrix(basis_), degree)),
      real_(real_rows(basis_)),
      q_real_(hodge::Polarization::for_weight(
          real_ * q_eta_.matrix() * real_.transpose(), degree)) {}

Complex TorusHodgeStructure::pairing(ExteriorElement const& a,
                                     ExteriorElement const& b) const {
  return pairing_value(basis_, a, b);
}

hodge::HodgeFrame TorusHodgeStructure::real_frame(
    Matrix const& eta_rows) const {
  return hodge::HodgeFrame(eta_rows * real_.inverse(), type_);
}

hodge::HodgeFrame TorusHodgeStructure::base_frame() const {
  return real_frame(Matrix::Identity(dimension(), dimension()));
}

hodge::BlockMatrix deformed_frame(BeltramiFamily const& family,
                                  Parameter const& t,
                                  TorusHodgeStructure const& structure) {
  if (!family.is_constant()) {
    throw Error(ErrorKind::unsupported_oracle,
                "the wedge oracle needs constant Beltrami fields");
  }
  if (structure.basis().geometry_ptr() != family.geometry_ptr() ||
      structure.degree() != family.degree()) {
    throw Error(ErrorKind::invalid_problem,
                "Hodge structure does not match the family");
  }
  int const d = family.geometry().dimension();
  Matrix const phi = family.at(t).constant_matrix();
  std::vector<ExteriorElement> theta;
  std::vector<ExteriorElement> theta_bar;
  for (int i = 0; i < d; ++i) {
    ExteriorElement form = ExteriorElement::monomial(d, Mask{1} << i, 0);
    for (int j = 0; j < d; ++j) {
      form.add(0, Mask{1} << j, phi(i, j));
    }
    theta_bar.push_back(form.conjugate());
    theta.push_back(std::move(form));
  }
  auto const& basis = structure.basis();
  int const m = basis.dimension();
  Mask const low = (Mask{1} << d) - 1;
  Matrix rows(m, m);
  for (int k = 0; k < m; ++k) {
    auto const& coefficients = basis.element(k).coefficients();
    ExteriorElement deformed(d);
    for (std::size_t index = 0; index < coefficients.size(); ++index) {
      if (coefficients[index] == Complex(0.0)) {
        continue;
      }
      Mask const holo = static_cast<Mask>(index) & low;
      Mask const anti = static_cast<Mask>(index) >> d;
      deformed += coefficients[index] *
                  wedge(deformed_wedge(theta, holo, d),
                        deformed_wedge(theta_bar, anti, d));
    }
    rows.row(k) = basis.coordinates(deformed).transpose();
  }
  return hodge::BlockMatrix(rows, structure.hodge_type().partition());
}

PeriodPoint oracle_period(BeltramiFamily const& family, Parameter const& t,
                          TorusHodgeStructure const& structure) {
  auto const frame = deformed_frame(family, t, structure);
  auto const outcome = hodge::block_lu(frame);
  if (!outcome.ok()) {
    throw Error(ErrorKind::not_in_orbit,
                "block LU fails at block " +
                    std::to_string(outcome.failed_block));
  }
  double const residual = hodge::first_bilinear_residual(
      hodge::HodgeFrame(frame.entries(), structure.hodge_type()),
      structure.polarization());
  return {t, outcome.factors->l, frame, residual};
}

PeriodPoint oracle_period(BeltramiFamily const& family, Parameter const& t) {
  return oracle_period(family, t,
                       TorusHodgeStructure(family.geometry_ptr(),
                                           family.degree()));
}

Matrix SectionTable::stacked(int const through) const {
  Eigen::Index count = 0;
  for (int p = 0; p <= through; ++p) {
    count += rows[p].rows();
  }
  Matrix result(count, rows.front().cols());
  Eigen::Index at = 0;
  for (int p = 0; p <= through; ++p) {
    result.middleRows(at, rows[p].rows()) = rows[p];
    at += rows[p].rows();
  }
  return result;
}

SectionTable lie_sections(PeriodPoint const& point) {
  SectionTable table{point.parameter, SectionSource::lie, {}};
  for (int p = 0; p < point.matrix.block_count(); ++p) {
    table.rows.push_back(point.matrix.row_block(p));
  }
  return table;
}

SectionTable deformation_sections(BeltramiFamily const& family,
                                  Parameter const& t,
                                  TorusHodgeStructure const& structure,
                                  int const band,
                                  extension::SolverOptions const& options) {
  auto const phi = family.at(t);
  SectionTable table{t, SectionSource::deformation, {}};
  for (int p = 0; p < structure.hodge_type().partition().block_count(); ++p) {
    table.rows.push_back(
        extension::section_tilde(p, phi, structure.basis(), band, options));
  }
  return table;
}

}  // namespace hpl::period
