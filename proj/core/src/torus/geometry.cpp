#include "hpl/torus/geometry.hpp"

#include <cmath>
#include <numbers>

#include "hpl/error.hpp"
#include "hpl/torus/exterior.hpp"

namespace hpl::torus {

namespace {

constexpr int max_dimension = 4;

Matrix wedge_matrix(FormSpace const& from, FormSpace const& to,
                    std::vector<WedgeImage> const& images) {
  Matrix result = Matrix::Zero(to.size(), from.size());
  for (int c = 0; c < from.size(); ++c) {
    if (images[c].sign != 0) {
      result(images[c].target, c) = static_cast<double>(images[c].sign);
    }
  }
  return result;
}

}  // namespace

int FormSpace::index(Mask const holo, Mask const anti) const {
  int const h = holo_position_[holo];
  int const a = anti_position_[anti];
  if (h < 0 || a < 0) {
    return -1;
  }
  return h * static_cast<int>(antiholomorphic.size()) + a;
}

std::shared_ptr<TorusGeometry const> TorusGeometry::create(Matrix modulus,
                                                           Matrix kahler) {
  return std::shared_ptr<TorusGeometry const>(
      new TorusGeometry(std::move(modulus), std::move(kahler)));
}

std::shared_ptr<TorusGeometry const> TorusGeometry::square(int const d) {
  return create(I * Matrix::Identity(d, d), Matrix::Identity(d, d));
}

TorusGeometry::TorusGeometry(Matrix modulus, Matrix kahler)
    : d_(static_cast<int>(modulus.rows())),
      tau_(std::move(modulus)),
      g_(std::move(kahler)) {
  if (d_ < 1 || d_ > max_dimension) {
    throw Error(ErrorKind::invalid_geometry, "dimension must be 1..4");
  }
  if (tau_.cols() != d_ || g_.rows() != d_ || g_.cols() != d_) {
    throw Error(ErrorKind::shape, "modulus and metric must be d x d");
  }
  RealMatrix const y = tau_.imag();
  RealMatrix const x = tau_.real();
  RealMatrix const y_sym = 0.5 * (y + y.transpose());
  Eigen::SelfAdjointEigenSolver<RealMatrix> y_eigen(y_sym);
  if (y_eigen.eigenvalues().minCoeff() <= 0.0) {
    throw Error(ErrorKind::invalid_geometry, "Im τ is not positive definite");
  }
  double const g_scale = std::max(1.0, max_norm(g_));
  if (max_norm(g_ - g_.adjoint()) > 1e-12 * g_scale) {
    throw Error(ErrorKind::invalid_geometry, "metric is not Hermitian");
  }
  g_ = (0.5 * (g_ + g_.adjoint())).eval();
  Eigen::SelfAdjointEigenSolver<Matrix> g_eigen(g_);
  if (g_eigen.eigenvalues().minCoeff() <= 0.0) {
    throw Error(ErrorKind::invalid_geometry, "metric is not positive definite");
  }
  Matrix const g_inverse = g_.inverse();
  cometric_ = (0.5 * (g_inverse + g_inverse.adjoint())).eval();
  RealMatrix const y_inverse_t = y.inverse().transpose();
  frequency_b_ = y_inverse_t;
  frequency_a_ = -y_inverse_t * x.transpose();
  build_spaces();
}

FormSpace const& TorusGeometry::space(Bidegree const b) const {
  if (!has_space(b)) {
    throw Error(ErrorKind::degree, "bidegree out of range");
  }
  return spaces_[b.p * (d_ + 1) + b.q];
}

void TorusGeometry::build_spaces() {
  int const d = d_;
  spaces_.resize((d + 1) * (d + 1));
  for (int p = 0; p <= d; ++p) {
    for (int q = 0; q <= d; ++q) {
      FormSpace& s = spaces_[p * (d + 1) + q];
      s.bidegree = {p, q};
      s.dimension = d;
      s.holomorphic = subsets(d, p);
      s.antiholomorphic = subsets(d, q);
      s.holo_position_.assign(std::size_t{1} << d, -1);
      s.anti_position_.assign(std::size_t{1} << d, -1);
      for (std::size_t i = 0; i < s.holomorphic.size(); ++i) {
        s.holo_position_[s.holomorphic[i]] = static_cast<int>(i);
      }
      for (std::size_t i = 0; i < s.antiholomorphic.size(); ++i) {
        s.anti_position_[s.antiholomorphic[i]] = static_cast<int>(i);
      }
      int const n = s.size();
      s.gram.resize(n, n);
      for (int a = 0; a < n; ++a) {
        auto const ia = indices(s.holo_of(a));
        auto const ja = indices(s.anti_of(a));
        for (int b = 0; b < n; ++b) {
          auto const ib = indices(s.holo_of(b));
          auto const jb = indices(s.anti_of(b));
          Matrix holo(p, p);
          Matrix anti(q, q);
          for (int u = 0; u < p; ++u) {
            for (int v = 0; v < p; ++v) {
              holo(u, v) = cometric_(ib[v], ia[u]);
            }
          }
          for (int u = 0; u < q; ++u) {
            for (int v = 0; v < q; ++v) {
              anti(u, v) = cometric_(ja[u], jb[v]);
            }
          }
          Complex const pairing = (p == 0 ? Complex(1.0) : holo.determinant()) *
                                  (q == 0 ? Complex(1.0) : anti.determinant());
          // ⟨e_a, e_b⟩ sits at (b, a) so that ⟨u, v⟩ = vᴴ·gram·u.
          s.gram(b, a) = pairing;
        }
      }
      s.gram = (0.5 * (s.gram + s.gram.adjoint())).eval();
      s.gram_inverse = s.gram.inverse();
    }
  }
  for (int p = 0; p <= d; ++p) {
    for (int q = 0; q <= d; ++q) {
      FormSpace& s = spaces_[p * (d + 1) + q];
      s.dz_wedge.assign(d, std::vector<WedgeImage>(s.size()));
      s.dzbar_wedge.assign(d, std::vector<WedgeImage>(s.size()));
      for (int i = 0; i < d; ++i) {
        Mask const e = Mask{1} << i;
        for (int c = 0; c < s.size(); ++c) {
          Mask const holo = s.holo_of(c);
          Mask const anti = s.anti_of(c);
          if (p < d) {
            int const sign = merge_sign(e, holo);
            if (sign != 0) {
              s.dz_wedge[i][c] = {space({p + 1, q}).index(holo | e, anti),
                                  sign};
            }
          }
          if (q < d) {
            int const sign = merge_sign(e, anti) * (p % 2 == 0 ? 1 : -1);
            if (merge_sign(e, anti) != 0) {
              s.dzbar_wedge[i][c] = {space({p, q + 1}).index(holo, anti | e),
                                     sign};
            }
          }
        }
      }
    }
  }
  for (int p = 0; p <= d; ++p) {
    for (int q = 0; q <= d; ++q) {
      FormSpace& s = spaces_[p * (d + 1) + q];
      s.dz_interior.clear();
      s.dzbar_interior.clear();
      for (int i = 0; i < d; ++i) {
        if (p > 0) {
          FormSpace const& lower = space({p - 1, q});
          Matrix const e = wedge_matrix(lower, s, lower.dz_wedge[i]);
          s.dz_interior.push_back(lower.gram_inverse * e.adjoint() * s.gram);
        }
        if (q > 0) {
          FormSpace const& lower = space({p, q - 1});
          Matrix const e = wedge_matrix(lower, s, lower.dzbar_wedge[i]);
          s.dzbar_interior.push_back(lower.gram_inverse * e.adjoint() *
                                     s.gram);
        }
      }
      int const n = s.size();
      int const shift = d - (p + q) + 1;
      s.primitive_projector = Matrix::Identity(n, n);
      if (p + q > d || p + shift > d || q + shift > d) {
        continue;
      }
      ExteriorElement const lefschetz =
          power(ExteriorElement::kahler_form(g_), shift);
      FormSpace const& target = space({p + shift, q + shift});
      Matrix w(target.size(), n);
      for (int c = 0; c < n; ++c) {
        ExteriorElement const image = wedge(
            lefschetz, ExteriorElement::monomial(d, s.holo_of(c), s.anti_of(c)));
        w.col(c) = image.components(target);
      }
      Eigen::JacobiSVD<Matrix> svd(w, Eigen::ComputeFullV);
      auto const& sigma = svd.singularValues();
      double const cutoff = 1e-12 * std::max(1.0, sigma.size() ? sigma(0) : 0.0);
      int rank = 0;
      for (int k = 0; k < sigma.size(); ++k) {
        rank += sigma(k) > cutoff ? 1 : 0;
      }
      Matrix const kernel = svd.matrixV().rightCols(n - rank);
      if (kernel.cols() == 0) {
        s.primitive_projector.setZero();
        continue;
      }
      Matrix const normal = kernel.adjoint() * s.gram * kernel;
      s.primitive_projector =
          kernel * normal.inverse() * kernel.adjoint() * s.gram;
    }
  }
}

void TorusGeometry::holomorphic_frequency(std::span<int const> const mode,
                                          std::span<Complex> const alpha) const {
  for (int i = 0; i < d_; ++i) {
    double w = 0.0;
    for (int j = 0; j < d_; ++j) {
      w += frequency_a_(i, j) * mode[j] + frequency_b_(i, j) * mode[d_ + j];
    }
    alpha[i] = Complex(0.5 * mode[i], -0.5 * w);
  }
}

double TorusGeometry::laplacian_eigenvalue(std::span<int const> const mode)
    const {
  std::vector<Complex> alpha(d_);
  holomorphic_frequency(mode, alpha);
  Complex sum = 0.0;
  for (int i = 0; i < d_; ++i) {
    for (int j = 0; j < d_; ++j) {
      // β = conj(α); ⟨dz̄_i, dz̄_j⟩ = (g⁻¹)_ij.
      sum += std::conj(alpha[i]) * alpha[j] * cometric_(i, j);
    }
  }
  double const two_pi = 2.0 * std::numbers::pi;
  return two_pi * two_pi * sum.real();
}

}  // namespace hpl::torus
