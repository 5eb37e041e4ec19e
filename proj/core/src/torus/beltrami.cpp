#include "hpl/torus/beltrami.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hpl/error.hpp"

namespace hpl::torus {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

void require_compatible(VectorForm const& a, VectorForm const& b) {
  if (a.geometry_ptr() != b.geometry_ptr()) {
    throw Error(ErrorKind::shape, "vector forms live on different tori");
  }
  if (a.degree() != b.degree()) {
    throw Error(ErrorKind::degree, "vector form degrees differ");
  }
}

// Hermitian form on the components of one mode.
Matrix component_gram(VectorForm const& a) {
  TorusGeometry const& geometry = a.geometry();
  FormSpace const& space = geometry.space({0, a.degree()});
  int const n = a.component_count();
  Matrix result(n, n);
  for (int x = 0; x < n; ++x) {
    int const i = a.vector_index_of(x);
    int const kx = space.index(0, a.anti_of(x));
    for (int y = 0; y < n; ++y) {
      int const j = a.vector_index_of(y);
      int const ky = space.index(0, a.anti_of(y));
      // ⟨e_x, e_y⟩ = g_ij ⟨dz̄_Kx, dz̄_Ky⟩, stored at (y, x).
      result(y, x) = geometry.kahler()(i, j) * space.gram(ky, kx);
    }
  }
  return result;
}

}  // namespace

VectorForm::VectorForm(GeometryPtr geometry, int const degree, int const band)
    : geometry_(std::move(geometry)),
      degree_(degree),
      lattice_(&ModeLattice::get(2 * geometry_->dimension(), band)),
      anti_(subsets(geometry_->dimension(), degree)),
      anti_position_(std::size_t{1} << geometry_->dimension(), -1) {
  if (degree < 0 || degree > geometry_->dimension()) {
    throw Error(ErrorKind::degree, "vector form degree out of range");
  }
  for (std::size_t k = 0; k < anti_.size(); ++k) {
    anti_position_[anti_[k]] = static_cast<int>(k);
  }
  data_.assign(static_cast<std::size_t>(lattice_->size()) * component_count(),
               Complex(0.0));
}

VectorForm VectorForm::constant(GeometryPtr geometry, Matrix const& phi,
                                int const band) {
  int const d = geometry->dimension();
  if (phi.rows() != d || phi.cols() != d) {
    throw Error(ErrorKind::shape, "Beltrami matrix must be d x d");
  }
  VectorForm result(std::move(geometry), 1, band);
  int const zero = result.lattice().zero_index();
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      result.at(zero, result.component(i, Mask{1} << j)) = phi(i, j);
    }
  }
  return result;
}

int VectorForm::component(int const vector_index, Mask const anti) const {
  int const k = anti_position_[anti];
  if (k < 0 || vector_index < 0 || vector_index >= geometry_->dimension()) {
    return -1;
  }
  return vector_index * static_cast<int>(anti_.size()) + k;
}

Complex VectorForm::coefficient(std::span<int const> const mode,
                                int const vector_index,
                                Mask const anti) const {
  int const m = lattice_->index(mode);
  int const c = component(vector_index, anti);
  if (c < 0) {
    throw Error(ErrorKind::degree, "multi-index does not match degree");
  }
  return m < 0 ? Complex(0.0) : at(m, c);
}

void VectorForm::set_coefficient(std::span<int const> const mode,
                                 int const vector_index, Mask const anti,
                                 Complex const value) {
  int const m = lattice_->index(mode);
  int const c = component(vector_index, anti);
  if (m < 0 || c < 0) {
    throw Error(ErrorKind::shape, "mode or index out of range");
  }
  at(m, c) = value;
}

VectorForm VectorForm::with_band(int const new_band) const {
  VectorForm result(geometry_, degree_, new_band);
  int const n = component_count();
  if (new_band >= band()) {
    auto const map = result.lattice().embedding_of(lattice());
    for (int m = 0; m < mode_count(); ++m) {
      for (int c = 0; c < n; ++c) {
        result.at(map[m], c) = at(m, c);
      }
    }
  } else {
    auto const map = lattice().embedding_of(result.lattice());
    for (int m = 0; m < result.mode_count(); ++m) {
      for (int c = 0; c < n; ++c) {
        result.at(m, c) = at(map[m], c);
      }
    }
  }
  return result;
}

int VectorForm::effective_band() const {
  int result = 0;
  for (int m = 0; m < mode_count(); ++m) {
    for (Complex const v : mode_coefficients(m)) {
      if (v != Complex(0.0)) {
        result = std::max(result, lattice_->max_abs(m));
        break;
      }
    }
  }
  return result;
}

Matrix VectorForm::constant_matrix() const {
  if (degree_ != 1) {
    throw Error(ErrorKind::degree, "matrix form needs a (0,1) vector form");
  }
  int const d = geometry_->dimension();
  Matrix result(d, d);
  int const zero = lattice_->zero_index();
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      result(i, j) = at(zero, component(i, Mask{1} << j));
    }
  }
  return result;
}

VectorForm& VectorForm::operator+=(VectorForm const& other) {
  require_compatible(*this, other);
  if (other.band() > band()) {
    *this = with_band(other.band());
  }
  auto const map = lattice_->embedding_of(other.lattice());
  int const n = component_count();
  for (int m = 0; m < other.mode_count(); ++m) {
    for (int c = 0; c < n; ++c) {
      at(map[m], c) += other.at(m, c);
    }
  }
  return *this;
}

VectorForm& VectorForm::operator-=(VectorForm const& other) {
  return *this += Complex(-1.0) * other;
}

VectorForm& VectorForm::operator*=(Complex const s) {
  for (auto& v : data_) {
    v *= s;
  }
  return *this;
}

VectorForm operator+(VectorForm const& a, VectorForm const& b) {
  VectorForm result = a;
  return result += b;
}

VectorForm operator-(VectorForm const& a, VectorForm const& b) {
  VectorForm result = a;
  return result -= b;
}

VectorForm operator*(Complex const s, VectorForm a) { return a *= s; }

Complex inner(VectorForm const& a, VectorForm const& b) {
  require_compatible(a, b);
  Matrix const gram = component_gram(a);
  int const band = std::min(a.band(), b.band());
  ModeLattice const& common = ModeLattice::get(a.lattice().dims(), band);
  auto const map_a = a.lattice().embedding_of(common);
  auto const map_b = b.lattice().embedding_of(common);
  int const n = a.component_count();
  Complex sum = 0.0;
  for (int m = 0; m < common.size(); ++m) {
    Eigen::Map<Vector const> u(a.mode_coefficients(map_a[m]).data(), n);
    Eigen::Map<Vector const> v(b.mode_coefficients(map_b[m]).data(), n);
    sum += (v.adjoint() * gram * u)(0, 0);
  }
  return sum;
}

double norm(VectorForm const& a) {
  return std::sqrt(std::max(0.0, inner(a, a).real()));
}

VectorForm dbar(VectorForm const& phi) {
  int const d = phi.geometry().dimension();
  if (phi.degree() >= d) {
    throw Error(ErrorKind::degree, "∂̄ of a vector form of top degree");
  }
  VectorForm result(phi.geometry_ptr(), phi.degree() + 1, phi.band());
  std::vector<Complex> alpha(d);
  for (int m = 0; m < phi.mode_count(); ++m) {
    phi.geometry().holomorphic_frequency(phi.lattice().mode(m), alpha);
    for (int c = 0; c < phi.component_count(); ++c) {
      Complex const value = phi.at(m, c);
      if (value == Complex(0.0)) {
        continue;
      }
      int const i = phi.vector_index_of(c);
      Mask const anti = phi.anti_of(c);
      for (int l = 0; l < d; ++l) {
        int const sign = merge_sign(Mask{1} << l, anti);
        if (sign == 0) {
          continue;
        }
        Complex const factor = Complex(0.0, two_pi) * std::conj(alpha[l]);
        result.at(m, result.component(i, anti | (Mask{1} << l))) +=
            static_cast<double>(sign) * factor * value;
      }
    }
  }
  return result;
}

namespace {

// Adds sign · Σ_{i,j} a^i ∧ ∂_i b^j ⊗ ∂_j into result.
void add_bracket_term(VectorForm const& a, VectorForm const& b,
                      double const sign, VectorForm& result) {
  TorusGeometry const& geometry = a.geometry();
  int const d = geometry.dimension();
  ModeLattice const& out = result.lattice();
  std::vector<long> linear_a(a.mode_count());
  std::vector<long> linear_b(b.mode_count());
  for (int m = 0; m < a.mode_count(); ++m) {
    linear_a[m] = out.linear(a.lattice().mode(m));
  }
  for (int m = 0; m < b.mode_count(); ++m) {
    linear_b[m] = out.linear(b.lattice().mode(m));
  }
  std::vector<Complex> alpha(d);
  std::vector<Complex> derivative(static_cast<std::size_t>(b.mode_count()) * d);
  for (int m = 0; m < b.mode_count(); ++m) {
    geometry.holomorphic_frequency(b.lattice().mode(m), alpha);
    for (int i = 0; i < d; ++i) {
      derivative[static_cast<std::size_t>(m) * d + i] =
          Complex(0.0, two_pi) * alpha[i];
    }
  }
  for (int ma = 0; ma < a.mode_count(); ++ma) {
    for (int ca = 0; ca < a.component_count(); ++ca) {
      Complex const va = a.at(ma, ca);
      if (va == Complex(0.0)) {
        continue;
      }
      int const i = a.vector_index_of(ca);
      Mask const ka = a.anti_of(ca);
      for (int mb = 0; mb < b.mode_count(); ++mb) {
        Complex const di = derivative[static_cast<std::size_t>(mb) * d + i];
        if (di == Complex(0.0)) {
          continue;
        }
        int const target = static_cast<int>(linear_a[ma] + linear_b[mb] +
                                             out.offset());
        for (int cb = 0; cb < b.component_count(); ++cb) {
          Complex const vb = b.at(mb, cb);
          if (vb == Complex(0.0)) {
            continue;
          }
          Mask const kb = b.anti_of(cb);
          int const s = merge_sign(ka, kb);
          if (s == 0) {
            continue;
          }
          int const j = b.vector_index_of(cb);
          result.at(target, result.component(j, ka | kb)) +=
              sign * s * va * di * vb;
        }
      }
    }
  }
}

}  // namespace

VectorForm lie_bracket(VectorForm const& phi, VectorForm const& psi) {
  if (phi.geometry_ptr() != psi.geometry_ptr()) {
    throw Error(ErrorKind::shape, "vector forms live on different tori");
  }
  int const k = phi.degree();
  int const l = psi.degree();
  int const d = phi.geometry().dimension();
  if (k + l > d) {
    return VectorForm(phi.geometry_ptr(), std::min(d, k + l),
                      phi.band() + psi.band());
  }
  VectorForm result(phi.geometry_ptr(), k + l, phi.band() + psi.band());
  add_bracket_term(phi, psi, 1.0, result);
  add_bracket_term(psi, phi, (k * l) % 2 == 0 ? -1.0 : 1.0, result);
  return result;
}

double maurer_cartan_residual(VectorForm const& phi) {
  if (phi.geometry().dimension() == 1) {
    return 0.0;
  }
  VectorForm residual = dbar(phi);
  residual -= Complex(0.5) * lie_bracket(phi, phi);
  return norm(residual);
}

}  // namespace hpl::torus
