#include "hpl/torus/fourier_form.hpp"

#include <algorithm>
#include <cmath>

#include "hpl/error.hpp"

namespace hpl::torus {

namespace {

double mode_norm_squared(FormSpace const& space,
                         std::span<Complex const> c) {
  Eigen::Map<Vector const> u(c.data(), static_cast<Eigen::Index>(c.size()));
  return (u.adjoint() * space.gram * u)(0, 0).real();
}

void require_compatible(FourierForm const& a, FourierForm const& b) {
  if (a.geometry_ptr() != b.geometry_ptr()) {
    throw Error(ErrorKind::shape, "forms live on different tori");
  }
  if (a.bidegree() != b.bidegree()) {
    throw Error(ErrorKind::degree, "bidegrees differ");
  }
}

}  // namespace

FourierForm::FourierForm(GeometryPtr geometry, Bidegree const bidegree,
                         int const band)
    : geometry_(std::move(geometry)),
      bidegree_(bidegree),
      lattice_(&ModeLattice::get(2 * geometry_->dimension(), band)),
      space_(&geometry_->space(bidegree)),
      data_(static_cast<std::size_t>(lattice_->size()) * space_->size(),
            Complex(0.0)) {}

Complex FourierForm::coefficient(std::span<int const> const mode,
                                 Mask const holo, Mask const anti) const {
  int const m = lattice_->index(mode);
  int const c = space_->index(holo, anti);
  if (c < 0) {
    throw Error(ErrorKind::degree, "multi-index does not match bidegree");
  }
  return m < 0 ? Complex(0.0) : at(m, c);
}

void FourierForm::set_coefficient(std::span<int const> const mode,
                                  Mask const holo, Mask const anti,
                                  Complex const value) {
  int const m = lattice_->index(mode);
  int const c = space_->index(holo, anti);
  if (m < 0 || c < 0) {
    throw Error(ErrorKind::shape, "mode or multi-index out of range");
  }
  at(m, c) = value;
}

FourierForm FourierForm::with_band(int const new_band) const {
  FourierForm result(geometry_, bidegree_, new_band);
  int const n = component_count();
  if (new_band >= band()) {
    auto const map = result.lattice().embedding_of(lattice());
    for (int m = 0; m < mode_count(); ++m) {
      std::copy_n(mode_coefficients(m).begin(), n,
                  result.mode_coefficients(map[m]).begin());
    }
  } else {
    auto const map = lattice().embedding_of(result.lattice());
    for (int m = 0; m < result.mode_count(); ++m) {
      std::copy_n(mode_coefficients(map[m]).begin(), n,
                  result.mode_coefficients(m).begin());
    }
  }
  return result;
}

double FourierForm::mass_outside(int const cutoff) const {
  double sum = 0.0;
  for (int m = 0; m < mode_count(); ++m) {
    if (lattice_->max_abs(m) > cutoff) {
      sum += mode_norm_squared(*space_, mode_coefficients(m));
    }
  }
  return std::sqrt(std::max(0.0, sum));
}

int FourierForm::effective_band() const {
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

bool FourierForm::is_real(double const tol) const {
  if (bidegree_.p != bidegree_.q) {
    return false;
  }
  double const sign = (bidegree_.p * bidegree_.q) % 2 == 0 ? 1.0 : -1.0;
  for (int m = 0; m < mode_count(); ++m) {
    int const neg = lattice_->negated(m);
    for (int c = 0; c < component_count(); ++c) {
      int const swapped = space_->index(space_->anti_of(c), space_->holo_of(c));
      if (std::abs(at(neg, swapped) - sign * std::conj(at(m, c))) > tol) {
        return false;
      }
    }
  }
  return true;
}

FourierForm& FourierForm::operator+=(FourierForm const& other) {
  require_compatible(*this, other);
  if (other.band() > band()) {
    *this = with_band(other.band());
  }
  if (other.band() == band()) {
    for (std::size_t i = 0; i < data_.size(); ++i) {
      data_[i] += other.data_[i];
    }
    return *this;
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

FourierForm& FourierForm::operator-=(FourierForm const& other) {
  return *this += Complex(-1.0) * other;
}

FourierForm& FourierForm::operator*=(Complex const s) {
  for (auto& v : data_) {
    v *= s;
  }
  return *this;
}

FourierForm operator+(FourierForm const& a, FourierForm const& b) {
  FourierForm result = a;
  return result += b;
}

FourierForm operator-(FourierForm const& a, FourierForm const& b) {
  FourierForm result = a;
  return result -= b;
}

FourierForm operator*(Complex const s, FourierForm a) { return a *= s; }

Complex inner(FourierForm const& a, FourierForm const& b) {
  require_compatible(a, b);
  FormSpace const& space = a.space();
  int const band = std::min(a.band(), b.band());
  ModeLattice const& common = ModeLattice::get(a.lattice().dims(), band);
  auto const map_a = a.lattice().embedding_of(common);
  auto const map_b = b.lattice().embedding_of(common);
  int const n = space.size();
  Complex sum = 0.0;
  for (int m = 0; m < common.size(); ++m) {
    Eigen::Map<Vector const> u(a.mode_coefficients(map_a[m]).data(), n);
    Eigen::Map<Vector const> v(b.mode_coefficients(map_b[m]).data(), n);
    sum += (v.adjoint() * space.gram * u)(0, 0);
  }
  return sum;
}

double norm(FourierForm const& a) {
  double sum = 0.0;
  for (int m = 0; m < a.mode_count(); ++m) {
    sum += mode_norm_squared(a.space(), a.mode_coefficients(m));
  }
  return std::sqrt(std::max(0.0, sum));
}

}  // namespace hpl::torus
