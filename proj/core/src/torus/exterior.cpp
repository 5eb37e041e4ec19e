#include "hpl/torus/exterior.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "hpl/error.hpp"

namespace hpl::torus {

ExteriorElement::ExteriorElement(int const d)
    : d_(d), c_(std::size_t{1} << (2 * d), Complex(0.0)) {}

ExteriorElement ExteriorElement::monomial(int const d, Mask const holo,
                                          Mask const anti,
                                          Complex const coefficient) {
  ExteriorElement result(d);
  result.add(holo, anti, coefficient);
  return result;
}

ExteriorElement ExteriorElement::kahler_form(Matrix const& g) {
  int const d = static_cast<int>(g.rows());
  ExteriorElement result(d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      result.add(Mask{1} << i, Mask{1} << j, I * g(i, j));
    }
  }
  return result;
}

ExteriorElement ExteriorElement::from_components(FormSpace const& space,
                                                 Vector const& components) {
  ExteriorElement result(space.dimension);
  for (int c = 0; c < space.size(); ++c) {
    result.add(space.holo_of(c), space.anti_of(c), components(c));
  }
  return result;
}

Complex ExteriorElement::coefficient(Mask const holo, Mask const anti) const {
  return c_[holo | (anti << d_)];
}

void ExteriorElement::add(Mask const holo, Mask const anti,
                          Complex const value) {
  c_[holo | (anti << d_)] += value;
}

Vector ExteriorElement::components(FormSpace const& space) const {
  Vector result(space.size());
  for (int c = 0; c < space.size(); ++c) {
    result(c) = coefficient(space.holo_of(c), space.anti_of(c));
  }
  return result;
}

ExteriorElement ExteriorElement::part(Bidegree const b) const {
  ExteriorElement result(d_);
  Mask const low = (Mask{1} << d_) - 1;
  for (Mask m = 0; m < c_.size(); ++m) {
    if (popcount(m & low) == b.p && popcount(m >> d_) == b.q) {
      result.c_[m] = c_[m];
    }
  }
  return result;
}

ExteriorElement ExteriorElement::conjugate() const {
  // conj(dz_I ∧ dz̄_J) = dz̄_I ∧ dz_J = (-1)^{pq} dz_J ∧ dz̄_I.
  ExteriorElement result(d_);
  Mask const low = (Mask{1} << d_) - 1;
  for (Mask m = 0; m < c_.size(); ++m) {
    if (c_[m] == Complex(0.0)) {
      continue;
    }
    Mask const holo = m & low;
    Mask const anti = m >> d_;
    int const sign = (popcount(holo) * popcount(anti)) % 2 == 0 ? 1 : -1;
    result.add(anti, holo, static_cast<double>(sign) * std::conj(c_[m]));
  }
  return result;
}

double ExteriorElement::max_abs() const {
  double result = 0.0;
  for (auto const& v : c_) {
    result = std::max(result, std::abs(v));
  }
  return result;
}

ExteriorElement& ExteriorElement::operator+=(ExteriorElement const& other) {
  for (std::size_t m = 0; m < c_.size(); ++m) {
    c_[m] += other.c_[m];
  }
  return *this;
}

ExteriorElement& ExteriorElement::operator-=(ExteriorElement const& other) {
  for (std::size_t m = 0; m < c_.size(); ++m) {
    c_[m] -= other.c_[m];
  }
  return *this;
}

ExteriorElement& ExteriorElement::operator*=(Complex const s) {
  for (auto& v : c_) {
    v *= s;
  }
  return *this;
}

ExteriorElement operator+(ExteriorElement a, ExteriorElement const& b) {
  return a += b;
}

ExteriorElement operator-(ExteriorElement a, ExteriorElement const& b) {
  return a -= b;
}

ExteriorElement operator*(Complex const s, ExteriorElement a) {
  return a *= s;
}

ExteriorElement wedge(ExteriorElement const& a, ExteriorElement const& b) {
  if (a.dimension() != b.dimension()) {
    throw Error(ErrorKind::shape, "exterior algebras differ");
  }
  int const d = a.dimension();
  ExteriorElement result(d);
  auto const& ca = a.coefficients();
  auto const& cb = b.coefficients();
  Mask const low = (Mask{1} << d) - 1;
  for (Mask x = 0; x < ca.size(); ++x) {
    if (ca[x] == Complex(0.0)) {
      continue;
    }
    for (Mask y = 0; y < cb.size(); ++y) {
      if (cb[y] == Complex(0.0)) {
        continue;
      }
      int const sign = merge_sign(x, y);
      if (sign != 0) {
        Mask const z = x | y;
        result.add(z & low, z >> d, static_cast<double>(sign) * ca[x] * cb[y]);
      }
    }
  }
  return result;
}

ExteriorElement power(ExteriorElement const& a, int const exponent) {
  ExteriorElement result =
      ExteriorElement::monomial(a.dimension(), 0, 0, 1.0);
  for (int i = 0; i < exponent; ++i) {
    result = wedge(result, a);
  }
  return result;
}

Complex inner(ExteriorElement const& a, ExteriorElement const& b,
              TorusGeometry const& geometry) {
  int const d = geometry.dimension();
  Complex result = 0.0;
  for (int p = 0; p <= d; ++p) {
    for (int q = 0; q <= d; ++q) {
      FormSpace const& space = geometry.space({p, q});
      Vector const u = a.components(space);
      Vector const v = b.components(space);
      result += (v.adjoint() * space.gram * u)(0, 0);
    }
  }
  return result;
}

Complex integrate(ExteriorElement const& a) {
  int const d = a.dimension();
  Mask const all = (Mask{1} << d) - 1;
  Complex factor = ((d * (d - 1) / 2) % 2 == 0) ? 1.0 : -1.0;
  for (int i = 0; i < d; ++i) {
    factor *= Complex(0.0, -2.0);
  }
  return factor * a.coefficient(all, all);
}

}  // namespace hpl::torus
