#pragma once

#include <vector>

#include "hpl/torus/geometry.hpp"
#include "hpl/torus/multi_index.hpp"
#include "hpl/types.hpp"

namespace hpl::torus {

// A constant form of mixed degree on ℂ^d: an element of the exterior algebra
// on dz_1..dz_d, dz̄_1..dz̄_d. Monomials are stored by the bit set
// holo | anti << d and read dz_I ∧ dz̄_J.
class ExteriorElement {
 public:
  explicit ExteriorElement(int d);
  static ExteriorElement monomial(int d, Mask holo, Mask anti,
                                  Complex coefficient = 1.0);
  // i Σ g_ij dz_i ∧ dz̄_j.
  static ExteriorElement kahler_form(Matrix const& g);
  // Σ_I,J c_IJ dz_I ∧ dz̄_J from coefficients in the component order of space.
  static ExteriorElement from_components(FormSpace const& space,
                                         Vector const& components);

  int dimension() const { return d_; }
  Complex coefficient(Mask holo, Mask anti) const;
  void add(Mask holo, Mask anti, Complex value);
  std::vector<Complex> const& coefficients() const { return c_; }

  // Coefficients of the (p,q) part in the component order of space.
  Vector components(FormSpace const& space) const;
  ExteriorElement part(Bidegree b) const;
  ExteriorElement conjugate() const;
  double max_abs() const;

  ExteriorElement& operator+=(ExteriorElement const& other);
  ExteriorElement& operator-=(ExteriorElement const& other);
  ExteriorElement& operator*=(Complex s);

 private:
  int d_;
  std::vector<Complex> c_;
};

ExteriorElement operator+(ExteriorElement a, ExteriorElement const& b);
ExteriorElement operator-(ExteriorElement a, ExteriorElement const& b);
ExteriorElement operator*(Complex s, ExteriorElement a);
ExteriorElement wedge(ExteriorElement const& a, ExteriorElement const& b);
ExteriorElement power(ExteriorElement const& a, int exponent);

// Pointwise Hermitian inner product in the metric of the geometry.
Complex inner(ExteriorElement const& a, ExteriorElement const& b,
              TorusGeometry const& geometry);

// ∫ of the top-degree part over the torus, with
// ∫ dz_1∧..∧dz_d∧dz̄_1∧..∧dz̄_d = (-1)^{d(d-1)/2} (-2i)^d.
Complex integrate(ExteriorElement const& a);

}  // namespace hpl::torus
