#pragma once

#include <map>

#include "hpl/torus/fourier_form.hpp"

namespace hpl::torus {

// ∂̄ and ∂ raise q (resp. p) by one; they throw a degree error at top degree.
FourierForm dbar(FourierForm const& f);
FourierForm partial(FourierForm const& f);

// Formal L² adjoints. In degree 0 the result is the zero form, reported at
// the input bidegree.
FourierForm adjoint_dbar(FourierForm const& f);
FourierForm adjoint_partial(FourierForm const& f);

// ∂̄∂̄* + ∂̄*∂̄ and ∂∂* + ∂*∂, composed from the operators above.
FourierForm laplacian_dbar(FourierForm const& f);
FourierForm laplacian_partial(FourierForm const& f);

// Divides mode k ≠ 0 by its Laplacian eigenvalue; kills mode 0.
FourierForm green(FourierForm const& f);
// Keeps mode 0.
FourierForm harmonic_projection(FourierForm const& f);
// Harmonic projection followed by the orthogonal projection of the constant
// part onto ker ω^{d-n+1} ∧ ·; requires n = p+q ≤ d.
FourierForm primitive_projection(FourierForm const& f);

// ∂̄* G ∂: (p,q) → (p+1,q-1). Zero form at the input bidegree when p = d or
// q = 0.
FourierForm t_operator(FourierForm const& f);

// A form of mixed degree, one FourierForm per bidegree.
class GradedForm {
 public:
  GradedForm() = default;
  explicit GradedForm(FourierForm piece);

  std::map<Bidegree, FourierForm> const& pieces() const { return pieces_; }
  FourierForm const* piece(Bidegree b) const;
  bool empty() const { return pieces_.empty(); }
  int band() const;

  GradedForm& operator+=(FourierForm const& piece);
  GradedForm& operator+=(GradedForm const& other);
  GradedForm& operator-=(GradedForm const& other);
  GradedForm& operator*=(Complex s);

 private:
  std::map<Bidegree, FourierForm> pieces_;
};

GradedForm operator+(GradedForm a, GradedForm const& b);
GradedForm operator-(GradedForm a, GradedForm const& b);
GradedForm operator*(Complex s, GradedForm a);
double norm(GradedForm const& a);

// d = ∂ + ∂̄ piecewise, dropping images beyond top degree.
GradedForm exterior_derivative(GradedForm const& f);
GradedForm partial(GradedForm const& f);
GradedForm dbar(GradedForm const& f);

}  // namespace hpl::torus
