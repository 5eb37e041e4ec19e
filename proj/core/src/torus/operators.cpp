#include "hpl/torus/operators.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "hpl/error.hpp"

namespace hpl::torus {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

// Wedge with 2πi Σ α_i dz_i (holomorphic) or 2πi Σ β_j dz̄_j.
FourierForm wedge_frequency(FourierForm const& f, bool const holomorphic) {
  Bidegree const b = f.bidegree();
  Bidegree const target =
      holomorphic ? Bidegree{b.p + 1, b.q} : Bidegree{b.p, b.q + 1};
  TorusGeometry const& geometry = f.geometry();
  FourierForm result(f.geometry_ptr(), target, f.band());
  FormSpace const& space = f.space();
  auto const& table = holomorphic ? space.dz_wedge : space.dzbar_wedge;
  int const d = geometry.dimension();
  std::vector<Complex> alpha(d);
  for (int m = 0; m < f.mode_count(); ++m) {
    auto const in = f.mode_coefficients(m);
    auto out = result.mode_coefficients(m);
    geometry.holomorphic_frequency(f.lattice().mode(m), alpha);
    for (int i = 0; i < d; ++i) {
      Complex const factor =
          Complex(0.0, two_pi) * (holomorphic ? alpha[i] : std::conj(alpha[i]));
      for (int c = 0; c < space.size(); ++c) {
        WedgeImage const& image = table[i][c];
        if (image.sign != 0) {
          out[image.target] += static_cast<double>(image.sign) * factor * in[c];
        }
      }
    }
  }
  return result;
}

// Adjoint of wedge_frequency, from (p,q) into (p-1,q) or (p,q-1).
FourierForm interior_frequency(FourierForm const& f, bool const holomorphic) {
  Bidegree const b = f.bidegree();
  Bidegree const target =
      holomorphic ? Bidegree{b.p - 1, b.q} : Bidegree{b.p, b.q - 1};
  TorusGeometry const& geometry = f.geometry();
  FourierForm result(f.geometry_ptr(), target, f.band());
  FormSpace const& space = f.space();
  auto const& interior = holomorphic ? space.dz_interior : space.dzbar_interior;
  int const d = geometry.dimension();
  int const n = space.size();
  int const n_out = result.component_count();
  std::vector<Complex> alpha(d);
  for (int m = 0; m < f.mode_count(); ++m) {
    Eigen::Map<Vector const> in(f.mode_coefficients(m).data(), n);
    Eigen::Map<Vector> out(result.mode_coefficients(m).data(), n_out);
    geometry.holomorphic_frequency(f.lattice().mode(m), alpha);
    for (int i = 0; i < d; ++i) {
      Complex const factor =
          Complex(0.0, two_pi) * (holomorphic ? alpha[i] : std::conj(alpha[i]));
      if (factor != Complex(0.0)) {
        out += std::conj(factor) * (interior[i] * in);
      }
    }
  }
  return result;
}

FourierForm zero_like(FourierForm const& f) {
  return FourierForm(f.geometry_ptr(), f.bidegree(), f.band());
}

}  // namespace

FourierForm dbar(FourierForm const& f) {
  if (f.bidegree().q >= f.geometry().dimension()) {
    throw Error(ErrorKind::degree, "∂̄ of a form of top antiholomorphic degree");
  }
  return wedge_frequency(f, false);
}

FourierForm partial(FourierForm const& f) {
  if (f.bidegree().p >= f.geometry().dimension()) {
    throw Error(ErrorKind::degree, "∂ of a form of top holomorphic degree");
  }
  return wedge_frequency(f, true);
}

FourierForm adjoint_dbar(FourierForm const& f) {
  if (f.bidegree().q == 0) {
    return zero_like(f);
  }
  return interior_frequency(f, false);
}

FourierForm adjoint_partial(FourierForm const& f) {
  if (f.bidegree().p == 0) {
    return zero_like(f);
  }
  return interior_frequency(f, true);
}

FourierForm laplacian_dbar(FourierForm const& f) {
  int const d = f.geometry().dimension();
  FourierForm result = zero_like(f);
  if (f.bidegree().q > 0) {
    result += wedge_frequency(interior_frequency(f, false), false);
  }
  if (f.bidegree().q < d) {
    result += interior_frequency(wedge_frequency(f, false), false);
  }
  return result;
}

FourierForm laplacian_partial(FourierForm const& f) {
  int const d = f.geometry().dimension();
  FourierForm result = zero_like(f);
  if (f.bidegree().p > 0) {
    result += wedge_frequency(interior_frequency(f, true), true);
  }
  if (f.bidegree().p < d) {
    result += interior_frequency(wedge_frequency(f, true), true);
  }
  return result;
}

FourierForm green(FourierForm const& f) {
  FourierForm result = f;
  int const zero = f.lattice().zero_index();
  for (int m = 0; m < f.mode_count(); ++m) {
    auto out = result.mode_coefficients(m);
    if (m == zero) {
      std::fill(out.begin(), out.end(), Complex(0.0));
      continue;
    }
    double const lambda = f.geometry().laplacian_eigenvalue(f.lattice().mode(m));
    for (auto& v : out) {
      v /= lambda;
    }
  }
  return result;
}

FourierForm harmonic_projection(FourierForm const& f) {
  FourierForm result = zero_like(f);
  int const zero = f.lattice().zero_index();
  std::ranges::copy(f.mode_coefficients(zero),
                    result.mode_coefficients(zero).begin());
  return result;
}

FourierForm primitive_projection(FourierForm const& f) {
  if (f.bidegree().total() > f.geometry().dimension()) {
    throw Error(ErrorKind::degree, "primitive projection needs p+q ≤ d");
  }
  FourierForm result = zero_like(f);
  int const zero = f.lattice().zero_index();
  int const n = f.component_count();
  Eigen::Map<Vector const> in(f.mode_coefficients(zero).data(), n);
  Eigen::Map<Vector> out(result.mode_coefficients(zero).data(), n);
  out = f.space().primitive_projector * in;
  return result;
}

FourierForm t_operator(FourierForm const& f) {
  Bidegree const b = f.bidegree();
  if (b.p >= f.geometry().dimension() || b.q == 0) {
    return zero_like(f);
  }
  return interior_frequency(green(wedge_frequency(f, true)), false);
}

GradedForm::GradedForm(FourierForm piece) { *this += piece; }

FourierForm const* GradedForm::piece(Bidegree const b) const {
  auto const it = pieces_.find(b);
  return it == pieces_.end() ? nullptr : &it->second;
}

int GradedForm::band() const {
  int result = 0;
  for (auto const& [b, f] : pieces_) {
    result = std::max(result, f.band());
  }
  return result;
}

GradedForm& GradedForm::operator+=(FourierForm const& piece) {
  auto const it = pieces_.find(piece.bidegree());
  if (it == pieces_.end()) {
    pieces_.emplace(piece.bidegree(), piece);
  } else {
    it->second += piece;
  }
  return *this;
}

GradedForm& GradedForm::operator+=(GradedForm const& other) {
  for (auto const& [b, f] : other.pieces_) {
    *this += f;
  }
  return *this;
}

GradedForm& GradedForm::operator-=(GradedForm const& other) {
  for (auto const& [b, f] : other.pieces_) {
    *this += Complex(-1.0) * f;
  }
  return *this;
}

GradedForm& GradedForm::operator*=(Complex const s) {
  for (auto& [b, f] : pieces_) {
    f *= s;
  }
  return *this;
}

GradedForm operator+(GradedForm a, GradedForm const& b) { return a += b; }
GradedForm operator-(GradedForm a, GradedForm const& b) { return a -= b; }
GradedForm operator*(Complex const s, GradedForm a) { return a *= s; }

double norm(GradedForm const& a) {
  double sum = 0.0;
  for (auto const& [b, f] : a.pieces()) {
    double const n = norm(f);
    sum += n * n;
  }
  return std::sqrt(sum);
}

GradedForm partial(GradedForm const& f) {
  GradedForm result;
  for (auto const& [b, piece] : f.pieces()) {
    if (b.p < piece.geometry().dimension()) {
      result += wedge_frequency(piece, true);
    }
  }
  return result;
}

GradedForm dbar(GradedForm const& f) {
  GradedForm result;
  for (auto const& [b, piece] : f.pieces()) {
    if (b.q < piece.geometry().dimension()) {
      result += wedge_frequency(piece, false);
    }
  }
  return result;
}

GradedForm exterior_derivative(GradedForm const& f) {
  return partial(f) + dbar(f);
}

}  // namespace hpl::torus
