#include "hpl/torus/harmonic_basis.hpp"

#include <algorithm>
#include <cmath>

#include "hpl/error.hpp"
#include "hpl/torus/multi_index.hpp"

namespace hpl::torus {

PrimitiveBasis::PrimitiveBasis(GeometryPtr geometry, int const degree)
    : geometry_(std::move(geometry)), degree_(degree) {
  int const d = geometry_->dimension();
  if (degree < 0 || degree > d) {
    throw Error(ErrorKind::degree, "primitive degree must lie in 0..d");
  }
  for (int alpha = 0; alpha <= degree; ++alpha) {
    Bidegree const b{degree - alpha, alpha};
    FormSpace const& space = geometry_->space(b);
    std::vector<int> order(space.size());
    for (int c = 0; c < space.size(); ++c) {
      order[c] = c;
    }
    std::ranges::stable_sort(order, [&](int const x, int const y) {
      int const ox = popcount(space.holo_of(x) & space.anti_of(x));
      int const oy = popcount(space.holo_of(y) & space.anti_of(y));
      if (ox != oy) {
        return ox < oy;
      }
      if (space.holo_of(x) != space.holo_of(y)) {
        return tuple_less(space.holo_of(x), space.holo_of(y));
      }
      return tuple_less(space.anti_of(x), space.anti_of(y));
    });
    std::vector<Vector> accepted;
    for (int const c : order) {
      Vector v = space.primitive_projector.col(c);
      for (auto const& u : accepted) {
        Complex const overlap = (u.adjoint() * space.gram * v)(0, 0);
        v -= overlap * u;
      }
      double const length =
          std::sqrt(std::max(0.0, (v.adjoint() * space.gram * v)(0, 0).real()));
      if (length <= 1e-10) {
        continue;
      }
      v /= length;
      // Clear rounding dust from coefficients that vanish exactly.
      for (auto& z : v) {
        if (std::abs(z.real()) < 1e-15) z.real(0.0);
        if (std::abs(z.imag()) < 1e-15) z.imag(0.0);
      }
      accepted.push_back(v);
    }
    offsets_.push_back(static_cast<int>(elements_.size()));
    hodge_numbers_.push_back(static_cast<int>(accepted.size()));
    for (auto const& v : accepted) {
      elements_.push_back(ExteriorElement::from_components(space, v));
    }
  }
  offsets_.push_back(static_cast<int>(elements_.size()));
}

FourierForm PrimitiveBasis::form(int const index, int const band) const {
  int alpha = 0;
  while (offsets_[alpha + 1] <= index) {
    ++alpha;
  }
  Bidegree const b{degree_ - alpha, alpha};
  FourierForm result(geometry_, b, band);
  Vector const v = elements_[index].components(result.space());
  int const zero = result.lattice().zero_index();
  for (int c = 0; c < result.component_count(); ++c) {
    result.at(zero, c) = v(c);
  }
  return result;
}

Vector PrimitiveBasis::coordinates(ExteriorElement const& e) const {
  Vector result(dimension());
  for (int i = 0; i < dimension(); ++i) {
    result(i) = inner(e, elements_[i], *geometry_);
  }
  return result;
}

Vector PrimitiveBasis::coordinates(FourierForm const& f) const {
  ExteriorElement e(geometry_->dimension());
  int const zero = f.lattice().zero_index();
  FormSpace const& space = f.space();
  for (int c = 0; c < f.component_count(); ++c) {
    e.add(space.holo_of(c), space.anti_of(c), f.at(zero, c));
  }
  return coordinates(e);
}

}  // namespace hpl::torus
