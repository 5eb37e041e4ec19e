#include "hpl/period/family.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "hpl/error.hpp"
#include "hpl/torus/pointwise.hpp"

namespace hpl::period {

namespace {

torus::VectorForm combine(std::vector<torus::VectorForm> const& fields,
                          std::span<Complex const> t) {
  torus::VectorForm result = Complex(0.0) * fields.front();
  for (std::size_t mu = 0; mu < fields.size(); ++mu) {
    if (t[mu] != Complex(0.0)) {
      result += t[mu] * fields[mu];
    }
  }
  return result;
}

torus::VectorForm unit_field(torus::GeometryPtr const& geometry,
                             std::vector<std::tuple<int, int, double>> const&
                                 entries) {
  int const d = geometry->dimension();
  Matrix m = Matrix::Zero(d, d);
  for (auto const& [i, j, v] : entries) {
    m(i, j) = v;
  }
  return torus::VectorForm::constant(geometry, m);
}

}  // namespace

BeltramiFamily::BeltramiFamily(std::string name, torus::GeometryPtr geometry,
                               std::vector<torus::VectorForm> fields,
                               int const degree, double const radius)
    : name_(std::move(name)),
      geometry_(std::move(geometry)),
      fields_(std::move(fields)),
      degree_(degree),
      radius_(radius) {
  if (fields_.empty()) {
    throw Error(ErrorKind::invalid_problem, "family needs a basis field");
  }
  for (auto const& f : fields_) {
    if (f.geometry_ptr() != geometry_ || f.degree() != 1) {
      throw Error(ErrorKind::invalid_problem,
                  "basis fields must be (0,1) vector forms on the family torus");
    }
  }
  if (degree < 1 || degree > geometry_->dimension()) {
    throw Error(ErrorKind::degree, "family degree must lie in 1..d");
  }
  int const band = this->band();
  for (auto& f : fields_) {
    f = f.with_band(band);
  }
  if (radius_ <= 0.0) {
    radius_ = certify_admissible_radius(fields_);
  }
}

bool BeltramiFamily::is_constant() const {
  return std::ranges::all_of(fields_, [](auto const& f) {
    return f.is_constant();
  });
}

int BeltramiFamily::band() const {
  int band = 0;
  for (auto const& f : fields_) {
    band = std::max(band, f.band());
  }
  return band;
}

torus::VectorForm BeltramiFamily::at(std::span<Complex const> const t) const {
  if (static_cast<int>(t.size()) != parameter_count()) {
    throw Error(ErrorKind::shape, "parameter has the wrong length");
  }
  return combine(fields_, t);
}

bool BeltramiFamily::admits(std::span<Complex const> const t) const {
  double sum = 0.0;
  for (Complex const v : t) {
    sum += std::norm(v);
  }
  return std::sqrt(sum) < radius_;
}

double certify_admissible_radius(
    std::vector<torus::VectorForm> const& fields) {
  int const n = static_cast<int>(fields.size());
  std::vector<Parameter> directions;
  for (int mu = 0; mu < n; ++mu) {
    Parameter e(n, 0.0);
    e[mu] = 1.0;
    directions.push_back(e);
    for (int nu = mu + 1; nu < n; ++nu) {
      for (Complex const phase : {Complex(1.0), Complex(-1.0), Complex(0, 1),
                                  Complex(0, -1)}) {
        Parameter f(n, 0.0);
        f[mu] = 1.0 / std::sqrt(2.0);
        f[nu] = phase / std::sqrt(2.0);
        directions.push_back(f);
      }
    }
  }
  std::mt19937_64 rng(20240611);
  std::normal_distribution<double> normal;
  for (int s = 0; s < 16 * n; ++s) {
    Parameter u(n);
    double length = 0.0;
    for (auto& v : u) {
      v = {normal(rng), normal(rng)};
      length += std::norm(v);
    }
    for (auto& v : u) {
      v /= std::sqrt(length);
    }
    directions.push_back(u);
  }
  double largest = 0.0;
  for (auto const& u : directions) {
    largest = std::max(largest, torus::sup_operator_norm(combine(fields, u)));
  }
  if (largest == 0.0) {
    return 1.0;
  }
  double const radius = 0.9 / largest;
  for (auto const& u : directions) {
    Parameter scaled = u;
    for (auto& v : scaled) {
      v *= radius;
    }
    if (torus::maurer_cartan_residual(combine(fields, scaled)) > 1e-10) {
      throw Error(ErrorKind::invalid_problem,
                  "family violates the Maurer–Cartan equation");
    }
  }
  return radius;
}

BeltramiFamily preset(std::string_view const name) {
  if (name == "elliptic") {
    auto const g = torus::TorusGeometry::square(1);
    return BeltramiFamily("elliptic", g, {unit_field(g, {{0, 0, 1.0}})}, 1);
  }
  auto const g = torus::TorusGeometry::square(2);
  auto const e11 = unit_field(g, {{0, 0, 1.0}});
  auto const e22 = unit_field(g, {{1, 1, 1.0}});
  if (name == "abelian-diagonal") {
    return BeltramiFamily("abelian-diagonal", g, {e11, e22}, 2);
  }
  if (name == "abelian-full") {
    return BeltramiFamily("abelian-full", g,
                          {e11, e22, unit_field(g, {{0, 1, 1.0}, {1, 0, 1.0}})},
                          2);
  }
  if (name == "abelian-upper") {
    return BeltramiFamily("abelian-upper", g,
                          {e11, e22, unit_field(g, {{0, 1, 1.0}})}, 2);
  }
  if (name == "abelian-degenerate") {
    return BeltramiFamily("abelian-degenerate", g, {e11, e11}, 2);
  }
  throw Error(ErrorKind::usage, "unknown preset: " + std::string(name));
}

std::vector<std::string> preset_names() {
  return {"elliptic", "abelian-diagonal", "abelian-full", "abelian-upper",
          "abelian-degenerate"};
}

}  // namespace hpl::period
