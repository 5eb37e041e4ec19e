#include "hpl/torus/pointwise.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <vector>

#include "hpl/error.hpp"

namespace hpl::torus {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

// Values on the uniform grid of n points per axis, for each of `width`
// coefficient channels: result[(point)·width + channel], points ordered with
// the first axis most significant. Axes are transformed one at a time.
std::vector<Complex> grid_values(std::vector<Complex> const& coefficients,
                                 int const dims, int const band,
                                 int const width, int const n) {
  int const side = 2 * band + 1;
  std::vector<Complex> table(static_cast<std::size_t>(n) * side);
  for (int x = 0; x < n; ++x) {
    for (int k = -band; k <= band; ++k) {
      table[static_cast<std::size_t>(x) * side + (k + band)] =
          std::polar(1.0, two_pi * k * x / n);
    }
  }
  // Current shape: [n]^a × [side]^(dims-a) × width.
  std::vector<Complex> current = coefficients;
  long outer = 1;
  for (int axis = 0; axis < dims; ++axis) {
    long inner = width;
    for (int j = axis + 1; j < dims; ++j) {
      inner *= side;
    }
    std::vector<Complex> next(static_cast<std::size_t>(outer) * n * inner,
                              Complex(0.0));
    for (long o = 0; o < outer; ++o) {
      for (int x = 0; x < n; ++x) {
        Complex* out = &next[(static_cast<std::size_t>(o) * n + x) * inner];
        for (int k = 0; k < side; ++k) {
          Complex const e = table[static_cast<std::size_t>(x) * side + k];
          Complex const* in =
              &current[(static_cast<std::size_t>(o) * side + k) * inner];
          for (long i = 0; i < inner; ++i) {
            out[i] += e * in[i];
          }
        }
      }
    }
    current = std::move(next);
    outer *= n;
  }
  return current;
}

struct Weights {
  Matrix left;
  Matrix right_inverse;
};

// ‖φ v‖ uses conj(g) on T^{1,0} and g on T^{0,1}; with g = LᴴL the norm is
// the spectral norm of conj(L)·φ·L⁻¹.
Weights metric_weights(TorusGeometry const& geometry) {
  Eigen::LLT<Matrix> llt(geometry.kahler());
  Matrix const l = llt.matrixU();
  return {l.conjugate(), l.inverse()};
}

double pointwise_norm(Matrix const& phi, Weights const& w) {
  Eigen::JacobiSVD<Matrix> svd(w.left * phi * w.right_inverse);
  return svd.singularValues()(0);
}

int grid_size(VectorForm const& phi, SupNormOptions const& options,
              int& band) {
  band = phi.effective_band();
  return std::max(1, options.oversampling * (2 * band + 1));
}

}  // namespace

Matrix evaluate(VectorForm const& phi, std::span<double const> const x) {
  if (phi.degree() != 1) {
    throw Error(ErrorKind::degree, "pointwise matrix needs a (0,1) form");
  }
  int const d = phi.geometry().dimension();
  Matrix result = Matrix::Zero(d, d);
  for (int m = 0; m < phi.mode_count(); ++m) {
    auto const k = phi.lattice().mode(m);
    double phase = 0.0;
    for (int j = 0; j < 2 * d; ++j) {
      phase += k[j] * x[j];
    }
    Complex const e = std::polar(1.0, two_pi * phase);
    for (int c = 0; c < phi.component_count(); ++c) {
      Complex const v = phi.at(m, c);
      if (v != Complex(0.0)) {
        int const j = std::countr_zero(phi.anti_of(c));
        result(phi.vector_index_of(c), j) += v * e;
      }
    }
  }
  return result;
}

Vector evaluate(FourierForm const& f, std::span<double const> const x) {
  int const d = f.geometry().dimension();
  Vector result = Vector::Zero(f.component_count());
  for (int m = 0; m < f.mode_count(); ++m) {
    auto const k = f.lattice().mode(m);
    double phase = 0.0;
    for (int j = 0; j < 2 * d; ++j) {
      phase += k[j] * x[j];
    }
    Complex const e = std::polar(1.0, two_pi * phase);
    for (int c = 0; c < f.component_count(); ++c) {
      result(c) += f.at(m, c) * e;
    }
  }
  return result;
}

double sup_operator_norm(VectorForm const& phi,
                         SupNormOptions const& options) {
  if (phi.degree() != 1) {
    throw Error(ErrorKind::degree, "operator norm needs a (0,1) vector form");
  }
  if (!(options.step_tolerance > 0.0)) {
    throw Error(ErrorKind::usage, "sup norm step tolerance must be positive");
  }
  int const d = phi.geometry().dimension();
  int const dims = 2 * d;
  int band = 0;
  int const n = grid_size(phi, options, band);
  VectorForm const compact = phi.with_band(band);
  Weights const weights = metric_weights(phi.geometry());
  int const width = compact.component_count();
  auto const values = grid_values(compact.data(), dims, band, width, n);
  long const points = static_cast<long>(values.size()) / width;

  std::vector<std::pair<double, long>> ranked(points);
  Matrix sample(d, d);
  for (long pt = 0; pt < points; ++pt) {
    for (int c = 0; c < width; ++c) {
      sample(compact.vector_index_of(c),
             std::countr_zero(compact.anti_of(c))) =
          values[static_cast<std::size_t>(pt) * width + c];
    }
    ranked[pt] = {pointwise_norm(sample, weights), pt};
  }
  if (band == 0) {
    return ranked.front().first;
  }
  int const keep =
      static_cast<int>(std::min<long>(options.refined_candidates, points));
  std::partial_sort(ranked.begin(), ranked.begin() + keep, ranked.end(),
                    [](auto const& a, auto const& b) {
                      return a.first > b.first ||
                             (a.first == b.first && a.second < b.second);
                    });
  double best = ranked.front().first;
  std::vector<double> x(dims);
  std::vector<double> trial(dims);
  for (int cand = 0; cand < keep; ++cand) {
    long rest = ranked[cand].second;
    for (int j = dims - 1; j >= 0; --j) {
      x[j] = static_cast<double>(rest % n) / n;
      rest /= n;
    }
    double value = ranked[cand].first;
    double step = 0.5 / n;
    while (step >= options.step_tolerance) {
      // Coordinate search with a shrinking step.
      bool improved = true;
      while (improved) {
        improved = false;
        for (int j = 0; j < dims; ++j) {
          for (double const direction : {-1.0, 1.0}) {
            trial = x;
            trial[j] += direction * step;
            double const v =
                pointwise_norm(evaluate(compact, trial), weights);
            if (v > value) {
              value = v;
              x = trial;
              improved = true;
            }
          }
        }
      }
      step *= 0.5;
    }
    best = std::max(best, value);
  }
  return best;
}

bool finite_distance_check(VectorForm const& phi, double const tol,
                           SupNormOptions const& options) {
  int const d = phi.geometry().dimension();
  int band = 0;
  int const n = grid_size(phi, options, band);
  VectorForm const compact = phi.with_band(band);
  int const width = compact.component_count();
  auto const values = grid_values(compact.data(), 2 * d, band, width, n);
  long const points = static_cast<long>(values.size()) / width;
  Matrix sample(d, d);
  for (long pt = 0; pt < points; ++pt) {
    for (int c = 0; c < width; ++c) {
      sample(compact.vector_index_of(c),
             std::countr_zero(compact.anti_of(c))) =
          values[static_cast<std::size_t>(pt) * width + c];
    }
    Eigen::ComplexEigenSolver<Matrix> eigen(sample * sample.conjugate(),
                                            false);
    for (int i = 0; i < d; ++i) {
      if (std::abs(eigen.eigenvalues()(i) - Complex(1.0)) <= tol) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace hpl::torus
