#include "hpl/cli/verify.hpp"

#include <Eigen/LU>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

#include "hpl/error.hpp"
#include "hpl/extension/sections.hpp"
#include "hpl/hodge/block_lu.hpp"
#include "hpl/parallel.hpp"
#include "hpl/period/theorems.hpp"
#include "hpl/torus/contraction.hpp"
#include "hpl/torus/operators.hpp"
#include "hpl/torus/pointwise.hpp"

namespace hpl::cli {

namespace {

using torus::Bidegree;
using torus::FourierForm;
using torus::GeometryPtr;
using torus::VectorForm;

std::mt19937_64 sample_rng(std::uint64_t property, std::size_t index) {
  std::seed_seq seed{property, static_cast<std::uint64_t>(index)};
  return std::mt19937_64(seed);
}

Complex gaussian(std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  double const re = normal(rng);
  return {re, normal(rng)};
}

Matrix gaussian_matrix(std::mt19937_64& rng, int rows, int cols) {
  Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      m(i, j) = gaussian(rng);
    }
  }
  return m;
}

GeometryPtr skewed_geometry(std::mt19937_64& rng, int d) {
  std::uniform_real_distribution<double> uniform(-0.3, 0.3);
  Matrix tau(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      double const re = uniform(rng);
      tau(i, j) = Complex(re, (i == j ? 1.0 : 0.0) + 0.2 * uniform(rng));
    }
  }
  Matrix const a = 0.3 * gaussian_matrix(rng, d, d);
  return torus::TorusGeometry::create(
      tau, Matrix::Identity(d, d) + a.adjoint() * a);
}

FourierForm unit_form(std::mt19937_64& rng, GeometryPtr const& geometry,
                      Bidegree b, int band) {
  FourierForm f(geometry, b, band);
  for (int mode = 0; mode < f.mode_count(); ++mode) {
    double const scale = 1.0 / (1.0 + f.lattice().max_abs(mode));
    for (auto& c : f.mode_coefficients(mode)) {
      c = scale * gaussian(rng);
    }
  }
  f *= Complex(1.0 / norm(f));
  return f;
}

VectorForm scaled_field(std::mt19937_64& rng, GeometryPtr const& geometry,
                        int band, double sup) {
  VectorForm phi(geometry, 1, band);
  for (auto& c : phi.data()) {
    c = gaussian(rng);
  }
  phi *= Complex(sup / torus::sup_operator_norm(phi));
  return phi;
}

// φ = [[a, 0], [b + f(z1), c]] on the square 2-torus: integrable with
// non-constant coefficients.
VectorForm triangular_field(std::mt19937_64& rng, GeometryPtr const& geometry,
                            double sup) {
  Matrix m = gaussian_matrix(rng, 2, 2);
  m(0, 1) = 0.0;
  VectorForm phi = VectorForm::constant(geometry, m, 1);
  for (int mode = 0; mode < phi.mode_count(); ++mode) {
    auto const k = phi.lattice().mode(mode);
    if (phi.lattice().max_abs(mode) > 0 && k[1] == 0 && k[3] == 0) {
      phi.at(mode, phi.component(1, 1u)) = 0.3 * gaussian(rng);
    }
  }
  phi *= Complex(sup / torus::sup_operator_norm(phi));
  return phi;
}

// Max over samples of a residual computed independently per sample.
template <class Body>
PropertyResult measure(std::string module, std::string property, int samples,
                       double threshold, std::uint64_t seed,
                       Body const& body) {
  std::vector<double> values(static_cast<std::size_t>(samples), 0.0);
  parallel_for(values.size(), [&](std::size_t i) {
    auto rng = sample_rng(seed, i);
    values[i] = body(rng, static_cast<int>(i));
  });
  double worst = 0.0;
  for (double const v : values) {
    worst = std::isnan(v) ? v : std::max(worst, v);
    if (std::isnan(worst)) {
      break;
    }
  }
  return {std::move(module), std::move(property), samples,
          std::isnan(worst) ? std::numeric_limits<double>::infinity() : worst,
          threshold};
}

Bidegree random_bidegree(std::mt19937_64& rng, int d) {
  std::uniform_int_distribution<int> degree(0, d);
  return {degree(rng), degree(rng)};
}

void hodge_properties(std::vector<PropertyResult>& out) {
  auto const random_type = [](std::mt19937_64& rng) {
    std::uniform_int_distribution<int> weight(1, 3);
    std::uniform_int_distribution<int> size(1, 3);
    std::vector<int> numbers(static_cast<std::size_t>(weight(rng)) + 1);
    for (auto& h : numbers) {
      h = size(rng);
    }
    return hodge::HodgeType(numbers);
  };
  out.push_back(measure(
      "hodge-algebra", "block_lu_reconstruction", 100, 1e-10, 101,
      [&](std::mt19937_64& rng, int) {
        auto const type = random_type(rng);
        int const m = type.dimension();
        hodge::BlockMatrix const a(gaussian_matrix(rng, m, m),
                                   type.partition());
        auto const outcome = hodge::block_lu(a);
        if (!outcome.ok()) {
          return 0.0;
        }
        auto const& f = *outcome.factors;
        return max_norm((f.u * f.l).entries() - a.entries()) /
               max_norm(a.entries());
      }));
  out.push_back(measure(
      "hodge-algebra", "block_lu_factor_shapes", 100, 0.0, 102,
      [&](std::mt19937_64& rng, int) {
        auto const type = random_type(rng);
        int const m = type.dimension();
        hodge::BlockMatrix const a(gaussian_matrix(rng, m, m),
                                   type.partition());
        auto const outcome = hodge::block_lu(a);
        if (!outcome.ok()) {
          return 0.0;
        }
        bool const shapes =
            outcome.factors->l.is_block_upper_unipotent(0.0) &&
            outcome.factors->u.is_block_lower_triangular(0.0);
        return shapes ? 0.0 : 1.0;
      }));
  out.push_back(measure(
      "hodge-algebra", "leading_minor_agreement", 200, 0.0, 103,
      [&](std::mt19937_64& rng, int i) {
        auto const type = random_type(rng);
        auto const partition = type.partition();
        int const m = type.dimension();
        Matrix entries = gaussian_matrix(rng, m, m);
        if (i % 2 == 1) {
          // Make the leading block sub-matrix up to a random block singular.
          std::uniform_int_distribution<int> pick(0,
                                                  partition.block_count() - 1);
          int const end = partition.offset(pick(rng) + 1);
          entries.block(0, 0, 1, end) =
              entries.block(1 % m, 0, 1, end) * gaussian(rng);
          if (end == 1) {
            entries(0, 0) = 0.0;
          }
        }
        hodge::BlockMatrix const a(entries, partition);
        bool oracle = true;
        for (int k = 0; k < partition.block_count(); ++k) {
          int const size = partition.offset(k + 1);
          Matrix const lead = entries.topLeftCorner(size, size);
          Eigen::FullPivLU<Matrix> lu(lead / max_norm(lead));
          lu.setThreshold(1e-10);
          oracle = oracle && lu.rank() == size;
        }
        return hodge::block_lu(a).ok() == oracle ? 0.0 : 1.0;
      }));
}

void torus_properties(std::vector<PropertyResult>& out, int band,
                      VerifyOptions const& options) {
  auto const geometry_for = [](std::mt19937_64& rng, int i) {
    return skewed_geometry(rng, i % 3 == 0 ? 1 : 2);
  };
  std::string const module = "torus-dolbeault";
  out.push_back(measure(module, "dbar_squared", 20, 1e-10, 201,
                        [&](std::mt19937_64& rng, int i) {
                          auto const g = geometry_for(rng, i);
                          int const d = g->dimension();
                          if (d < 2) {
                            return 0.0;
                          }
                          std::uniform_int_distribution<int> p(0, d);
                          std::uniform_int_distribution<int> q(0, d - 2);
                          auto const f = unit_form(rng, g, {p(rng), q(rng)}, band);
                          return norm(torus::dbar(torus::dbar(f)));
                        }));
  out.push_back(measure(module, "partial_squared", 20, 1e-10, 202,
                        [&](std::mt19937_64& rng, int i) {
                          auto const g = geometry_for(rng, i);
                          int const d = g->dimension();
                          if (d < 2) {
                            return 0.0;
                          }
                          std::uniform_int_distribution<int> q(0, d);
                          auto const f = unit_form(rng, g, {0, q(rng)}, band);
                          return norm(torus::partial(torus::partial(f)));
                        }));
  out.push_back(measure(
      module, "green_identity", 20, 1e-10, 203,
      [&](std::mt19937_64& rng, int i) {
        auto const g = geometry_for(rng, i);
        auto const f = unit_form(rng, g, random_bidegree(rng, g->dimension()),
                                 band);
        return norm(torus::laplacian_dbar(torus::green(f)) - f +
                    torus::harmonic_projection(f));
      }));
  out.push_back(measure(
      module, "kahler_equality", 20, 1e-10, 204,
      [&](std::mt19937_64& rng, int i) {
        auto const g = geometry_for(rng, i);
        auto const f = unit_form(rng, g, random_bidegree(rng, g->dimension()),
                                 band);
        return norm(torus::laplacian_dbar(f) - torus::laplacian_partial(f));
      }));
  out.push_back(measure(
      module, "adjoint_dbar", 20, 1e-10, 205,
      [&](std::mt19937_64& rng, int i) {
        auto const g = geometry_for(rng, i);
        int const d = g->dimension();
        std::uniform_int_distribution<int> p(0, d);
        std::uniform_int_distribution<int> q(0, d - 1);
        Bidegree const b{p(rng), q(rng)};
        auto const f = unit_form(rng, g, b, band);
        auto const h = unit_form(rng, g, {b.p, b.q + 1}, band);
        FourierForm adjoint = torus::adjoint_dbar(h);
        if (options.break_adjoint) {
          adjoint *= Complex(1.0 + 1e-3);
        }
        return std::abs(inner(torus::dbar(f), h) - inner(f, adjoint));
      }));
  out.push_back(measure(
      module, "adjoint_partial", 20, 1e-10, 206,
      [&](std::mt19937_64& rng, int i) {
        auto const g = geometry_for(rng, i);
        int const d = g->dimension();
        std::uniform_int_distribution<int> p(0, d - 1);
        std::uniform_int_distribution<int> q(0, d);
        Bidegree const b{p(rng), q(rng)};
        auto const f = unit_form(rng, g, b, band);
        auto const h = unit_form(rng, g, {b.p + 1, b.q}, band);
        return std::abs(inner(torus::partial(f), h) -
                        inner(f, torus::adjoint_partial(h)));
      }));
  out.push_back(measure(
      module, "quasi_isometry", 20, 1e-10, 207,
      [&](std::mt19937_64& rng, int i) {
        auto const g = geometry_for(rng, i);
        int const d = g->dimension();
        auto const f = unit_form(rng, g, random_bidegree(rng, d), band);
        auto const [p, q] = f.bidegree();
        double const t = norm(torus::t_operator(f));
        double energy = 1.0 - std::pow(norm(torus::harmonic_projection(f)), 2);
        if (p > 0) {
          energy -= std::pow(
              norm(torus::partial(torus::adjoint_partial(torus::green(f)))),
              2);
        }
        if (p < d && q < d) {
          energy -=
              std::pow(norm(torus::dbar(torus::green(torus::partial(f)))), 2);
        }
        return std::abs(t * t - energy);
      }));
  out.push_back(measure(
      module, "t_norm_bound", 20, 0.0, 208, [&](std::mt19937_64& rng, int i) {
        auto const g = geometry_for(rng, i);
        auto const f = unit_form(rng, g, random_bidegree(rng, g->dimension()),
                                 band);
        return norm(torus::t_operator(f)) > 1.0 + 1e-12 ? 1.0 : 0.0;
      }));
  out.push_back(measure(
      module, "conjugation_formula", 10, 1e-8, 209,
      [&](std::mt19937_64& rng, int i) {
        auto const g = geometry_for(rng, i);
        auto const phi = scaled_field(rng, g, 1, 0.5);
        auto const f = unit_form(rng, g, random_bidegree(rng, g->dimension()),
                                 std::min(band, 2));
        return torus::conjugation_residual(phi, f);
      }));
  out.push_back(measure(
      module, "generalized_cartan", 10, 1e-8, 210,
      [&](std::mt19937_64& rng, int i) {
        auto const g = geometry_for(rng, i);
        auto const phi = scaled_field(rng, g, 1, 0.5);
        auto const f = unit_form(rng, g, random_bidegree(rng, g->dimension()),
                                 std::min(band, 2));
        return torus::generalized_cartan_residual(phi, f);
      }));
}

void extension_properties(std::vector<PropertyResult>& out, int band,
                          double tolerance) {
  struct Outcome {
    double fixed_point = 0.0;
    double obstruction_partial = 0.0;
    double obstruction_dbar = 0.0;
    double d_closed_excess = 0.0;
    double neumann = 0.0;
    double dense = 0.0;
  };
  int const samples = 8;
  std::vector<Outcome> outcomes(samples);
  parallel_for(samples, [&](std::size_t i) {
    auto rng = sample_rng(301, i);
    bool const flat = i % 2 == 0;
    GeometryPtr const g =
        flat ? skewed_geometry(rng, 1) : torus::TorusGeometry::square(2);
    VectorForm const phi =
        flat ? scaled_field(rng, g, 1, 0.5) : triangular_field(rng, g, 0.5);
    torus::PrimitiveBasis const basis(g, g->dimension());
    std::uniform_int_distribution<int> pick(0, basis.dimension() - 1);
    int const solve_band = flat ? band : std::min(band, 2);
    extension::ExtensionProblem const problem(
        basis.form(pick(rng), solve_band), phi, solve_band,
        {.tolerance = tolerance});
    auto const s = extension::solve_extension(problem);
    Outcome& o = outcomes[i];
    o.fixed_point = s.fixed_point_residual;
    o.obstruction_partial = s.obstruction_residual_partial;
    o.obstruction_dbar = s.obstruction_residual_dbar;
    o.d_closed_excess = std::max(0.0, s.d_closed_residual - s.truncation_residual);
    o.neumann = norm(extension::neumann_partial_sum(problem, 200) - s.sigma);
    if (flat) {
      o.dense = norm(extension::dense_extension_solve(problem) - s.sigma);
    }
  });
  auto const worst = [&](double Outcome::*field) {
    double w = 0.0;
    for (auto const& o : outcomes) {
      w = std::max(w, o.*field);
    }
    return w;
  };
  std::string const module = "extension-solver";
  out.push_back({module, "fixed_point", samples, worst(&Outcome::fixed_point),
                 1e-10});
  out.push_back({module, "obstruction_partial", samples,
                 worst(&Outcome::obstruction_partial), 1e-8});
  out.push_back({module, "obstruction_dbar", samples,
                 worst(&Outcome::obstruction_dbar), 1e-8});
  out.push_back({module, "d_closed_beyond_truncation", samples,
                 worst(&Outcome::d_closed_excess), 1e-8});
  out.push_back({module, "neumann_agreement", samples,
                 worst(&Outcome::neumann), 1e-9});
  out.push_back({module, "dense_agreement", samples / 2,
                 worst(&Outcome::dense), 1e-9});
  out.push_back(measure(
      module, "exp_contraction_wedge", 5, 1e-14, 302,
      [&](std::mt19937_64& rng, int) {
        auto const g = torus::TorusGeometry::square(2);
        Complex const t1 = 0.3 * gaussian(rng);
        Complex const t2 = 0.3 * gaussian(rng);
        Matrix m = Matrix::Zero(2, 2);
        m(0, 0) = t1;
        m(1, 1) = t2;
        FourierForm f(g, {2, 0}, 0);
        std::array<int, 4> const zero{};
        f.set_coefficient(zero, 3u, 0u, 1.0);
        auto const e = torus::exp_contraction(VectorForm::constant(g, m), f);
        // (dz1 + t1 dz̄1) ∧ (dz2 + t2 dz̄2).
        struct Term {
          Bidegree b;
          torus::Mask holo, anti;
          Complex value;
        };
        std::array<Term, 6> const expected{{{{2, 0}, 3u, 0u, 1.0},
                                            {{1, 1}, 1u, 2u, t2},
                                            {{1, 1}, 2u, 1u, -t1},
                                            {{1, 1}, 1u, 1u, 0.0},
                                            {{1, 1}, 2u, 2u, 0.0},
                                            {{0, 2}, 0u, 3u, t1 * t2}}};
        double diff = 0.0;
        for (auto const& term : expected) {
          auto const* piece = e.piece(term.b);
          Complex const got =
              piece ? piece->coefficient(zero, term.holo, term.anti) : 0.0;
          diff = std::max(diff, std::abs(got - term.value));
        }
        return diff;
      }));
}

std::vector<period::Parameter> sample_points(period::BeltramiFamily const& f,
                                             std::uint64_t seed, int count) {
  std::vector<period::Parameter> points;
  auto rng = sample_rng(seed, 0);
  std::uniform_real_distribution<double> fraction(0.05, 0.8);
  for (int i = 0; i < count; ++i) {
    period::Parameter t(f.parameter_count());
    double length = 0.0;
    for (auto& v : t) {
      v = gaussian(rng);
      length += std::norm(v);
    }
    double const r = fraction(rng) * f.admissible_radius() / std::sqrt(length);
    for (auto& v : t) {
      v *= r;
    }
    points.push_back(std::move(t));
  }
  return points;
}

void period_properties(std::vector<PropertyResult>& out,
                       period::BeltramiFamily const& family,
                       std::optional<int> expected_rank, int band,
                       RunConfig const& config) {
  std::string const module = "period-lab";
  std::string const tag = family.name() + ".";
  period::TorusHodgeStructure const structure(family.geometry_ptr(),
                                              family.degree());
  auto const points = sample_points(family, 401, 5);
  int const count = static_cast<int>(points.size());
  double const h = config.tolerances.step;
  auto const each = [&](std::string name, double threshold, auto const& body) {
    out.push_back(measure(module, tag + name, count, threshold, 402,
                          [&](std::mt19937_64&, int i) {
                            return body(points[static_cast<std::size_t>(i)]);
                          }));
  };
  out.push_back(measure(
      module, tag + "maurer_cartan", count, 1e-10, 403,
      [&](std::mt19937_64&, int i) {
        return torus::maurer_cartan_residual(family.at(points[i]));
      }));
  out.push_back(measure(
      module, tag + "finite_distance", count, 0.0, 404,
      [&](std::mt19937_64&, int i) {
        return torus::finite_distance_check(family.at(points[i])) ? 0.0 : 1.0;
      }));
  if (!family.is_constant()) {
    return;
  }
  each("orbit_containment", 0.0, [&](period::Parameter const& t) {
    return hodge::in_unipotent_orbit(
               period::deformed_frame(family, t, structure))
               ? 0.0
               : 1.0;
  });
  each("deformed_first_relation", 1e-10, [&](period::Parameter const& t) {
    auto const frame = period::deformed_frame(family, t, structure);
    return hodge::first_bilinear_residual(
        structure.real_frame(frame.entries()), structure.real_polarization());
  });
  each("deformed_second_relation", 0.0, [&](period::Parameter const& t) {
    auto const frame = period::deformed_frame(family, t, structure);
    return hodge::check_second_bilinear_relation(
               structure.real_frame(frame.entries()),
               structure.real_polarization(), 1e-8)
               ? 0.0
               : 1.0;
  });
  each("section_coincidence", config.tolerances.compare,
       [&](period::Parameter const& t) {
         return period::compare_sections(family, t, structure, band,
                                         {.tolerance = config.tolerances.solver});
       });
  each("section_normalization", 0.0, [&](period::Parameter const& t) {
    auto const lie = period::lie_sections(period::oracle_period(family, t, structure));
    auto const deformation = period::deformation_sections(
        family, t, structure, band, {.tolerance = config.tolerances.solver});
    auto const& partition = structure.hodge_type().partition();
    double worst = 0.0;
    for (int p = 0; p < partition.block_count(); ++p) {
      Matrix const id = Matrix::Identity(partition.size(p), partition.size(p));
      for (auto const* table : {&lie, &deformation}) {
        worst = std::max(
            worst, max_norm(table->rows[p].middleCols(partition.offset(p),
                                                      partition.size(p)) -
                            id));
      }
    }
    return worst;
  });
  each("derivative_relation", config.tolerances.compare,
       [&](period::Parameter const& t) {
         double worst = 0.0;
         for (int mu = 0; mu < family.parameter_count(); ++mu) {
           worst = std::max(worst, period::derivative_relation_residual(
                                       family, t, mu, h, structure));
         }
         return worst;
       });
  each("derivative_convergence", 0.0, [&](period::Parameter const& t) {
    double failures = 0.0;
    for (int mu = 0; mu < family.parameter_count(); ++mu) {
      double const full =
          period::derivative_relation_residual(family, t, mu, h, structure);
      double const half =
          period::derivative_relation_residual(family, t, mu, h / 2, structure);
      if (half > std::max(full / 3.5, 1e-12)) {
        failures += 1.0;
      }
    }
    return failures;
  });
  each("horizontality", 0.0, [&](period::Parameter const& t) {
    auto const blocks = period::differential_blocks(family, t, h, structure);
    double failures = 0.0;
    for (std::size_t mu = 0; mu < blocks.tangents.size(); ++mu) {
      if (!hodge::is_horizontal(blocks.tangents[mu], 0.0) ||
          !hodge::is_horizontal(blocks.logarithmic[mu], 1e-6)) {
        failures += 1.0;
      }
    }
    return failures;
  });
  int const expected = expected_rank.value_or(family.parameter_count());
  each("affine_rank", 0.0, [&](period::Parameter const& t) {
    return std::abs(
        period::affine_jacobian_rank(family, t, h, structure).rank - expected);
  });
}

}  // namespace

RunConfig default_verify_config() {
  RunConfig config;
  config.presets = {"elliptic", "abelian-diagonal", "abelian-full"};
  return config;
}

std::vector<PropertyResult> run_property_suite(RunConfig const& config,
                                               VerifyOptions const& options) {
  if (!config.family && config.presets.empty()) {
    throw Error(ErrorKind::usage, "config names no family or presets");
  }
  if (config.band < 1) {
    throw Error(ErrorKind::usage, "band K must be at least 1");
  }
  int const band = std::min(config.band, 4);
  std::vector<PropertyResult> results;
  hodge_properties(results);
  torus_properties(results, std::min(band, 2), options);
  extension_properties(results, band, config.tolerances.solver);
  if (config.family) {
    period_properties(results, *config.family, config.expected_rank, band,
                      config);
  } else {
    for (auto const& name : config.presets) {
      std::optional<int> expected;
      if (name == "abelian-degenerate") {
        expected = 1;
      }
      period_properties(results, period::preset(name), expected, band, config);
    }
  }
  return results;
}

std::string format_table(std::vector<PropertyResult> const& results) {
  std::size_t module_width = 6;
  std::size_t property_width = 8;
  for (auto const& r : results) {
    module_width = std::max(module_width, r.module.size());
    property_width = std::max(property_width, r.property.size());
  }
  std::ostringstream out;
  char line[512];
  std::snprintf(line, sizeof line, "%-*s  %-*s  %7s  %12s  %12s  %s\n",
                static_cast<int>(module_width), "module",
                static_cast<int>(property_width), "property", "samples",
                "max_residual", "threshold", "status");
  out << line;
  for (auto const& r : results) {
    std::snprintf(line, sizeof line, "%-*s  %-*s  %7d  %12.3e  %12.3e  %s\n",
                  static_cast<int>(module_width), r.module.c_str(),
                  static_cast<int>(property_width), r.property.c_str(),
                  r.samples, r.max_residual, r.threshold,
                  r.passed() ? "pass" : "FAIL");
    out << line;
  }
  return out.str();
}

CommandOutput cmd_verify(RunConfig const& config,
                         VerifyOptions const& options) {
  return verify_report(run_property_suite(config, options), config, options);
}

CommandOutput verify_report(std::vector<PropertyResult> const& results,
                            RunConfig const& config,
                            VerifyOptions const& options) {
  CommandOutput output{"verify", {}, CsvTable({"module", "property", "samples",
                                               "max_residual", "threshold",
                                               "status"}),
                       true};
  auto properties = nlohmann::ordered_json::array();
  for (auto const& r : results) {
    output.table.add_row({r.module, r.property, std::to_string(r.samples),
                          format_double(r.max_residual),
                          format_double(r.threshold),
                          r.passed() ? "pass" : "fail"});
    properties.push_back({{"module", r.module},
                          {"property", r.property},
                          {"samples", r.samples},
                          {"max_residual", r.max_residual},
                          {"threshold", r.threshold},
                          {"status", r.passed() ? "pass" : "fail"}});
    output.passed = output.passed && r.passed();
  }
  output.report["command"] = "verify";
  output.report["band"] = config.band;
  output.report["break_adjoint"] = options.break_adjoint;
  output.report["properties"] = std::move(properties);
  output.report["passed"] = output.passed;
  return output;
}

}  // namespace hpl::cli
