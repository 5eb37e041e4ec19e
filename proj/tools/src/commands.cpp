#include "hpl/cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hpl/error.hpp"
#include "hpl/extension/solver.hpp"
#include "hpl/hodge/block_lu.hpp"
#include "hpl/parallel.hpp"
#include "hpl/period/theorems.hpp"

namespace hpl::cli {

namespace {

using nlohmann::ordered_json;
using Row = std::vector<std::string>;

period::BeltramiFamily const& require_family(RunConfig const& config) {
  if (!config.family) {
    throw Error(ErrorKind::usage, "config defines no family");
  }
  return *config.family;
}

std::vector<period::Parameter> require_grid(RunConfig const& config) {
  if (config.grid.empty()) {
    throw Error(ErrorKind::usage, "config defines no grid points");
  }
  return config.grid;
}

Row concat(Row head, Row const& tail) {
  head.insert(head.end(), tail.begin(), tail.end());
  return head;
}

Row header(std::initializer_list<std::string> before, int parameters,
           std::initializer_list<std::string> after) {
  return concat(concat(Row(before), parameter_header(parameters)),
                Row(after));
}

ordered_json family_json(period::BeltramiFamily const& family) {
  return {{"name", family.name()},
          {"dimension", family.geometry().dimension()},
          {"degree", family.degree()},
          {"parameters", family.parameter_count()},
          {"admissible_radius", family.admissible_radius()}};
}

ordered_json start_report(std::string const& command,
                          period::BeltramiFamily const& family,
                          RunConfig const& config) {
  ordered_json report;
  report["command"] = command;
  report["family"] = family_json(family);
  report["band"] = config.band;
  return report;
}

std::string status_of(bool ok) { return ok ? "pass" : "fail"; }

struct PointResult {
  std::vector<Row> rows;
  ordered_json summary;
  bool passed = true;
};

// Runs body over the grid in parallel and merges in grid order.
template <class Body>
std::vector<PointResult> over_grid(std::vector<period::Parameter> const& grid,
                                   Body const& body) {
  std::vector<PointResult> results(grid.size());
  parallel_for(grid.size(), [&](std::size_t i) {
    try {
      results[i] = body(static_cast<int>(i), grid[i]);
    } catch (Error const& e) {
      results[i] = PointResult{};
      results[i].passed = false;
      results[i].summary = {{"point", i},
                            {"t", parameter_json(grid[i])},
                            {"status", std::string(to_string(e.kind()))},
                            {"message", e.what()}};
    }
  });
  return results;
}

CommandOutput finish(std::string command, ordered_json report, CsvTable table,
                     std::vector<PointResult> const& results) {
  CommandOutput output{std::move(command), std::move(report), std::move(table),
                       true};
  auto points = ordered_json::array();
  for (auto const& result : results) {
    for (auto const& row : result.rows) {
      output.table.add_row(row);
    }
    points.push_back(result.summary);
    output.passed = output.passed && result.passed;
  }
  output.report["points"] = std::move(points);
  output.report["passed"] = output.passed;
  return output;
}

CommandOutput check_explicit(CheckInput const& input,
                             Tolerances const& tolerances) {
  hodge::HodgeType const type(input.hodge_numbers);
  int const m = type.dimension();
  if (input.frame.rows() != m || input.frame.cols() != m ||
      input.polarization.rows() != m || input.polarization.cols() != m) {
    throw Error(ErrorKind::usage,
                "frame, polarization and Hodge numbers have mismatched "
                "dimensions");
  }
  auto const q = hodge::Polarization::for_weight(input.polarization,
                                                 type.weight());
  hodge::HodgeFrame const frame(input.frame, type);
  double const first = hodge::first_bilinear_residual(frame, q);
  double weil = -std::numeric_limits<double>::infinity();
  std::string weil_status = "pass";
  try {
    weil = hodge::min_weil_eigenvalue(frame, q, tolerances.residual);
  } catch (Error const& e) {
    weil_status = std::string(to_string(e.kind()));
  }
  bool const orbit = hodge::in_unipotent_orbit(
      hodge::BlockMatrix(input.frame, type.partition()));
  bool const passed = first <= tolerances.residual &&
                      weil_status == "pass" && weil > tolerances.residual;
  CsvTable table(header({"point"}, 0,
                        {"first_relation", "min_weil_eigenvalue", "in_orbit",
                         "status"}));
  table.add_row({"input", format_double(first), format_double(weil),
                 orbit ? "1" : "0", status_of(passed)});
  ordered_json report;
  report["command"] = "check";
  report["source"] = "explicit";
  report["hodge_numbers"] = input.hodge_numbers;
  report["first_relation_residual"] = first;
  report["min_weil_eigenvalue"] = weil;
  report["weil_status"] = weil_status;
  report["in_orbit"] = orbit;
  report["passed"] = passed;
  return {"check", std::move(report), std::move(table), passed};
}

}  // namespace

CommandOutput cmd_check(RunConfig const& config) {
  if (config.check) {
    return check_explicit(*config.check, config.tolerances);
  }
  auto const& family = require_family(config);
  auto grid = config.grid;
  if (grid.empty()) {
    grid.emplace_back(family.parameter_count(), 0.0);
  }
  period::TorusHodgeStructure const structure(family.geometry_ptr(),
                                              family.degree());
  auto const& tolerances = config.tolerances;
  auto const results = over_grid(grid, [&](int i, period::Parameter const& t) {
    auto const frame = period::deformed_frame(family, t, structure);
    auto const real = structure.real_frame(frame.entries());
    double const first = hodge::first_bilinear_residual(
        real, structure.real_polarization());
    double const weil = hodge::min_weil_eigenvalue(
        real, structure.real_polarization(), tolerances.residual);
    bool const orbit = hodge::in_unipotent_orbit(frame);
    bool const passed =
        first <= tolerances.residual && weil > tolerances.residual && orbit;
    PointResult result;
    result.rows.push_back(concat(
        concat({std::to_string(i)}, parameter_cells(t)),
        {format_double(first), format_double(weil), orbit ? "1" : "0",
         status_of(passed)}));
    result.summary = {{"point", i},
                      {"t", parameter_json(t)},
                      {"first_relation_residual", first},
                      {"min_weil_eigenvalue", weil},
                      {"in_orbit", orbit},
                      {"status", status_of(passed)}};
    result.passed = passed;
    return result;
  });
  CsvTable table(header({"point"}, family.parameter_count(),
                        {"first_relation", "min_weil_eigenvalue", "in_orbit",
                         "status"}));
  auto report = start_report("check", family, config);
  report["source"] = "family";
  return finish("check", std::move(report), std::move(table), results);
}

CommandOutput cmd_extend(RunConfig const& config) {
  auto const& family = require_family(config);
  auto const grid = require_grid(config);
  period::TorusHodgeStructure const structure(family.geometry_ptr(),
                                              family.degree());
  auto const& basis = structure.basis();
  auto const& tolerances = config.tolerances;
  int const band = config.band;
  auto const results = over_grid(grid, [&](int i, period::Parameter const& t) {
    PointResult result;
    result.summary = {{"point", i}, {"t", parameter_json(t)}};
    auto const phi = family.at(t);
    double worst = 0.0;
    std::string point_status = "pass";
    for (int k = 0; k < basis.dimension(); ++k) {
      int group = 0;
      while (group + 1 < static_cast<int>(basis.hodge_numbers().size()) &&
             k >= basis.group_offset(group + 1)) {
        ++group;
      }
      Row row = concat(concat({std::to_string(i)}, parameter_cells(t)),
                       {std::to_string(k), std::to_string(group)});
      try {
        extension::ExtensionProblem const problem(
            basis.form(k, band), phi, band,
            {.tolerance = tolerances.solver});
        auto const s = extension::solve_extension(problem);
        bool const ok =
            s.fixed_point_residual <= tolerances.residual &&
            s.obstruction_residual_partial <= tolerances.residual &&
            s.obstruction_residual_dbar <= tolerances.residual &&
            s.d_closed_residual <=
                tolerances.residual + s.truncation_residual;
        worst = std::max({worst, s.fixed_point_residual,
                          s.obstruction_residual_partial,
                          s.obstruction_residual_dbar});
        if (!ok) {
          point_status = "fail";
        }
        result.rows.push_back(concat(
            row, {status_of(ok), std::to_string(s.iterations),
                  format_double(s.fixed_point_residual),
                  format_double(s.obstruction_residual_partial),
                  format_double(s.obstruction_residual_dbar),
                  format_double(s.d_closed_residual),
                  format_double(s.truncation_residual)}));
        result.passed = result.passed && ok;
      } catch (Error const& e) {
        point_status = std::string(to_string(e.kind()));
        result.passed = false;
        result.rows.push_back(
            concat(row, {point_status, "", "", "", "", "", ""}));
      }
    }
    result.summary["max_residual"] = worst;
    result.summary["status"] = point_status;
    return result;
  });
  CsvTable table(header({"point"}, family.parameter_count(),
                        {"basis_index", "group", "status", "iterations",
                         "fixed_point", "obstruction_partial",
                         "obstruction_dbar", "d_closed", "truncation"}));
  auto report = start_report("extend", family, config);
  report["solver_tolerance"] = tolerances.solver;
  return finish("extend", std::move(report), std::move(table), results);
}

CommandOutput cmd_periods(RunConfig const& config) {
  auto const& family = require_family(config);
  auto const grid = require_grid(config);
  period::TorusHodgeStructure const structure(family.geometry_ptr(),
                                              family.degree());
  auto const results = over_grid(grid, [&](int i, period::Parameter const& t) {
    auto const point = period::oracle_period(family, t, structure);
    PointResult result;
    Row const prefix = concat({std::to_string(i)}, parameter_cells(t));
    int const blocks = point.matrix.block_count();
    for (int p = 0; p < blocks; ++p) {
      for (int q = p + 1; q < blocks; ++q) {
        Matrix const block = point.block(p, q);
        for (Eigen::Index r = 0; r < block.rows(); ++r) {
          for (Eigen::Index c = 0; c < block.cols(); ++c) {
            result.rows.push_back(concat(
                prefix, {std::to_string(p), std::to_string(q),
                         std::to_string(r), std::to_string(c),
                         format_double(block(r, c).real()),
                         format_double(block(r, c).imag())}));
          }
        }
      }
    }
    result.summary = {{"point", i},
                      {"t", parameter_json(t)},
                      {"first_relation_residual", point.first_relation_residual},
                      {"in_orbit", true},
                      {"status", "pass"}};
    return result;
  });
  CsvTable table(header({"point"}, family.parameter_count(),
                        {"block_row", "block_col", "i", "j", "re", "im"}));
  auto report = start_report("periods", family, config);
  report["hodge_numbers"] = structure.basis().hodge_numbers();
  return finish("periods", std::move(report), std::move(table), results);
}

CommandOutput cmd_compare(RunConfig const& config) {
  auto const& family = require_family(config);
  auto const grid = require_grid(config);
  period::TorusHodgeStructure const structure(family.geometry_ptr(),
                                              family.degree());
  auto const& tolerances = config.tolerances;
  double const h = tolerances.step;
  bool const exact = family.is_constant();
  auto const results = over_grid(grid, [&](int i, period::Parameter const& t) {
    PointResult result;
    double coincidence = std::numeric_limits<double>::quiet_NaN();
    if (exact) {
      coincidence = period::compare_sections(family, t, structure, config.band,
                                             {.tolerance = tolerances.solver});
    }
    bool const coincide = !exact || coincidence <= tolerances.compare;
    result.passed = coincide;
    auto per_direction = ordered_json::array();
    for (int mu = 0; mu < family.parameter_count(); ++mu) {
      double const full =
          period::derivative_relation_residual(family, t, mu, h, structure);
      double const half =
          period::derivative_relation_residual(family, t, mu, h / 2, structure);
      // Residuals at the roundoff floor count as converged.
      bool const converges = half <= std::max(full / 3.5, 1e-12);
      bool const ok = coincide && full <= tolerances.compare && converges;
      result.passed = result.passed && ok;
      result.rows.push_back(concat(
          concat({std::to_string(i)}, parameter_cells(t)),
          {std::to_string(mu + 1),
           exact ? format_double(coincidence) : "unsupported",
           format_double(full), format_double(half),
           format_double(half > 0.0 ? full / half
                                    : std::numeric_limits<double>::quiet_NaN()),
           status_of(ok)}));
      per_direction.push_back(
          {{"mu", mu + 1}, {"residual_h", full}, {"residual_half", half}});
    }
    result.summary = {{"point", i}, {"t", parameter_json(t)}};
    if (exact) {
      result.summary["section_difference"] = coincidence;
    } else {
      result.summary["section_difference"] = "unsupported";
    }
    result.summary["derivative_relation"] = std::move(per_direction);
    result.summary["status"] = status_of(result.passed);
    return result;
  });
  CsvTable table(header({"point"}, family.parameter_count(),
                        {"mu", "section_difference", "residual_h",
                         "residual_half", "ratio", "status"}));
  auto report = start_report("compare", family, config);
  report["step"] = h;
  report["sections_asserted"] = exact;
  return finish("compare", std::move(report), std::move(table), results);
}

CommandOutput cmd_affine(RunConfig const& config) {
  auto const& family = require_family(config);
  auto const grid = require_grid(config);
  period::TorusHodgeStructure const structure(family.geometry_ptr(),
                                              family.degree());
  int const n = family.parameter_count();
  int const expected = config.expected_rank.value_or(n);
  double const h = config.tolerances.step;
  Eigen::Index psi_size = 0;
  if (structure.hodge_type().weight() >= 1) {
    psi_size = static_cast<Eigen::Index>(structure.basis().group_size(0)) *
               structure.basis().group_size(1);
  }
  auto const results = over_grid(grid, [&](int i, period::Parameter const& t) {
    Vector const psi = period::affine_map(family, t, structure);
    auto const jacobian = period::affine_jacobian_rank(family, t, h, structure);
    bool const ok = jacobian.rank == expected;
    Row row = concat(concat({std::to_string(i)}, parameter_cells(t)),
                     {std::to_string(jacobian.rank), std::to_string(expected)});
    auto singular = ordered_json::array();
    for (int k = 0; k < n; ++k) {
      double const s =
          k < jacobian.singular_values.size() ? jacobian.singular_values(k)
                                              : 0.0;
      row.push_back(format_double(s));
      singular.push_back(s);
    }
    for (Eigen::Index k = 0; k < psi.size(); ++k) {
      row.push_back(format_double(psi(k).real()));
      row.push_back(format_double(psi(k).imag()));
    }
    row.push_back(status_of(ok));
    PointResult result;
    result.rows.push_back(std::move(row));
    result.summary = {{"point", i},
                      {"t", parameter_json(t)},
                      {"rank", jacobian.rank},
                      {"singular_values", std::move(singular)},
                      {"status", status_of(ok)}};
    result.passed = ok;
    return result;
  });
  Row columns = header({"point"}, n, {"rank", "expected_rank"});
  for (int k = 1; k <= n; ++k) {
    columns.push_back("sv" + std::to_string(k));
  }
  for (Eigen::Index k = 1; k <= psi_size; ++k) {
    columns.push_back("psi" + std::to_string(k) + "_re");
    columns.push_back("psi" + std::to_string(k) + "_im");
  }
  columns.push_back("status");
  auto report = start_report("affine", family, config);
  report["expected_rank"] = expected;
  return finish("affine", std::move(report), CsvTable(std::move(columns)),
                results);
}

}  // namespace hpl::cli
