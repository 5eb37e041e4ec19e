#include <cstdio>
#include <iostream>

#include "CLI11.hpp"
#include "hpl/cli/commands.hpp"
#include "hpl/cli/verify.hpp"
#include "hpl/error.hpp"

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitError = 3;

struct Overrides {
  std::string config;
  std::string out;
  std::string grid;
  int band = 0;
  double tol = 0.0;
  bool allow_boundary = false;
  bool break_adjoint = false;
};

hpl::cli::RunConfig resolve(Overrides const& o, bool verify) {
  hpl::cli::RunConfig config;
  if (!o.config.empty()) {
    config = hpl::cli::load_config(o.config);
  } else if (verify) {
    config = hpl::cli::default_verify_config();
  } else {
    throw hpl::Error(hpl::ErrorKind::usage, "--config is required");
  }
  if (!o.out.empty()) {
    config.output = o.out;
  }
  if (!o.grid.empty()) {
    config.grid = hpl::cli::parse_grid(o.grid);
  }
  if (o.band != 0) {
    config.band = o.band;
  }
  if (o.tol > 0.0) {
    config.tolerances.solver = o.tol;
  }
  config.allow_boundary = config.allow_boundary || o.allow_boundary;
  hpl::cli::validate(config);
  return config;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Period maps of deformed complex tori: checks and reports."};
  app.require_subcommand(1);
  Overrides o;
  auto add_common = [&o](CLI::App* sub) {
    sub->add_option("--config", o.config, "JSON run configuration");
    sub->add_option("--out", o.out,
                    "output directory for report.json and the CSV "
                    "(default: config \"output\", else .)");
    sub->add_option("--grid", o.grid,
                    "parameter points: ';' between points, ',' between "
                    "components, re:im for complex values");
    sub->add_option("--band", o.band, "truncation band K >= 1 (default 2)");
    sub->add_option("--tol", o.tol,
                    "fixed-point stopping tolerance (default 1e-10)");
    sub->add_flag("--allow-boundary", o.allow_boundary,
                  "accept grid points outside the admissible radius");
  };
  struct Command {
    char const* name;
    char const* help;
    hpl::cli::CommandOutput (*run)(hpl::cli::RunConfig const&);
  };
  Command const commands[] = {
      {"check", "Hodge-Riemann relations and orbit membership",
       hpl::cli::cmd_check},
      {"extend", "solve the extension equation over the grid",
       hpl::cli::cmd_extend},
      {"periods", "period matrix blocks over the grid", hpl::cli::cmd_periods},
      {"compare", "section coincidence and derivative relation",
       hpl::cli::cmd_compare},
      {"affine", "affine map values and Jacobian ranks",
       hpl::cli::cmd_affine},
  };
  std::vector<std::pair<CLI::App*, Command const*>> subcommands;
  for (auto const& command : commands) {
    auto* sub = app.add_subcommand(command.name, command.help);
    add_common(sub);
    subcommands.emplace_back(sub, &command);
  }
  auto* verify = app.add_subcommand(
      "verify", "run the property suite (default presets without --config)");
  add_common(verify);
  verify->add_flag("--break-adjoint", o.break_adjoint,
                   "test hook: perturb the adjoint inside its check");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    hpl::cli::CommandOutput output;
    if (verify->parsed()) {
      auto const config = resolve(o, true);
      hpl::cli::VerifyOptions const options{.break_adjoint = o.break_adjoint};
      auto const results = hpl::cli::run_property_suite(config, options);
      output = hpl::cli::verify_report(results, config, options);
      hpl::cli::write_outputs(output, config.output);
      std::cout << hpl::cli::format_table(results);
      return output.passed ? 0 : kExitFail;
    } else {
      for (auto const& [sub, command] : subcommands) {
        if (sub->parsed()) {
          auto const config = resolve(o, false);
          output = command->run(config);
          hpl::cli::write_outputs(output, config.output);
        }
      }
    }
    std::cout << output.table.str();
    return output.passed ? 0 : kExitFail;
  } catch (hpl::Error const& e) {
    std::cerr << "error (" << hpl::to_string(e.kind()) << "): " << e.what()
              << '\n';
    bool const usage = e.kind() == hpl::ErrorKind::usage ||
                       e.kind() == hpl::ErrorKind::parse;
    return usage ? kExitUsage : kExitError;
  }
}
