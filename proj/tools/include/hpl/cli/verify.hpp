#pragma once

#include <string>
#include <vector>

#include "hpl/cli/config.hpp"
#include "hpl/cli/report.hpp"

namespace hpl::cli {

struct VerifyOptions {
  // Test hook: perturbs ∂̄* by a relative 1e-3 inside the adjointness check.
  bool break_adjoint = false;
};

struct PropertyResult {
  std::string module;
  std::string property;
  int samples = 0;
  // A residual, or a failure count with threshold 0.
  double max_residual = 0.0;
  double threshold = 0.0;
  bool passed() const { return max_residual <= threshold; }
};

// Families checked by the suite: the config family, else the config
// presets, else elliptic, abelian-diagonal and abelian-full. Throws usage
// when the config names nothing to check.
std::vector<PropertyResult> run_property_suite(RunConfig const& config,
                                               VerifyOptions const& options);

// Aligned text table, one line per property.
std::string format_table(std::vector<PropertyResult> const& results);

CommandOutput verify_report(std::vector<PropertyResult> const& results,
                            RunConfig const& config,
                            VerifyOptions const& options);
CommandOutput cmd_verify(RunConfig const& config,
                         VerifyOptions const& options = {});

// The config used when verify runs without --config.
RunConfig default_verify_config();

}  // namespace hpl::cli
