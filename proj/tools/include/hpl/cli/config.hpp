#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hpl/period/family.hpp"

namespace hpl::cli {

struct Tolerances {
  // Stopping tolerance of the fixed-point iteration.
  double solver = 1e-10;
  // Threshold for asserted residuals.
  double residual = 1e-8;
  // Threshold for section coincidence and the derivative relation.
  double compare = 1e-6;
  // Central-difference step.
  double step = 1e-3;
};

// An explicit frame / polarization pair for the check command.
struct CheckInput {
  std::vector<int> hodge_numbers;
  Matrix frame;
  Matrix polarization;
};

struct RunConfig {
  std::optional<period::BeltramiFamily> family;
  std::vector<std::string> presets;
  std::optional<int> expected_rank;
  std::optional<CheckInput> check;
  int band = 2;
  std::vector<period::Parameter> grid;
  Tolerances tolerances;
  bool allow_boundary = false;
  std::filesystem::path output = ".";
};

// Parses the JSON document. Relative "file" entries are resolved against
// base_dir. Throws parse for malformed input and usage for inconsistent
// input.
RunConfig parse_config(std::string_view text,
                       std::filesystem::path const& base_dir = ".");
RunConfig load_config(std::filesystem::path const& path);

// Points separated by ';', components by ',', complex values as "re:im".
std::vector<period::Parameter> parse_grid(std::string_view text);

// Throws usage unless K ≥ 1 and, without allow_boundary, every grid point
// lies inside the admissible radius of the family.
void validate(RunConfig const& config);

}  // namespace hpl::cli
