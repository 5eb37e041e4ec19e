#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "hpl/period/family.hpp"
#include "json.hpp"

namespace hpl::cli {

// %.16e: 17 significant digits, lowercase scientific.
std::string format_double(double value);

class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header = {});

  void add_row(std::vector<std::string> row);
  std::vector<std::string> const& header() const { return header_; }
  std::size_t row_count() const { return rows_.size(); }
  std::string str() const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

// t1_re, t1_im, ... for n parameters.
std::vector<std::string> parameter_header(int n);
std::vector<std::string> parameter_cells(period::Parameter const& t);
nlohmann::ordered_json parameter_json(period::Parameter const& t);

struct CommandOutput {
  std::string command;
  nlohmann::ordered_json report;
  CsvTable table;
  bool passed = true;
};

// Writes report.json and <command>.csv into the directory, creating it.
void write_outputs(CommandOutput const& output,
                   std::filesystem::path const& directory);

}  // namespace hpl::cli
