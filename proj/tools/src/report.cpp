#include "hpl/cli/report.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "hpl/error.hpp"

namespace hpl::cli {

std::string format_double(double const value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.16e", value);
  return buffer;
}

CsvTable::CsvTable(std::vector<std::string> header)
    : header_(std::move(header)) {}

void CsvTable::add_row(std::vector<std::string> row) {
  if (row.size() != header_.size()) {
    throw Error(ErrorKind::shape, "CSV row does not match the header");
  }
  rows_.push_back(std::move(row));
}

std::string CsvTable::str() const {
  std::ostringstream out;
  auto const line = [&out](std::vector<std::string> const& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      out << (i == 0 ? "" : ",") << cells[i];
    }
    out << '\n';
  };
  line(header_);
  for (auto const& row : rows_) {
    line(row);
  }
  return out.str();
}

std::vector<std::string> parameter_header(int const n) {
  std::vector<std::string> header;
  for (int i = 1; i <= n; ++i) {
    header.push_back("t" + std::to_string(i) + "_re");
    header.push_back("t" + std::to_string(i) + "_im");
  }
  return header;
}

std::vector<std::string> parameter_cells(period::Parameter const& t) {
  std::vector<std::string> cells;
  for (Complex const v : t) {
    cells.push_back(format_double(v.real()));
    cells.push_back(format_double(v.imag()));
  }
  return cells;
}

nlohmann::ordered_json parameter_json(period::Parameter const& t) {
  auto result = nlohmann::ordered_json::array();
  for (Complex const v : t) {
    result.push_back({v.real(), v.imag()});
  }
  return result;
}

void write_outputs(CommandOutput const& output,
                   std::filesystem::path const& directory) {
  std::filesystem::create_directories(directory);
  std::ofstream json_out(directory / "report.json", std::ios::binary);
  json_out << output.report.dump(2) << '\n';
  std::ofstream csv_out(directory / (output.command + ".csv"),
                        std::ios::binary);
  csv_out << output.table.str();
  if (!json_out || !csv_out) {
    throw Error(ErrorKind::usage,
                "cannot write outputs to " + directory.string());
  }
}

}  // namespace hpl::cli
