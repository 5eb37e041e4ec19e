#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "hpl/cli/commands.hpp"
#include "hpl/cli/config.hpp"
#include "hpl/cli/report.hpp"
#include "hpl/cli/verify.hpp"
#include "hpl/error.hpp"

namespace fs = std::filesystem;
using hpl::Error;
using hpl::ErrorKind;
using namespace hpl::cli;

namespace {

fs::path scratch(std::string const& name) {
  auto const dir = fs::temp_directory_path() / "hpl_cli_test" / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

int run(std::string const& args) {
  std::string const command =
      std::string(HPL_BINARY) + " " + args + " > /dev/null 2>&1";
  int const status = std::system(command.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(fs::path const& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

fs::path write_config(fs::path const& dir, std::string const& text) {
  auto const path = dir / "config.json";
  std::ofstream(path) << text;
  return path;
}

ErrorKind kind_of(auto&& body) {
  try {
    body();
  } catch (Error const& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::usage;
}

}  // namespace

TEST_CASE("format_double uses 17 significant digits") {
  CHECK(format_double(0.1) == "1.0000000000000001e-01");
  CHECK(format_double(-2.5) == "-2.5000000000000000e+00");
  CHECK(std::stod(format_double(1.0 / 3.0)) == 1.0 / 3.0);
}

TEST_CASE("csv table keeps row order") {
  CsvTable table({"a", "b"});
  table.add_row({"1", "2"});
  table.add_row({"3", "4"});
  CHECK(table.str() == "a,b\n1,2\n3,4\n");
  CHECK(parameter_header(2) ==
        std::vector<std::string>{"t1_re", "t1_im", "t2_re", "t2_im"});
}

TEST_CASE("grid strings") {
  auto const grid = parse_grid("0.1, 0.2:-0.3; 0,0");
  REQUIRE(grid.size() == 2);
  CHECK(grid[0][1] == hpl::Complex(0.2, -0.3));
  CHECK(grid[1].size() == 2);
  CHECK(kind_of([] { parse_grid("0.1:2:3"); }) == ErrorKind::parse);
  CHECK(kind_of([] { parse_grid("abc"); }) == ErrorKind::parse);
}

TEST_CASE("config parsing") {
  SUBCASE("preset family with complex grid") {
    auto const config = parse_config(
        R"({"family": {"preset": "abelian-diagonal"}, "band": 1,
            "grid": [[0.1, [0.0, 0.2]]], "tolerances": {"solver": 1e-11}})");
    REQUIRE(config.family.has_value());
    CHECK(config.family->parameter_count() == 2);
    CHECK(config.band == 1);
    CHECK(config.grid[0][1] == hpl::Complex(0.0, 0.2));
    CHECK(config.tolerances.solver == 1e-11);
    CHECK(config.tolerances.compare == 1e-6);
    validate(config);
  }
  SUBCASE("explicit geometry and fields") {
    auto const config = parse_config(
        R"({"family": {"geometry": {"dimension": 1},
                       "fields": [{"matrix": [[1]]}], "name": "curve"},
            "grid": [0.2]})");
    CHECK(config.family->name() == "curve");
    CHECK(config.family->degree() == 1);
  }
  SUBCASE("serialized field text") {
    auto const config = parse_config(
        R"({"family": {"geometry": {"dimension": 1},
                       "fields": [{"text": "0 0 | 1 | 1 | 1 0\n"}]}})");
    CHECK(config.family->is_constant());
  }
  SUBCASE("errors") {
    CHECK(kind_of([] { parse_config("{"); }) == ErrorKind::parse);
    CHECK(kind_of([] { parse_config("[1]"); }) == ErrorKind::parse);
    CHECK(kind_of([] {
            parse_config(R"({"family": {"preset": "quintic"}})");
          }) == ErrorKind::usage);
    CHECK(kind_of([] {
            parse_config(R"({"family": {"geometry": {"dimension": 2},
                                        "fields": [{"matrix": [[1]]}]}})");
          }) == ErrorKind::usage);
    CHECK(kind_of([] {
            validate(parse_config(R"({"family": {"preset": "elliptic"},
                                      "band": 0})"));
          }) == ErrorKind::usage);
    CHECK(kind_of([] {
            validate(parse_config(R"({"family": {"preset": "elliptic"},
                                      "grid": [0.95]})"));
          }) == ErrorKind::usage);
    CHECK(kind_of([] {
            validate(parse_config(R"({"family": {"preset": "elliptic"},
                                      "grid": [[0.1, 0.1]]})"));
          }) == ErrorKind::usage);
  }
  SUBCASE("boundary points are accepted on request") {
    auto const config = parse_config(R"({"family": {"preset": "elliptic"},
                                         "grid": [0.95],
                                         "allow_boundary": true})");
    validate(config);
  }
}

TEST_CASE("check command") {
  SUBCASE("elliptic family passes") {
    auto const out = cmd_check(parse_config(
        R"({"family": {"preset": "elliptic"}, "grid": [0.3, [[0, 0.4]]]})"));
    CHECK(out.passed);
    CHECK(out.table.row_count() == 2);
  }
  SUBCASE("explicit elliptic frame") {
    auto const good = cmd_check(parse_config(
        R"({"check": {"hodge_numbers": [1, 1],
                      "frame": [[1, [0, 1]], [1, [0, -1]]],
                      "polarization": [[0, 1], [-1, 0]]}})"));
    CHECK(good.passed);
    auto const bad = cmd_check(parse_config(
        R"({"check": {"hodge_numbers": [1, 1],
                      "frame": [[1, [0, 1]], [1, [0, -1]]],
                      "polarization": [[0, -1], [1, 0]]}})"));
    CHECK_FALSE(bad.passed);
  }
  SUBCASE("mismatched dimensions") {
    CHECK(kind_of([] {
            cmd_check(parse_config(
                R"({"check": {"hodge_numbers": [1, 1],
                              "frame": [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
                              "polarization": [[0, 1], [-1, 0]]}})"));
          }) == ErrorKind::usage);
  }
}

TEST_CASE("extend command") {
  SUBCASE("zero field and small amplitude") {
    auto const out = cmd_extend(parse_config(
        R"({"family": {"preset": "elliptic"}, "band": 2, "grid": [0, 0.1]})"));
    CHECK(out.passed);
    auto const& points = out.report["points"];
    REQUIRE(points.size() == 2);
    CHECK(points[0]["max_residual"].get<double>() == 0.0);
    CHECK(points[1]["max_residual"].get<double>() <= 1e-8);
  }
  SUBCASE("amplitude above one is a contraction violation") {
    auto config = parse_config(
        R"({"family": {"preset": "elliptic"}, "grid": [1.2],
            "allow_boundary": true})");
    auto const out = cmd_extend(config);
    CHECK_FALSE(out.passed);
    CHECK(out.report["points"][0]["status"] == "contraction-violation");
  }
}

TEST_CASE("period commands") {
  auto const config = parse_config(
      R"({"family": {"preset": "abelian-diagonal"}, "band": 1,
          "grid": [[0.2, 0.1], [0, 0]]})");
  auto const periods = cmd_periods(config);
  CHECK(periods.passed);
  CHECK(periods.report["hodge_numbers"] == std::vector<int>{1, 3, 1});
  auto const compare = cmd_compare(config);
  CHECK(compare.passed);
  auto const affine = cmd_affine(config);
  CHECK(affine.passed);
  CHECK(affine.report["points"][0]["rank"] == 2);
}

TEST_CASE("degenerate family rank expectation") {
  auto const out = cmd_affine(parse_config(
      R"({"family": {"preset": "abelian-degenerate", "expected_rank": 1},
          "grid": [[0.1, 0.1]]})"));
  CHECK(out.passed);
}

TEST_CASE("binary exit codes") {
  auto const dir = scratch("exit_codes");
  CHECK(run("verify --out " + (dir / "ok").string()) == 0);
  CHECK(run("verify --break-adjoint --out " + (dir / "broken").string()) == 1);
  auto const empty = write_config(dir, "{}");
  CHECK(run("verify --config " + empty.string() + " --out " +
            (dir / "empty").string()) == 2);
  CHECK(run("extend --out " + dir.string()) == 2);
  CHECK(run("frobnicate") == 2);
  CHECK(run("--help") == 0);
}

TEST_CASE("binary writes deterministic reports") {
  auto const dir = scratch("determinism");
  auto const config = write_config(
      dir, R"({"family": {"preset": "elliptic"}, "grid": [0.1, [[0.2, 0.3]]]})");
  for (auto const* run_name : {"a", "b"}) {
    CHECK(run("periods --config " + config.string() + " --out " +
              (dir / run_name).string()) == 0);
  }
  CHECK(slurp(dir / "a" / "report.json") == slurp(dir / "b" / "report.json"));
  CHECK(slurp(dir / "a" / "periods.csv") == slurp(dir / "b" / "periods.csv"));
  CHECK_FALSE(slurp(dir / "a" / "periods.csv").empty());
}
