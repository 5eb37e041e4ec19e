#include "hpl/cli/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "hpl/error.hpp"
#include "hpl/torus/serialization.hpp"
#include "json.hpp"

namespace hpl::cli {

namespace {

using nlohmann::json;

Complex to_complex(json const& value) {
  if (value.is_number()) {
    return value.get<double>();
  }
  if (value.is_array() && value.size() == 2 && value[0].is_number() &&
      value[1].is_number()) {
    return {value[0].get<double>(), value[1].get<double>()};
  }
  throw Error(ErrorKind::parse,
              "expected a number or [re, im], got " + value.dump());
}

Matrix to_matrix(json const& value) {
  if (!value.is_array() || value.empty() || !value[0].is_array()) {
    throw Error(ErrorKind::parse, "expected a matrix as an array of rows");
  }
  auto const rows = static_cast<int>(value.size());
  auto const cols = static_cast<int>(value[0].size());
  Matrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    if (!value[r].is_array() || static_cast<int>(value[r].size()) != cols) {
      throw Error(ErrorKind::usage, "matrix rows have different lengths");
    }
    for (int c = 0; c < cols; ++c) {
      m(r, c) = to_complex(value[r][c]);
    }
  }
  return m;
}

period::Parameter to_parameter(json const& value) {
  period::Parameter t;
  if (value.is_array()) {
    for (auto const& entry : value) {
      t.push_back(to_complex(entry));
    }
  } else {
    t.push_back(to_complex(value));
  }
  return t;
}

torus::GeometryPtr parse_geometry(json const& value) {
  if (value.contains("modulus") || value.contains("kahler")) {
    if (!value.contains("modulus") || !value.contains("kahler")) {
      throw Error(ErrorKind::usage, "geometry needs both modulus and kahler");
    }
    return torus::TorusGeometry::create(to_matrix(value["modulus"]),
                                        to_matrix(value["kahler"]));
  }
  if (value.contains("dimension")) {
    return torus::TorusGeometry::square(value["dimension"].get<int>());
  }
  throw Error(ErrorKind::usage,
              "geometry needs a dimension or a modulus and kahler matrix");
}

std::string read_file(std::filesystem::path const& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorKind::usage, "cannot read " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

torus::VectorForm parse_field(json const& value,
                              torus::GeometryPtr const& geometry,
                              std::filesystem::path const& base_dir) {
  if (value.contains("matrix")) {
    Matrix const m = to_matrix(value["matrix"]);
    if (m.rows() != geometry->dimension() ||
        m.cols() != geometry->dimension()) {
      throw Error(ErrorKind::usage, "field matrix must be d x d");
    }
    return torus::VectorForm::constant(geometry, m);
  }
  std::string text;
  if (value.contains("text")) {
    text = value["text"].get<std::string>();
  } else if (value.contains("file")) {
    text = read_file(base_dir / value["file"].get<std::string>());
  } else {
    throw Error(ErrorKind::usage, "field needs matrix, text or file");
  }
  std::istringstream in(text);
  return torus::read_vector_form(in, geometry);
}

period::BeltramiFamily parse_family(json const& value,
                                    std::filesystem::path const& base_dir) {
  if (value.contains("preset")) {
    return period::preset(value["preset"].get<std::string>());
  }
  if (!value.contains("geometry") || !value.contains("fields")) {
    throw Error(ErrorKind::usage,
                "family needs a preset or a geometry with fields");
  }
  auto const geometry = parse_geometry(value["geometry"]);
  std::vector<torus::VectorForm> fields;
  for (auto const& field : value["fields"]) {
    fields.push_back(parse_field(field, geometry, base_dir));
  }
  int const degree = value.value("degree", geometry->dimension());
  double const radius = value.value("radius", 0.0);
  return period::BeltramiFamily(value.value("name", std::string("custom")),
                                geometry, std::move(fields), degree, radius);
}

CheckInput parse_check(json const& value) {
  CheckInput input;
  if (!value.contains("hodge_numbers") || !value.contains("frame") ||
      !value.contains("polarization")) {
    throw Error(ErrorKind::usage,
                "check needs hodge_numbers, frame and polarization");
  }
  input.hodge_numbers = value["hodge_numbers"].get<std::vector<int>>();
  input.frame = to_matrix(value["frame"]);
  input.polarization = to_matrix(value["polarization"]);
  return input;
}

double parse_number(std::string_view text) {
  double value = 0.0;
  auto const* end = text.data() + text.size();
  auto const [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw Error(ErrorKind::parse, "not a number: " + std::string(text));
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, char separator) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    auto const at = text.find(separator, start);
    parts.push_back(text.substr(start, at - start));
    if (at == std::string_view::npos) {
      break;
    }
    start = at + 1;
  }
  return parts;
}

std::string_view trim(std::string_view text) {
  auto const first = text.find_first_not_of(" \t\n");
  if (first == std::string_view::npos) {
    return {};
  }
  auto const last = text.find_last_not_of(" \t\n");
  return text.substr(first, last - first + 1);
}

}  // namespace

RunConfig parse_config(std::string_view const text,
                       std::filesystem::path const& base_dir) {
  json document;
  try {
    document = json::parse(text);
  } catch (json::parse_error const& e) {
    throw Error(ErrorKind::parse, e.what());
  }
  if (!document.is_object()) {
    throw Error(ErrorKind::parse, "config must be a JSON object");
  }
  RunConfig config;
  try {
    if (document.contains("family")) {
      config.family = parse_family(document["family"], base_dir);
      if (document["family"].contains("expected_rank")) {
        config.expected_rank = document["family"]["expected_rank"].get<int>();
      }
    }
    if (document.contains("presets")) {
      config.presets = document["presets"].get<std::vector<std::string>>();
    }
    if (document.contains("check")) {
      config.check = parse_check(document["check"]);
    }
    config.band = document.value("band", config.band);
    if (document.contains("grid")) {
      for (auto const& point : document["grid"]) {
        config.grid.push_back(to_parameter(point));
      }
    }
    if (document.contains("tolerances")) {
      auto const& t = document["tolerances"];
      config.tolerances.solver = t.value("solver", config.tolerances.solver);
      config.tolerances.residual =
          t.value("residual", config.tolerances.residual);
      config.tolerances.compare = t.value("compare", config.tolerances.compare);
      config.tolerances.step = t.value("step", config.tolerances.step);
    }
    config.allow_boundary = document.value("allow_boundary", false);
    config.output = document.value("output", std::string("."));
  } catch (json::exception const& e) {
    throw Error(ErrorKind::parse, e.what());
  }
  return config;
}

RunConfig load_config(std::filesystem::path const& path) {
  return parse_config(read_file(path), path.parent_path());
}

std::vector<period::Parameter> parse_grid(std::string_view const text) {
  std::vector<period::Parameter> grid;
  for (auto const point : split(text, ';')) {
    if (trim(point).empty()) {
      continue;
    }
    period::Parameter t;
    for (auto const component : split(point, ',')) {
      auto const parts = split(trim(component), ':');
      if (parts.size() > 2) {
        throw Error(ErrorKind::parse,
                    "bad grid component: " + std::string(component));
      }
      double const re = parse_number(trim(parts[0]));
      double const im = parts.size() == 2 ? parse_number(trim(parts[1])) : 0.0;
      t.emplace_back(re, im);
    }
    grid.push_back(std::move(t));
  }
  return grid;
}

void validate(RunConfig const& config) {
  if (config.band < 1) {
    throw Error(ErrorKind::usage, "band K must be at least 1");
  }
  for (auto const& t : config.grid) {
    if (config.family &&
        static_cast<int>(t.size()) != config.family->parameter_count()) {
      throw Error(ErrorKind::usage,
                  "grid point has " + std::to_string(t.size()) +
                      " components, family has " +
                      std::to_string(config.family->parameter_count()));
    }
    if (config.family && !config.allow_boundary &&
        !config.family->admits(t)) {
      throw Error(ErrorKind::usage,
                  "grid point outside the admissible radius " +
                      std::to_string(config.family->admissible_radius()) +
                      " (use --allow-boundary)");
    }
  }
}

}  // namespace hpl::cli
