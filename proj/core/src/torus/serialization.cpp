#include "hpl/torus/serialization.hpp"

#include <bit>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "hpl/error.hpp"

namespace hpl::torus {

namespace {

std::string index_text(Mask const mask) {
  if (mask == 0) {
    return "-";
  }
  std::string result;
  for (int const i : indices(mask)) {
    if (!result.empty()) {
      result += ' ';
    }
    result += std::to_string(i + 1);
  }
  return result;
}

std::string number_text(double const v) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.16e", v);
  return buffer;
}

void write_line(std::ostream& out, std::span<int const> mode, Mask const holo,
                Mask const anti, Complex const value) {
  for (std::size_t j = 0; j < mode.size(); ++j) {
    out << (j == 0 ? "" : " ") << mode[j];
  }
  out << " | " << index_text(holo) << " | " << index_text(anti) << " | "
      << number_text(value.real()) << ' ' << number_text(value.imag()) << '\n';
}

struct Entry {
  std::vector<int> mode;
  Mask holo = 0;
  Mask anti = 0;
  Complex value;
};

struct Parsed {
  std::string kind;
  std::vector<int> shape;
  std::vector<Entry> entries;
};

std::string trim(std::string const& s) {
  auto const first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) {
    return "";
  }
  auto const last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

Mask parse_indices(std::string const& text, int const d, int const line) {
  std::string const t = trim(text);
  if (t == "-") {
    return 0;
  }
  std::istringstream in(t);
  Mask result = 0;
  int previous = 0;
  int i = 0;
  while (in >> i) {
    if (i <= previous || i > d) {
      throw Error(ErrorKind::parse, "line " + std::to_string(line) +
                                        ": indices must increase within 1.." +
                                        std::to_string(d));
    }
    previous = i;
    result |= Mask{1} << (i - 1);
  }
  if (!in.eof()) {
    throw Error(ErrorKind::parse,
                "line " + std::to_string(line) + ": bad index list");
  }
  return result;
}

Parsed parse(std::istream& in, int const d) {
  Parsed result;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string const text = trim(raw);
    if (text.empty()) {
      continue;
    }
    if (text[0] == '#') {
      std::istringstream header(text.substr(1));
      std::string kind;
      if (header >> kind && (kind == "form" || kind == "vector")) {
        result.kind = kind;
        int v = 0;
        while (header >> v) {
          result.shape.push_back(v);
        }
      }
      continue;
    }
    std::vector<std::string> fields;
    std::size_t start = 0;
    for (std::size_t bar; (bar = text.find('|', start)) != std::string::npos;
         start = bar + 1) {
      fields.push_back(text.substr(start, bar - start));
    }
    fields.push_back(text.substr(start));
    if (fields.size() != 4) {
      throw Error(ErrorKind::parse,
                  "line " + std::to_string(line) + ": expected 4 fields");
    }
    Entry entry;
    std::istringstream modes(fields[0]);
    int k = 0;
    while (modes >> k) {
      entry.mode.push_back(k);
    }
    if (static_cast<int>(entry.mode.size()) != 2 * d || !modes.eof()) {
      throw Error(ErrorKind::parse, "line " + std::to_string(line) +
                                        ": mode needs 2d integers");
    }
    entry.holo = parse_indices(fields[1], d, line);
    entry.anti = parse_indices(fields[2], d, line);
    std::istringstream value(fields[3]);
    double re = 0.0;
    double im = 0.0;
    if (!(value >> re >> im)) {
      throw Error(ErrorKind::parse,
                  "line " + std::to_string(line) + ": expected re im");
    }
    entry.value = {re, im};
    result.entries.push_back(std::move(entry));
  }
  return result;
}

int max_mode(Parsed const& parsed) {
  int band = 0;
  for (auto const& e : parsed.entries) {
    for (int const k : e.mode) {
      band = std::max(band, std::abs(k));
    }
  }
  return band;
}

}  // namespace

void write_form(std::ostream& out, FourierForm const& f) {
  out << "# form " << f.bidegree().p << ' ' << f.bidegree().q << ' '
      << f.band() << '\n';
  for (int m = 0; m < f.mode_count(); ++m) {
    for (int c = 0; c < f.component_count(); ++c) {
      if (f.at(m, c) != Complex(0.0)) {
        write_line(out, f.lattice().mode(m), f.space().holo_of(c),
                   f.space().anti_of(c), f.at(m, c));
      }
    }
  }
}

void write_vector_form(std::ostream& out, VectorForm const& phi) {
  out << "# vector " << phi.degree() << ' ' << phi.band() << '\n';
  for (int m = 0; m < phi.mode_count(); ++m) {
    for (int c = 0; c < phi.component_count(); ++c) {
      if (phi.at(m, c) != Complex(0.0)) {
        write_line(out, phi.lattice().mode(m),
                   Mask{1} << phi.vector_index_of(c), phi.anti_of(c),
                   phi.at(m, c));
      }
    }
  }
}

FourierForm read_form(std::istream& in, GeometryPtr geometry) {
  int const d = geometry->dimension();
  Parsed const parsed = parse(in, d);
  Bidegree b;
  int band = max_mode(parsed);
  if (parsed.kind == "form" && parsed.shape.size() == 3) {
    b = {parsed.shape[0], parsed.shape[1]};
    band = std::max(band, parsed.shape[2]);
  } else if (!parsed.entries.empty()) {
    b = {popcount(parsed.entries[0].holo), popcount(parsed.entries[0].anti)};
  } else {
    throw Error(ErrorKind::parse, "empty form without a header");
  }
  FourierForm result(std::move(geometry), b, band);
  for (auto const& e : parsed.entries) {
    if (popcount(e.holo) != b.p || popcount(e.anti) != b.q) {
      throw Error(ErrorKind::parse, "mixed bidegrees in one form");
    }
    result.set_coefficient(e.mode, e.holo, e.anti,
                           result.coefficient(e.mode, e.holo, e.anti) + e.value);
  }
  return result;
}

VectorForm read_vector_form(std::istream& in, GeometryPtr geometry) {
  int const d = geometry->dimension();
  Parsed const parsed = parse(in, d);
  int degree = 1;
  int band = max_mode(parsed);
  if (parsed.kind == "vector" && parsed.shape.size() == 2) {
    degree = parsed.shape[0];
    band = std::max(band, parsed.shape[1]);
  } else if (!parsed.entries.empty()) {
    degree = popcount(parsed.entries[0].anti);
  }
  VectorForm result(std::move(geometry), degree, band);
  for (auto const& e : parsed.entries) {
    if (popcount(e.holo) != 1 || popcount(e.anti) != degree) {
      throw Error(ErrorKind::parse,
                  "vector lines need one vector index and a fixed degree");
    }
    int const i = std::countr_zero(e.holo);
    result.set_coefficient(e.mode, i, e.anti,
                           result.coefficient(e.mode, i, e.anti) + e.value);
  }
  return result;
}

std::string to_text(FourierForm const& f) {
  std::ostringstream out;
  write_form(out, f);
  return out.str();
}

std::string to_text(VectorForm const& phi) {
  std::ostringstream out;
  write_vector_form(out, phi);
  return out.str();
}

}  // namespace hpl::torus
