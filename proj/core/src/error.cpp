#include "hpl/error.hpp"

namespace hpl {

std::string_view to_string(ErrorKind const kind) {
  switch (kind) {
    case ErrorKind::invalid_hodge_type: return "invalid-hodge-type";
    case ErrorKind::shape: return "shape";
    case ErrorKind::invalid_frame: return "invalid-frame";
    case ErrorKind::invalid_geometry: return "invalid-geometry";
    case ErrorKind::degree: return "degree";
    case ErrorKind::contraction_violation: return "contraction-violation";
    case ErrorKind::non_convergence: return "non-convergence";
    case ErrorKind::unsupported_oracle: return "unsupported-oracle";
    case ErrorKind::not_in_orbit: return "not-in-orbit";
    case ErrorKind::step: return "step";
    case ErrorKind::invalid_problem: return "invalid-problem";
    case ErrorKind::parse: return "parse";
    case ErrorKind::usage: return "usage";
  }
  return "unknown";
}

Error::Error(ErrorKind const kind, std::string const& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message),
      kind_(kind) {}

}  // namespace hpl
