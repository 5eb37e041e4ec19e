#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hpl {

enum class ErrorKind {
  invalid_hodge_type,
  shape,
  invalid_frame,
  invalid_geometry,
  degree,
  contraction_violation,
  non_convergence,
  unsupported_oracle,
  not_in_orbit,
  step,
  invalid_problem,
  parse,
  usage,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string const& message);

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace hpl
