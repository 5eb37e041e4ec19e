#pragma once

#include <iosfwd>
#include <string>

#include "hpl/torus/beltrami.hpp"
#include "hpl/torus/fourier_form.hpp"

namespace hpl::torus {

// Text map, one nonzero coefficient per line:
//   k_1 … k_{2d} | I | J | re im
// with 1-based increasing indices and "-" for an empty index set. For a
// vector form, I is the single vector index i of ∂_i. A leading comment
// "# form p q band" (or "# vector k band") fixes the shape; without it the
// shape is inferred from the lines. Other lines starting with '#' are
// ignored.
void write_form(std::ostream& out, FourierForm const& f);
void write_vector_form(std::ostream& out, VectorForm const& phi);

FourierForm read_form(std::istream& in, GeometryPtr geometry);
VectorForm read_vector_form(std::istream& in, GeometryPtr geometry);

std::string to_text(FourierForm const& f);
std::string to_text(VectorForm const& phi);

}  // namespace hpl::torus
