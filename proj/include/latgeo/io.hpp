#pragma once

// Plain-text polytope format:
//
//   # comments run to end of line
//   dim 2
//   0 0
//   1 0
//   1 1
//
// The header names the ambient dimension; every following line is one lattice
// point with exactly that many integer coordinates. Duplicate points are
// fine (the hull dedupes). parse_error on malformed input, io_error on
// filesystem trouble.

#include "latgeo/polytope.hpp"

#include <iosfwd>
#include <string>

namespace latgeo {

LatticePolytope parse_polytope_text(std::istream& in, std::string label = "");
LatticePolytope load_polytope_file(const std::string& path);

// Inverse of the parser: header plus one line per vertex.
std::string format_polytope_text(const LatticePolytope& p);

// Generator spec strings, e.g. "triangle", "simplex 3", "cube 2", "reeve 4",
// "random 7", "random 7 12 20" (seed, bound, points). parse_error on unknown
// names or malformed numbers; argument-range violations propagate from the
// generators as std::invalid_argument.
LatticePolytope generate_from_spec(const std::string& spec);

}  // namespace latgeo
