#pragma once

#include "latgeo/ehrhart.hpp"
#include "latgeo/polytope.hpp"

#include <iosfwd>
#include <vector>

namespace latgeo {

class Triangle2D {
 public:
  // Throws std::invalid_argument unless the corners are non-collinear points
  // in Z^2.
  Triangle2D(IntVec a, IntVec b, IntVec c);

  const IntVec& a() const { return a_; }
  const IntVec& b() const { return b_; }
  const IntVec& c() const { return c_; }

  // Twice the (positive) area.
  Int doubled_area() const;

 private:
  IntVec a_, b_, c_;
};

// Contains no lattice points besides its three corners; equivalently the
// corners are an affine basis of Z^2 and the area is 1/2.
bool is_empty_triangle(const Triangle2D& t);

struct Triangulation {
  std::vector<Triangle2D> triangles;
  std::string source;
};

// Face-to-face triangulation of a full-dimensional lattice polygon into empty
// (hence unimodular, area-1/2) triangles: fan from the lex-smallest vertex,
// then recursively split any triangle at its lex-smallest offending lattice
// point. Deterministic.
Triangulation unimodular_triangulation(const LatticePolytope& p);

// Pick's identity with the area obtained as (#triangles)/2.
PickReport verify_pick_via_triangulation(const LatticePolytope& p);

// Standalone SVG drawing of the triangulation (viewBox = bounding box).
void write_svg(const Triangulation& t, std::ostream& out);

}  // namespace latgeo
