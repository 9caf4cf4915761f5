#pragma once

// Exact linear algebra over Int/Rat. Eigen's own decompositions assume
// floating point (threshold pivoting), so the kernels here are written
// directly against Eigen storage and never leave exact arithmetic.

#include "latgeo/numeric.hpp"

#include <optional>
#include <vector>

namespace latgeo {

// Fraction-free (Bareiss) elimination; every intermediate division is exact.
// Throws std::invalid_argument unless m is square. det of the 0x0 matrix is 1.
Int determinant(const IntMat& m);

Eigen::Index rank(const IntMat& m);

struct HermiteResult {
  IntMat h;  // row-style echelon: pivots positive, entries above a pivot in [0, pivot)
  IntMat u;  // unimodular row transform with h == u * m
};
HermiteResult hermite_normal_form(const IntMat& m);

// d vectors in Z^d whose integer span is all of Z^d, i.e. |det| == 1.
bool is_lattice_basis(const std::vector<IntVec>& vectors);

// d+1 points in Z^d such that the difference vectors from the first point
// form a lattice basis.
bool is_affine_basis(const std::vector<IntVec>& points);

// v divided by the gcd of its entries; the sign of each entry is preserved.
// Throws std::invalid_argument on the zero vector.
IntVec primitive(const IntVec& v);

// Primitive normal of the hyperplane spanned by d affinely independent points
// in Z^d (generalized cross product of the difference vectors). The sign is
// unspecified; callers orient it. try_ returns nullopt when the points are
// affinely dependent, the checked version throws.
std::optional<IntVec> try_hyperplane_normal(const std::vector<IntVec>& points);
IntVec hyperplane_normal(const std::vector<IntVec>& points);

// Gauss-Jordan over the rationals. Returns a solution of a*x == b with free
// variables set to zero, or nullopt when the system is inconsistent.
std::optional<RatVec> solve_rational(const RatMat& a, const RatVec& b);

}  // namespace latgeo
