#pragma once

// Lattice polytopes as vertex sets with an exact facet description.
//
// Everything here is exact and desk scale by design: facet enumeration scans
// d-subsets of the vertices, membership tests are integer comparisons, and
// lattice point enumeration walks the bounding box in lexicographic order.
// Objects are immutable once constructed, so sharing them across threads is
// safe without locks.

#include "latgeo/numeric.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace latgeo {

// Half-space { x : normal . x <= offset } with a primitive normal.
struct Facet {
  IntVec normal;
  Int offset;
};

enum class Membership { Interior, Boundary, Outside };

class LatticePolytope {
 public:
  Eigen::Index ambient_dim() const { return ambient_dim_; }
  Eigen::Index dim() const { return dim_; }
  bool full_dimensional() const { return dim_ == ambient_dim_; }

  // Minimal vertex set, sorted lexicographically.
  const std::vector<IntVec>& vertices() const { return vertices_; }

  // Irredundant facet list, available only for full-dimensional polytopes;
  // throws std::domain_error otherwise.
  const std::vector<Facet>& facets() const;

  const std::string& label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  friend LatticePolytope convex_hull(const std::vector<IntVec>& points,
                                     std::string label);

 private:
  LatticePolytope() = default;
  Eigen::Index ambient_dim_ = 0;
  Eigen::Index dim_ = 0;
  std::vector<IntVec> vertices_;
  std::vector<Facet> facets_;  // empty when degenerate
  std::string label_;
};

// Exact convex hull: deduplicates, drops non-extreme points, computes the
// affine dimension, and (when full-dimensional) the facet description.
// Throws std::invalid_argument on an empty set or mixed ambient dimensions.
LatticePolytope convex_hull(const std::vector<IntVec>& points,
                            std::string label = "");

// Requires a full-dimensional polytope (std::domain_error otherwise) and a
// point of matching dimension (std::invalid_argument).
Membership classify(const LatticePolytope& p, const IntVec& x);

// Is x in the dilation m*P? Works for degenerate polytopes too. m >= 0.
bool dilation_contains(const LatticePolytope& p, const Int& m, const IntVec& x);

// All lattice points of m*P in lexicographic order. m >= 0; the 0th dilation
// is the single point {origin}.
std::vector<IntVec> lattice_points(const LatticePolytope& p, const Int& m);

struct BoundaryInteriorCounts {
  std::int64_t interior = 0;
  std::int64_t boundary = 0;
};

// Lattice points of P split into interior/boundary. 2D full-dimensional only.
BoundaryInteriorCounts boundary_interior_counts(const LatticePolytope& p);

// Exact Euclidean volume for full-dimensional polytopes of dimension <= 3
// (length / area / volume); std::domain_error beyond that.
Rat volume(const LatticePolytope& p);

}  // namespace latgeo
