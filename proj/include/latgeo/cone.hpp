#pragma once

// The cone over a polytope, graded by height: C_P = R>=0 ({(x, 1) : x in P}).
// The lattice points at height m are exactly the lattice points of m*P, so
// slices, the integer decomposition property, and the desk-scale Hilbert
// basis all reduce to dilation point sets.

#include "latgeo/polytope.hpp"

#include <optional>
#include <vector>

namespace latgeo {

class PolytopeCone {
 public:
  explicit PolytopeCone(LatticePolytope base) : base_(std::move(base)) {}
  const LatticePolytope& base() const { return base_; }
  Eigen::Index graded_dim() const { return base_.ambient_dim() + 1; }

 private:
  LatticePolytope base_;
};

struct GradedPoint {
  IntVec point;
  Int height;
};

bool operator==(const GradedPoint& a, const GradedPoint& b);

// (height, lex) order: the order all cone-level sequences below use.
bool graded_less(const GradedPoint& a, const GradedPoint& b);

// Checked constructor: (point, height) must lie in height*P.
GradedPoint graded_point(const PolytopeCone& c, IntVec point, Int height);

// Lattice points of the cone at height m, lex sorted. m >= 0.
std::vector<GradedPoint> slice(const PolytopeCone& c, const Int& m);

struct IdpReport {
  Int checked_up_to;
  bool holds = false;
  std::optional<GradedPoint> witness;  // first failure in (height, lex) order
  bool used_default_bound = false;
};

// Integer decomposition property up to max_height (default max(2, dim-1)):
// every height-m point must split as a height-1 point plus a height-(m-1)
// point. Full-dimensional polytopes only.
IdpReport idp_check(const LatticePolytope& p,
                    std::optional<Int> max_height = std::nullopt);

struct HilbertBasis {
  std::vector<GradedPoint> generators;  // (height, lex) sorted
  Int height_bound;
  bool used_default_bound = false;
};

// Desk-scale Hilbert basis: all cone points of height <= height_bound
// (default max(1, dim-1)) that do not split as a sum of two lower-height
// cone points. Full-dimensional polytopes only.
HilbertBasis hilbert_basis(const LatticePolytope& p,
                           std::optional<Int> height_bound = std::nullopt);

struct SmoothFailure {
  IntVec vertex;
  bool simple = false;        // false: edge count != dim
  std::int64_t edge_count = 0;
  Int det_abs;                // |det| of primitive edge directions when simple
};

struct SmoothReport {
  bool smooth = false;
  std::vector<SmoothFailure> failures;
};

// A full-dimensional polytope is smooth when at every vertex the primitive
// edge directions form a lattice basis (in particular there are exactly dim
// of them).
SmoothReport is_smooth(const LatticePolytope& p);

}  // namespace latgeo
