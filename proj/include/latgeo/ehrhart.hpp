#pragma once

#include "latgeo/polynomial.hpp"
#include "latgeo/polytope.hpp"

namespace latgeo {

struct EhrhartPolynomial {
  Poly poly;
  std::string source;  // label of the polytope it was computed from
};

// |mP cap Z^d|, exact. m >= 0.
Int count(const LatticePolytope& p, const Int& m);

// Interpolates the counting function at m = 0..dim and verifies the result
// against direct counts at every m = 0..check_bound (default dim+3). The
// interpolation-vs-count cross check is mandatory; a mismatch means a bug
// upstream, reported as std::logic_error.
EhrhartPolynomial ehrhart_polynomial(const LatticePolytope& p,
                                     int check_bound = -1);

// Leading coefficient of the counting polynomial; for dimension <= 3 it is
// asserted equal to volume(p) before being returned.
Rat leading_coefficient_volume(const LatticePolytope& p);

struct PickReport {
  std::int64_t interior = 0;
  std::int64_t boundary = 0;
  Rat area;
  Rat pick_value;  // interior + boundary/2 - 1
  bool holds = false;
};

// Pick's identity, exactly: area == interior + boundary/2 - 1. 2D only.
PickReport pick_check(const LatticePolytope& p);

}  // namespace latgeo
