#include "latgeo/ehrhart.hpp"

namespace latgeo {

Int count(const LatticePolytope& p, const Int& m) {
  return Int(lattice_points(p, m).size());
}

EhrhartPolynomial ehrhart_polynomial(const LatticePolytope& p, int check_bound) {
  const int k = static_cast<int>(p.dim());
  std::vector<std::pair<Rat, Rat>> nodes;
  nodes.reserve(static_cast<std::size_t>(k) + 1);
  std::vector<Int> counts;
  const int bound = check_bound < 0 ? k + 3 : check_bound;
  const int top = std::max(k, bound);
  for (int m = 0; m <= top; ++m) {
    counts.push_back(count(p, Int(m)));
    if (m <= k) nodes.emplace_back(Rat(m), Rat(counts.back()));
  }
  Poly poly = lagrange_interpolate(nodes);

  // The counting function of a lattice polytope agrees with a degree-dim
  // polynomial; if the cross check below fails something upstream is broken.
  for (int m = 0; m <= bound; ++m) {
    if (poly(Rat(m)) != Rat(counts[static_cast<std::size_t>(m)])) {
      throw std::logic_error(
          "ehrhart_polynomial: interpolation disagrees with direct count at m=" +
          std::to_string(m));
    }
  }
  if (poly.degree() != k) {
    throw std::logic_error("ehrhart_polynomial: unexpected degree");
  }
  if (poly.coefficient(0) != 1) {
    throw std::logic_error("ehrhart_polynomial: constant term is not 1");
  }
  return EhrhartPolynomial{poly, p.label()};
}

Rat leading_coefficient_volume(const LatticePolytope& p) {
  Rat lead = ehrhart_polynomial(p).poly.leading_coefficient();
  if (p.full_dimensional() && p.dim() <= 3) {
    if (lead != volume(p)) {
      throw std::logic_error(
          "leading_coefficient_volume: leading coefficient != volume");
    }
  }
  return lead;
}

PickReport pick_check(const LatticePolytope& p) {
  BoundaryInteriorCounts counts = boundary_interior_counts(p);
  PickReport report;
  report.interior = counts.interior;
  report.boundary = counts.boundary;
  report.area = volume(p);
  report.pick_value = Rat(counts.interior) + Rat(counts.boundary, 2) - 1;
  report.holds = report.area == report.pick_value;
  return report;
}

}  // namespace latgeo
