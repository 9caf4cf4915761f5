#include "latgeo/generators.hpp"

#include <random>
#include <string>

namespace latgeo {

LatticePolytope standard_simplex(int d) {
  if (d < 1) throw std::invalid_argument("standard_simplex: d must be >= 1");
  std::vector<IntVec> pts;
  pts.push_back(IntVec::Zero(d));
  for (int i = 0; i < d; ++i) {
    IntVec e = IntVec::Zero(d);
    e(i) = 1;
    pts.push_back(e);
  }
  return convex_hull(pts, "simplex(" + std::to_string(d) + ")");
}

LatticePolytope monomial_triangle() {
  return convex_hull({make_point({0, 0}), make_point({1, 0}), make_point({1, 1})},
                     "triangle");
}

LatticePolytope reeve(const Int& r) {
  if (r < 1) throw std::invalid_argument("reeve: r must be >= 1");
  IntVec apex(3);
  apex(0) = 1;
  apex(1) = 1;
  apex(2) = r;
  return convex_hull({make_point({0, 0, 0}), make_point({1, 0, 0}),
                      make_point({0, 1, 0}), apex},
                     "reeve(" + r.str() + ")");
}

LatticePolytope cube(int d) {
  if (d < 1) throw std::invalid_argument("cube: d must be >= 1");
  std::vector<IntVec> pts;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << d); ++mask) {
    IntVec v(d);
    for (int i = 0; i < d; ++i) v(i) = (mask >> i) & 1;
    pts.push_back(v);
  }
  return convex_hull(pts, "cube(" + std::to_string(d) + ")");
}

LatticePolytope dilate(const LatticePolytope& p, const Int& k) {
  if (k < 1) throw std::invalid_argument("dilate: k must be >= 1");
  std::vector<IntVec> pts;
  pts.reserve(p.vertices().size());
  for (const IntVec& v : p.vertices()) pts.push_back(k * v);
  return convex_hull(pts, "dilate(" + p.label() + "," + k.str() + ")");
}

LatticePolytope random_polygon(std::uint64_t seed, int bound, int max_points) {
  if (bound < 1) throw std::invalid_argument("random_polygon: bound must be >= 1");
  if (max_points < 3) {
    throw std::invalid_argument("random_polygon: need at least 3 points");
  }
  std::mt19937_64 engine(seed);
  const std::uint64_t side = static_cast<std::uint64_t>(bound) + 1;
  while (true) {
    std::vector<IntVec> draws;
    draws.reserve(static_cast<std::size_t>(max_points));
    for (int i = 0; i < max_points; ++i) {
      IntVec v(2);
      v(0) = Int(engine() % side);
      v(1) = Int(engine() % side);
      draws.push_back(std::move(v));
    }
    LatticePolytope p =
        convex_hull(draws, "random(" + std::to_string(seed) + ")");
    if (p.full_dimensional()) return p;
  }
}

}  // namespace latgeo
