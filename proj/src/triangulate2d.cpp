#include "latgeo/triangulate2d.hpp"

#include <algorithm>
#include <ostream>
#include <vector>

namespace latgeo {

namespace {

Int cross(const IntVec& o, const IntVec& a, const IntVec& b) {
  return (a(0) - o(0)) * (b(1) - o(1)) - (a(1) - o(1)) * (b(0) - o(0));
}

int sign(const Int& x) { return x == 0 ? 0 : (x < 0 ? -1 : 1); }

// Lattice points of the closed triangle, excluding the corners, in lex order.
std::vector<IntVec> non_corner_points(const Triangle2D& t) {
  const IntVec &a = t.a(), &b = t.b(), &c = t.c();
  const int orient = sign(cross(a, b, c));
  Int lo0 = std::min({a(0), b(0), c(0)}), hi0 = std::max({a(0), b(0), c(0)});
  Int lo1 = std::min({a(1), b(1), c(1)}), hi1 = std::max({a(1), b(1), c(1)});
  std::vector<IntVec> out;
  IntVec x(2);
  for (Int i = lo0; i <= hi0; ++i) {
    for (Int j = lo1; j <= hi1; ++j) {
      x(0) = i;
      x(1) = j;
      int s1 = sign(cross(a, b, x));
      int s2 = sign(cross(b, c, x));
      int s3 = sign(cross(c, a, x));
      // inside or on the boundary: no orientation sign opposes the triangle's
      if (s1 == -orient || s2 == -orient || s3 == -orient) continue;
      if (points_equal(x, a) || points_equal(x, b) || points_equal(x, c)) continue;
      out.push_back(x);
    }
  }
  return out;
}

}  // namespace

Triangle2D::Triangle2D(IntVec a, IntVec b, IntVec c)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
  if (a_.size() != 2 || b_.size() != 2 || c_.size() != 2) {
    throw std::invalid_argument("Triangle2D: corners must lie in Z^2");
  }
  if (cross(a_, b_, c_) == 0) {
    throw std::invalid_argument("Triangle2D: corners are collinear");
  }
}

Int Triangle2D::doubled_area() const { return abs(cross(a_, b_, c_)); }

bool is_empty_triangle(const Triangle2D& t) {
  return non_corner_points(t).empty();
}

Triangulation unimodular_triangulation(const LatticePolytope& p) {
  if (p.ambient_dim() != 2 || !p.full_dimensional()) {
    throw std::domain_error(
        "unimodular_triangulation: full-dimensional polygons only");
  }

  // Ring order: lex-smallest vertex first, the rest sorted by angle around it
  // (their offsets all lie in the half-plane x >= 0, so the cross comparator
  // is a strict weak order).
  const auto& verts = p.vertices();
  const IntVec& v0 = verts.front();
  std::vector<IntVec> rest(verts.begin() + 1, verts.end());
  std::sort(rest.begin(), rest.end(), [&](const IntVec& x, const IntVec& y) {
    return cross(v0, x, y) > 0;
  });

  std::vector<Triangle2D> work;
  for (std::size_t i = 0; i + 1 < rest.size(); ++i) {
    work.emplace_back(v0, rest[i], rest[i + 1]);
  }

  Triangulation result;
  result.source = p.label();
  while (!work.empty()) {
    Triangle2D t = work.back();
    work.pop_back();
    std::vector<IntVec> inner = non_corner_points(t);
    if (inner.empty()) {
      result.triangles.push_back(t);
      continue;
    }
    const IntVec& q = inner.front();  // lex-smallest offender
    int s_ab = sign(cross(t.a(), t.b(), q));
    int s_bc = sign(cross(t.b(), t.c(), q));
    int s_ca = sign(cross(t.c(), t.a(), q));
    if (s_ab == 0) {  // q on edge ab: two pieces
      work.emplace_back(t.a(), q, t.c());
      work.emplace_back(q, t.b(), t.c());
    } else if (s_bc == 0) {
      work.emplace_back(t.b(), q, t.a());
      work.emplace_back(q, t.c(), t.a());
    } else if (s_ca == 0) {
      work.emplace_back(t.c(), q, t.b());
      work.emplace_back(q, t.a(), t.b());
    } else {  // interior: three pieces
      work.emplace_back(t.a(), t.b(), q);
      work.emplace_back(t.b(), t.c(), q);
      work.emplace_back(t.c(), t.a(), q);
    }
  }
  // Every output triangle is lattice-point free, so no edge of the final
  // complex can carry a T-junction: the subdivision is face-to-face.
  return result;
}

PickReport verify_pick_via_triangulation(const LatticePolytope& p) {
  Triangulation t = unimodular_triangulation(p);
  BoundaryInteriorCounts counts = boundary_interior_counts(p);
  PickReport report;
  report.interior = counts.interior;
  report.boundary = counts.boundary;
  report.area = Rat(Int(t.triangles.size()), Int(2));
  report.pick_value = Rat(counts.interior) + Rat(counts.boundary, 2) - 1;
  report.holds = report.area == report.pick_value;
  return report;
}

void write_svg(const Triangulation& t, std::ostream& out) {
  Int lo0(0), hi0(0), lo1(0), hi1(0);
  bool first = true;
  for (const Triangle2D& tr : t.triangles) {
    for (const IntVec* v : {&tr.a(), &tr.b(), &tr.c()}) {
      if (first) {
        lo0 = hi0 = (*v)(0);
        lo1 = hi1 = (*v)(1);
        first = false;
      } else {
        lo0 = std::min(lo0, (*v)(0));
        hi0 = std::max(hi0, (*v)(0));
        lo1 = std::min(lo1, (*v)(1));
        hi1 = std::max(hi1, (*v)(1));
      }
    }
  }
  Int w = hi0 - lo0, h = hi1 - lo1;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << lo0.str()
      << " " << lo1.str() << " " << w.str() << " " << h.str() << "\">\n";
  for (const Triangle2D& tr : t.triangles) {
    out << "  <polygon points=\"" << tr.a()(0).str() << "," << tr.a()(1).str()
        << " " << tr.b()(0).str() << "," << tr.b()(1).str() << " "
        << tr.c()(0).str() << "," << tr.c()(1).str()
        << "\" fill=\"none\" stroke=\"black\" stroke-width=\"0.05\"/>\n";
  }
  out << "</svg>\n";
}

}  // namespace latgeo
