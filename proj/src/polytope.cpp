#include "latgeo/polytope.hpp"

#include "latgeo/exact_linalg.hpp"

#include <algorithm>
#include <numeric>

namespace latgeo {

namespace {

// Lexicographic k-subset iteration over {0..n-1}.
std::vector<Eigen::Index> first_subset(Eigen::Index k) {
  std::vector<Eigen::Index> idx(static_cast<std::size_t>(k));
  std::iota(idx.begin(), idx.end(), Eigen::Index{0});
  return idx;
}

bool next_subset(std::vector<Eigen::Index>& idx, Eigen::Index n) {
  const auto k = static_cast<Eigen::Index>(idx.size());
  Eigen::Index i = k - 1;
  while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
  if (i < 0) return false;
  ++idx[static_cast<std::size_t>(i)];
  for (Eigen::Index j = i + 1; j < k; ++j) {
    idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
  return true;
}

struct FacetLess {
  bool operator()(const Facet& a, const Facet& b) const {
    int c = lex_compare(a.normal, b.normal);
    if (c != 0) return c < 0;
    return a.offset < b.offset;
  }
};

// Supporting-hyperplane scan over d-subsets. Requires the points to span R^d
// affinely; every hyperplane through d affinely independent hull points that
// has all points on one side is a facet, so this finds exactly the facet list.
std::vector<Facet> enumerate_facets(const std::vector<IntVec>& pts,
                                    Eigen::Index d) {
  const auto n = static_cast<Eigen::Index>(pts.size());
  std::set<Facet, FacetLess> found;
  std::vector<Eigen::Index> idx = first_subset(d);
  std::vector<IntVec> sub(static_cast<std::size_t>(d));
  do {
    for (std::size_t t = 0; t < sub.size(); ++t) {
      sub[t] = pts[static_cast<std::size_t>(idx[t])];
    }
    auto nrm = try_hyperplane_normal(sub);
    if (!nrm) continue;
    Int c0 = nrm->dot(sub[0]);
    bool above = false, below = false;
    for (const IntVec& p : pts) {
      Int s = nrm->dot(p);
      if (s > c0) above = true;
      else if (s < c0) below = true;
      if (above && below) break;
    }
    if (above && below) continue;
    Facet f;
    if (above) {  // flip so the polytope satisfies normal . x <= offset
      f.normal = -*nrm;
      f.offset = -c0;
    } else {
      f.normal = *nrm;
      f.offset = c0;
    }
    found.insert(std::move(f));
  } while (next_subset(idx, n));
  return {found.begin(), found.end()};
}

// Is x a convex combination of the points in s? Caratheodory: it suffices to
// scan affinely independent subsets of size <= max_support and solve the
// lifted system exactly. max_support is aff.dim(s cup {x}) + 1 or more.
bool in_hull(const IntVec& x, const std::vector<IntVec>& s,
             Eigen::Index max_support) {
  const auto n = static_cast<Eigen::Index>(s.size());
  const Eigen::Index d = x.size();
  const Eigen::Index cap = std::min(max_support, n);
  for (Eigen::Index t = 1; t <= cap; ++t) {
    std::vector<Eigen::Index> idx = first_subset(t);
    do {
      IntMat lifted(d + 1, t);
      for (Eigen::Index j = 0; j < t; ++j) {
        const IntVec& p = s[static_cast<std::size_t>(idx[static_cast<std::size_t>(j)])];
        for (Eigen::Index i = 0; i < d; ++i) lifted(i, j) = p(i);
        lifted(d, j) = 1;
      }
      if (rank(lifted) != t) continue;  // affinely dependent subset
      RatMat a = lifted.cast<Rat>();
      RatVec b(d + 1);
      for (Eigen::Index i = 0; i < d; ++i) b(i) = Rat(x(i));
      b(d) = 1;
      auto sol = solve_rational(a, b);
      if (!sol) continue;
      bool nonneg = true;
      for (Eigen::Index j = 0; j < t; ++j) {
        if ((*sol)(j) < 0) {
          nonneg = false;
          break;
        }
      }
      if (nonneg) return true;
    } while (next_subset(idx, n));
  }
  return false;
}

Int det2(const IntVec& u, const IntVec& v) { return u(0) * v(1) - u(1) * v(0); }

Int det3(const IntVec& a, const IntVec& b, const IntVec& c) {
  return a(0) * (b(1) * c(2) - b(2) * c(1)) -
         a(1) * (b(0) * c(2) - b(2) * c(0)) +
         a(2) * (b(0) * c(1) - b(1) * c(0));
}

}  // namespace

const std::vector<Facet>& LatticePolytope::facets() const {
  if (!full_dimensional()) {
    throw std::domain_error(
        "facets: polytope is degenerate (not full-dimensional)");
  }
  return facets_;
}

LatticePolytope convex_hull(const std::vector<IntVec>& points,
                            std::string label) {
  if (points.empty()) {
    throw std::invalid_argument("convex_hull: empty point set");
  }
  const Eigen::Index d = points.front().size();
  if (d < 1) throw std::invalid_argument("convex_hull: ambient dimension must be >= 1");
  for (const IntVec& p : points) {
    if (p.size() != d) {
      throw std::invalid_argument("convex_hull: mixed ambient dimensions");
    }
  }

  PointSet uniq(points.begin(), points.end());
  std::vector<IntVec> pts(uniq.begin(), uniq.end());  // lex sorted

  Eigen::Index k = 0;
  if (pts.size() > 1) {
    IntMat diffs(static_cast<Eigen::Index>(pts.size()) - 1, d);
    for (std::size_t i = 1; i < pts.size(); ++i) {
      diffs.row(static_cast<Eigen::Index>(i) - 1) = (pts[i] - pts[0]).transpose();
    }
    k = rank(diffs);
  }

  LatticePolytope poly;
  poly.ambient_dim_ = d;
  poly.dim_ = k;
  poly.label_ = std::move(label);

  if (k == d) {
    poly.facets_ = enumerate_facets(pts, d);
    // A point is a vertex iff its tight facet normals span R^d.
    for (const IntVec& p : pts) {
      IntMat tight(static_cast<Eigen::Index>(poly.facets_.size()), d);
      Eigen::Index rows = 0;
      for (const Facet& f : poly.facets_) {
        if (f.normal.dot(p) == f.offset) {
          tight.row(rows++) = f.normal.transpose();
        }
      }
      if (rows >= d && rank(tight.topRows(rows)) == d) {
        poly.vertices_.push_back(p);
      }
    }
  } else {
    // Degenerate: keep p iff it is not a convex combination of the others.
    for (std::size_t i = 0; i < pts.size(); ++i) {
      std::vector<IntVec> others;
      others.reserve(pts.size() - 1);
      for (std::size_t j = 0; j < pts.size(); ++j) {
        if (j != i) others.push_back(pts[j]);
      }
      if (!in_hull(pts[i], others, k + 1)) {
        poly.vertices_.push_back(pts[i]);
      }
    }
  }
  return poly;
}

Membership classify(const LatticePolytope& p, const IntVec& x) {
  if (!p.full_dimensional()) {
    throw std::domain_error("classify: degenerate polytope has no facet description");
  }
  if (x.size() != p.ambient_dim()) {
    throw std::invalid_argument("classify: point dimension mismatch");
  }
  bool on_boundary = false;
  for (const Facet& f : p.facets()) {
    Int s = f.normal.dot(x);
    if (s > f.offset) return Membership::Outside;
    if (s == f.offset) on_boundary = true;
  }
  return on_boundary ? Membership::Boundary : Membership::Interior;
}

bool dilation_contains(const LatticePolytope& p, const Int& m, const IntVec& x) {
  if (m < 0) throw std::invalid_argument("dilation_contains: m must be >= 0");
  if (x.size() != p.ambient_dim()) {
    throw std::invalid_argument("dilation_contains: point dimension mismatch");
  }
  if (m == 0) {
    for (Eigen::Index i = 0; i < x.size(); ++i) {
      if (x(i) != 0) return false;
    }
    return true;
  }
  if (p.full_dimensional()) {
    for (const Facet& f : p.facets()) {
      if (f.normal.dot(x) > m * f.offset) return false;
    }
    return true;
  }
  std::vector<IntVec> scaled;
  scaled.reserve(p.vertices().size());
  for (const IntVec& v : p.vertices()) scaled.push_back(m * v);
  return in_hull(x, scaled, p.dim() + 1);
}

std::vector<IntVec> lattice_points(const LatticePolytope& p, const Int& m) {
  if (m < 0) throw std::invalid_argument("lattice_points: m must be >= 0");
  const Eigen::Index d = p.ambient_dim();
  if (m == 0) return {IntVec::Zero(d)};

  IntVec lo(d), hi(d);
  for (Eigen::Index j = 0; j < d; ++j) {
    Int mn = p.vertices().front()(j), mx = mn;
    for (const IntVec& v : p.vertices()) {
      if (v(j) < mn) mn = v(j);
      if (v(j) > mx) mx = v(j);
    }
    lo(j) = m * mn;
    hi(j) = m * mx;
  }

  const bool full = p.full_dimensional();
  std::vector<Int> scaled_offsets;
  std::vector<IntVec> scaled_verts;
  if (full) {
    scaled_offsets.reserve(p.facets().size());
    for (const Facet& f : p.facets()) scaled_offsets.push_back(m * f.offset);
  } else {
    scaled_verts.reserve(p.vertices().size());
    for (const IntVec& v : p.vertices()) scaled_verts.push_back(m * v);
  }

  // Odometer walk with coordinate 0 most significant: output is lex sorted.
  std::vector<IntVec> out;
  IntVec x = lo;
  Int acc;
  while (true) {
    bool inside = true;
    if (full) {
      const auto& facets = p.facets();
      for (std::size_t fi = 0; fi < facets.size(); ++fi) {
        acc = 0;
        const IntVec& nrm = facets[fi].normal;
        for (Eigen::Index j = 0; j < d; ++j) acc += nrm(j) * x(j);
        if (acc > scaled_offsets[fi]) {
          inside = false;
          break;
        }
      }
    } else {
      inside = in_hull(x, scaled_verts, p.dim() + 1);
    }
    if (inside) out.push_back(x);

    Eigen::Index j = d - 1;
    while (j >= 0) {
      if (x(j) < hi(j)) {
        ++x(j);
        break;
      }
      x(j) = lo(j);
      --j;
    }
    if (j < 0) break;
  }
  return out;
}

BoundaryInteriorCounts boundary_interior_counts(const LatticePolytope& p) {
  if (p.ambient_dim() != 2 || !p.full_dimensional()) {
    throw std::domain_error(
        "boundary_interior_counts: full-dimensional polygons only");
  }
  BoundaryInteriorCounts counts;
  for (const IntVec& x : lattice_points(p, Int(1))) {
    if (classify(p, x) == Membership::Interior) {
      ++counts.interior;
    } else {
      ++counts.boundary;
    }
  }
  return counts;
}

Rat volume(const LatticePolytope& p) {
  if (!p.full_dimensional()) {
    throw std::domain_error("volume: polytope is degenerate");
  }
  const Eigen::Index d = p.ambient_dim();
  const auto& verts = p.vertices();
  if (d == 1) {
    return Rat(verts.back()(0) - verts.front()(0));
  }
  if (d == 2) {
    // Fan from the lex-smallest vertex; sort the rest by angle. All offsets
    // lie in the half-plane x >= 0 (x == 0 implies y > 0), so the cross
    // product comparator is a strict weak order.
    const IntVec& v0 = verts.front();
    std::vector<IntVec> rest(verts.begin() + 1, verts.end());
    std::sort(rest.begin(), rest.end(), [&](const IntVec& a, const IntVec& b) {
      return det2(a - v0, b - v0) > 0;
    });
    Int area2(0);
    for (std::size_t i = 0; i + 1 < rest.size(); ++i) {
      area2 += det2(rest[i] - v0, rest[i + 1] - v0);
    }
    return Rat(area2, Int(2));
  }
  if (d == 3) {
    // Pyramid fan from the lex-smallest vertex over the facets that do not
    // contain it; each facet polygon is fan-triangulated from its own
    // lex-smallest vertex after an angular sort inside the facet plane.
    const IntVec& v0 = verts.front();
    Int vol6(0);
    for (const Facet& f : p.facets()) {
      if (f.normal.dot(v0) == f.offset) continue;
      std::vector<IntVec> w;
      for (const IntVec& v : verts) {
        if (f.normal.dot(v) == f.offset) w.push_back(v);
      }
      const IntVec& w0 = w.front();
      std::vector<IntVec> rest(w.begin() + 1, w.end());
      std::sort(rest.begin(), rest.end(), [&](const IntVec& a, const IntVec& b) {
        return det3(f.normal, a - w0, b - w0) > 0;
      });
      for (std::size_t i = 0; i + 1 < rest.size(); ++i) {
        Int t = det3(w0 - v0, rest[i] - v0, rest[i + 1] - v0);
        vol6 += abs(t);
      }
    }
    return Rat(vol6, Int(6));
  }
  throw std::domain_error("volume: implemented for dimension <= 3 only");
}

}  // namespace latgeo
