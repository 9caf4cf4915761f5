#include "latgeo/cone.hpp"

#include "latgeo/exact_linalg.hpp"

#include <algorithm>

namespace latgeo {

bool operator==(const GradedPoint& a, const GradedPoint& b) {
  return a.height == b.height && points_equal(a.point, b.point);
}

bool graded_less(const GradedPoint& a, const GradedPoint& b) {
  if (a.height != b.height) return a.height < b.height;
  return lex_compare(a.point, b.point) < 0;
}

GradedPoint graded_point(const PolytopeCone& c, IntVec point, Int height) {
  if (height < 0) {
    throw std::invalid_argument("graded_point: height must be >= 0");
  }
  if (!dilation_contains(c.base(), height, point)) {
    throw std::invalid_argument("graded_point: point is not in the cone at this height");
  }
  return GradedPoint{std::move(point), std::move(height)};
}

std::vector<GradedPoint> slice(const PolytopeCone& c, const Int& m) {
  std::vector<GradedPoint> out;
  for (IntVec& x : lattice_points(c.base(), m)) {
    out.push_back(GradedPoint{std::move(x), m});
  }
  return out;
}

namespace {

// Point lists and lookup sets for heights 1..bound of the cone over p.
struct SliceTable {
  std::vector<std::vector<IntVec>> pts;  // pts[h-1] = points at height h
  std::vector<PointHashSet> sets;

  SliceTable(const LatticePolytope& p, const Int& bound) {
    for (Int h = 1; h <= bound; ++h) {
      pts.push_back(lattice_points(p, h));
      sets.emplace_back(pts.back().begin(), pts.back().end());
    }
  }

  const std::vector<IntVec>& at(const Int& h) const {
    return pts[static_cast<std::size_t>(h.convert_to<long long>() - 1)];
  }
  const PointHashSet& set_at(const Int& h) const {
    return sets[static_cast<std::size_t>(h.convert_to<long long>() - 1)];
  }
};

Int default_idp_bound(const LatticePolytope& p) {
  return std::max(Int(2), Int(p.dim() - 1));
}

Int default_hilbert_bound(const LatticePolytope& p) {
  return std::max(Int(1), Int(p.dim() - 1));
}

}  // namespace

IdpReport idp_check(const LatticePolytope& p, std::optional<Int> max_height) {
  if (!p.full_dimensional()) {
    throw std::domain_error("idp_check: polytope must be full-dimensional");
  }
  IdpReport report;
  report.used_default_bound = !max_height.has_value();
  const Int bound = max_height ? *max_height : default_idp_bound(p);
  if (bound < 2) {
    throw std::invalid_argument("idp_check: max_height must be >= 2");
  }

  SliceTable table(p, bound);
  IntVec diff;
  for (Int m = 2; m <= bound; ++m) {
    const auto& level = table.at(m);
    const auto& prev = table.set_at(m - 1);
    for (const IntVec& x : level) {  // lex order within the height
      bool decomposable = false;
      for (const IntVec& y : table.at(1)) {
        diff = x - y;
        if (prev.count(diff)) {
          decomposable = true;
          break;
        }
      }
      if (!decomposable) {
        report.checked_up_to = m;
        report.holds = false;
        report.witness = GradedPoint{x, m};
        return report;
      }
    }
  }
  report.checked_up_to = bound;
  report.holds = true;
  return report;
}

HilbertBasis hilbert_basis(const LatticePolytope& p,
                           std::optional<Int> height_bound) {
  if (!p.full_dimensional()) {
    throw std::domain_error("hilbert_basis: polytope must be full-dimensional");
  }
  HilbertBasis basis;
  basis.used_default_bound = !height_bound.has_value();
  basis.height_bound = height_bound ? *height_bound : default_hilbert_bound(p);
  if (basis.height_bound < 1) {
    throw std::invalid_argument("hilbert_basis: height bound must be >= 1");
  }

  SliceTable table(p, basis.height_bound);
  // Height-1 points are always generators: they cannot split because every
  // nonzero cone point has height >= 1.
  for (const IntVec& x : table.at(1)) {
    basis.generators.push_back(GradedPoint{x, Int(1)});
  }
  IntVec diff;
  for (Int h = 2; h <= basis.height_bound; ++h) {
    for (const IntVec& x : table.at(h)) {
      bool splits = false;
      for (Int k = 1; !splits && k < h; ++k) {
        for (const IntVec& y : table.at(k)) {
          diff = x - y;
          if (table.set_at(h - k).count(diff)) {
            splits = true;
            break;
          }
        }
      }
      if (!splits) basis.generators.push_back(GradedPoint{x, h});
    }
  }
  return basis;  // construction order is already (height, lex)
}

SmoothReport is_smooth(const LatticePolytope& p) {
  if (!p.full_dimensional()) {
    throw std::domain_error("is_smooth: polytope must be full-dimensional");
  }
  const Eigen::Index d = p.ambient_dim();
  const auto& verts = p.vertices();
  const auto& facets = p.facets();
  const auto nv = verts.size();
  const auto nf = facets.size();

  // tight[i] = indices of facets vertex i lies on
  std::vector<std::vector<bool>> tight(nv, std::vector<bool>(nf, false));
  for (std::size_t i = 0; i < nv; ++i) {
    for (std::size_t f = 0; f < nf; ++f) {
      tight[i][f] = facets[f].normal.dot(verts[i]) == facets[f].offset;
    }
  }

  // Vertices i and j share an edge iff the smallest face containing both
  // (the vertices tight on every facet common to i and j) is exactly {i, j}.
  auto is_edge = [&](std::size_t i, std::size_t j) {
    for (std::size_t u = 0; u < nv; ++u) {
      if (u == i || u == j) continue;
      bool in_face = true;
      for (std::size_t f = 0; f < nf; ++f) {
        if (tight[i][f] && tight[j][f] && !tight[u][f]) {
          in_face = false;
          break;
        }
      }
      if (in_face) return false;
    }
    return true;
  };

  SmoothReport report;
  for (std::size_t i = 0; i < nv; ++i) {
    std::vector<IntVec> dirs;
    for (std::size_t j = 0; j < nv; ++j) {
      if (j == i || !is_edge(i, j)) continue;
      dirs.push_back(primitive(verts[j] - verts[i]));
    }
    std::sort(dirs.begin(), dirs.end(), LexLess{});
    if (static_cast<Eigen::Index>(dirs.size()) != d) {
      report.failures.push_back(SmoothFailure{
          verts[i], false, static_cast<std::int64_t>(dirs.size()), Int(0)});
      continue;
    }
    IntMat m(d, d);
    for (Eigen::Index r = 0; r < d; ++r) {
      m.row(r) = dirs[static_cast<std::size_t>(r)].transpose();
    }
    Int det = abs(determinant(m));
    if (det != 1) {
      report.failures.push_back(
          SmoothFailure{verts[i], true, static_cast<std::int64_t>(d), det});
    }
  }
  report.smooth = report.failures.empty();
  return report;
}

}  // namespace latgeo
