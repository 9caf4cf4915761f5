#include "latgeo/exact_linalg.hpp"

#include <utility>

namespace latgeo {

Int determinant(const IntMat& m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("determinant: matrix must be square");
  }
  const Eigen::Index n = m.rows();
  if (n == 0) return Int(1);

  IntMat a = m;
  Int prev(1);
  int sign = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      Eigen::Index piv = k + 1;
      while (piv < n && a(piv, k) == 0) ++piv;
      if (piv == n) return Int(0);
      a.row(k).swap(a.row(piv));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        // Bareiss: the division by the previous pivot is exact.
        a(i, j) = (a(k, k) * a(i, j) - a(i, k) * a(k, j)) / prev;
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  Int det = a(n - 1, n - 1);
  if (sign < 0) det = -det;
  return det;
}

Eigen::Index rank(const IntMat& m) {
  IntMat a = m;
  const Eigen::Index rows = a.rows(), cols = a.cols();
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index piv = r;
    while (piv < rows && a(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r) a.row(r).swap(a.row(piv));
    for (Eigen::Index i = r + 1; i < rows; ++i) {
      if (a(i, c) == 0) continue;
      Int f1 = a(r, c), f2 = a(i, c);
      for (Eigen::Index j = c; j < cols; ++j) {
        a(i, j) = a(i, j) * f1 - a(r, j) * f2;
      }
    }
    ++r;
  }
  return r;
}

HermiteResult hermite_normal_form(const IntMat& m) {
  const Eigen::Index rows = m.rows(), cols = m.cols();
  IntMat h = m;
  IntMat u = IntMat::Identity(rows, rows);
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    // Euclidean passes over rows r..end until the column is cleared below r.
    while (true) {
      Eigen::Index best = -1;
      for (Eigen::Index i = r; i < rows; ++i) {
        if (h(i, c) != 0 && (best < 0 || abs(h(i, c)) < abs(h(best, c)))) {
          best = i;
        }
      }
      if (best < 0) break;  // column is zero from row r down
      if (best != r) {
        h.row(r).swap(h.row(best));
        u.row(r).swap(u.row(best));
      }
      bool cleared = true;
      for (Eigen::Index i = r + 1; i < rows; ++i) {
        if (h(i, c) == 0) continue;
        Int q = h(i, c) / h(r, c);
        if (q != 0) {
          h.row(i) -= q * h.row(r);
          u.row(i) -= q * u.row(r);
        }
        if (h(i, c) != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (h(r, c) == 0) continue;  // no pivot in this column
    if (h(r, c) < 0) {
      h.row(r) *= Int(-1);
      u.row(r) *= Int(-1);
    }
    // Reduce the entries above the pivot into [0, pivot).
    for (Eigen::Index i = 0; i < r; ++i) {
      Int q = floor_div(h(i, c), h(r, c));
      if (q != 0) {
        h.row(i) -= q * h.row(r);
        u.row(i) -= q * u.row(r);
      }
    }
    ++r;
  }
  return HermiteResult{std::move(h), std::move(u)};
}

bool is_lattice_basis(const std::vector<IntVec>& vectors) {
  if (vectors.empty()) {
    throw std::invalid_argument("is_lattice_basis: no vectors");
  }
  const Eigen::Index d = vectors.front().size();
  if (static_cast<Eigen::Index>(vectors.size()) != d) {
    throw std::invalid_argument("is_lattice_basis: need exactly d vectors in Z^d");
  }
  IntMat m(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    if (vectors[i].size() != d) {
      throw std::invalid_argument("is_lattice_basis: mixed dimensions");
    }
    m.row(i) = vectors[i].transpose();
  }
  return abs(determinant(m)) == 1;
}

bool is_affine_basis(const std::vector<IntVec>& points) {
  if (points.empty()) {
    throw std::invalid_argument("is_affine_basis: no points");
  }
  const Eigen::Index d = points.front().size();
  if (static_cast<Eigen::Index>(points.size()) != d + 1) {
    throw std::invalid_argument("is_affine_basis: need exactly d+1 points in Z^d");
  }
  std::vector<IntVec> diffs;
  diffs.reserve(d);
  for (Eigen::Index i = 1; i <= d; ++i) {
    if (points[i].size() != d) {
      throw std::invalid_argument("is_affine_basis: mixed dimensions");
    }
    diffs.push_back(points[i] - points[0]);
  }
  return is_lattice_basis(diffs);
}

IntVec primitive(const IntVec& v) {
  Int g(0);
  for (Eigen::Index i = 0; i < v.size(); ++i) g = gcd(g, v(i));
  if (g == 0) throw std::invalid_argument("primitive: zero vector");
  if (g == 1) return v;
  IntVec out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out(i) = v(i) / g;
  return out;
}

std::optional<IntVec> try_hyperplane_normal(const std::vector<IntVec>& points) {
  if (points.empty()) {
    throw std::invalid_argument("hyperplane_normal: no points");
  }
  const Eigen::Index d = points.front().size();
  if (static_cast<Eigen::Index>(points.size()) != d) {
    throw std::invalid_argument("hyperplane_normal: need exactly d points in Z^d");
  }
  for (const IntVec& p : points) {
    if (p.size() != d) {
      throw std::invalid_argument("hyperplane_normal: mixed dimensions");
    }
  }
  IntMat diffs(d - 1, d);
  for (Eigen::Index i = 1; i < d; ++i) {
    diffs.row(i - 1) = (points[i] - points[0]).transpose();
  }
  // Generalized cross product: n_j = (-1)^j * minor_j, so n is orthogonal to
  // every row of diffs and integral by construction.
  IntVec n(d);
  bool all_zero = true;
  IntMat minor(d - 1, d - 1);
  for (Eigen::Index j = 0; j < d; ++j) {
    for (Eigen::Index col = 0, t = 0; col < d; ++col) {
      if (col == j) continue;
      minor.col(t++) = diffs.col(col);
    }
    Int mj = determinant(minor);
    n(j) = (j % 2 == 0) ? mj : Int(-mj);
    if (n(j) != 0) all_zero = false;
  }
  if (all_zero) return std::nullopt;  // affinely dependent
  return primitive(n);
}

IntVec hyperplane_normal(const std::vector<IntVec>& points) {
  auto n = try_hyperplane_normal(points);
  if (!n) {
    throw std::invalid_argument("hyperplane_normal: points are affinely dependent");
  }
  return *n;
}

std::optional<RatVec> solve_rational(const RatMat& a_in, const RatVec& b_in) {
  if (a_in.rows() != b_in.size()) {
    throw std::invalid_argument("solve_rational: dimension mismatch");
  }
  RatMat a = a_in;
  RatVec b = b_in;
  const Eigen::Index m = a.rows(), n = a.cols();
  std::vector<Eigen::Index> pivot_cols;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < n && r < m; ++c) {
    Eigen::Index piv = r;
    while (piv < m && a(piv, c) == 0) ++piv;
    if (piv == m) continue;
    if (piv != r) {
      a.row(r).swap(a.row(piv));
      std::swap(b(r), b(piv));
    }
    for (Eigen::Index i = 0; i < m; ++i) {
      if (i == r || a(i, c) == 0) continue;
      Rat f = a(i, c) / a(r, c);
      a.row(i) -= f * a.row(r);
      b(i) -= f * b(r);
      a(i, c) = 0;  // keep the pivot column exactly clean
    }
    pivot_cols.push_back(c);
    ++r;
  }
  for (Eigen::Index i = r; i < m; ++i) {
    if (b(i) != 0) return std::nullopt;
  }
  RatVec x = RatVec::Zero(n);
  for (Eigen::Index k = 0; k < r; ++k) {
    x(pivot_cols[k]) = b(k) / a(k, pivot_cols[k]);
  }
  return x;
}

}  // namespace latgeo
