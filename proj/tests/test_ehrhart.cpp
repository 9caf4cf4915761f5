#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "latgeo/ehrhart.hpp"
#include "latgeo/generators.hpp"
#include "oracles.hpp"

#include <random>

using namespace latgeo;

namespace {

LatticePolytope decagon() {
  return convex_hull(
      {make_point({3, 0}), make_point({5, 0}), make_point({6, 1}),
       make_point({6, 4}), make_point({5, 5}), make_point({3, 6}),
       make_point({1, 6}), make_point({0, 5}), make_point({0, 2}),
       make_point({1, 1})},
      "decagon");
}

}  // namespace

TEST_CASE("counting the triangle's dilations") {
  LatticePolytope t = monomial_triangle();
  long long expected[] = {1, 3, 6, 10, 15, 21};
  for (long long m = 0; m <= 5; ++m) {
    CHECK(count(t, Int(m)) == expected[m]);
  }
}

TEST_CASE("counting matches the closed form for Reeve tetrahedra") {
  // r m^3/6 + m^2 + (12 - r) m/6 + 1
  for (long long r : {1, 2, 5, 6}) {
    LatticePolytope p = reeve(r);
    for (long long m = 0; m <= 4; ++m) {
      Rat expected = Rat(r * m * m * m, 6) + Rat(m * m) +
                     Rat((12 - r) * m, 6) + 1;
      CHECK(Rat(count(p, Int(m))) == expected);
    }
    CHECK(count(p, Int(1)) == 4);  // empty tetrahedron regardless of r
  }
}

TEST_CASE("ehrhart polynomial of the triangle") {
  EhrhartPolynomial e = ehrhart_polynomial(monomial_triangle());
  REQUIRE(e.poly.degree() == 2);
  CHECK(e.poly.coefficient(0) == Rat(1));
  CHECK(e.poly.coefficient(1) == Rat(3, 2));
  CHECK(e.poly.coefficient(2) == Rat(1, 2));
  CHECK(e.source == "triangle");
}

TEST_CASE("ehrhart polynomials of the named corpus") {
  EhrhartPolynomial sq = ehrhart_polynomial(cube(2));
  CHECK(sq.poly == Poly({Rat(1), Rat(2), Rat(1)}));

  EhrhartPolynomial c3 = ehrhart_polynomial(cube(3));
  CHECK(c3.poly == Poly({Rat(1), Rat(3), Rat(3), Rat(1)}));

  EhrhartPolynomial s3 = ehrhart_polynomial(standard_simplex(3));
  CHECK(s3.poly == Poly({Rat(1), Rat(11, 6), Rat(1), Rat(1, 6)}));

  EhrhartPolynomial d = ehrhart_polynomial(decagon());
  CHECK(d.poly == Poly({Rat(1), Rat(8), Rat(30)}));

  for (long long r : {2, 3}) {
    EhrhartPolynomial e = ehrhart_polynomial(reeve(r));
    CHECK(e.poly ==
          Poly({Rat(1), Rat(12 - r, 6), Rat(1), Rat(r, 6)}));
  }
}

TEST_CASE("ehrhart polynomial of degenerate polytopes") {
  LatticePolytope seg = convex_hull({make_point({0, 0}), make_point({2, 4})});
  EhrhartPolynomial e = ehrhart_polynomial(seg);
  CHECK(e.poly == Poly({Rat(1), Rat(2)}));  // 2m + 1 points on the segment

  LatticePolytope pt = convex_hull({make_point({7, -3})});
  EhrhartPolynomial c = ehrhart_polynomial(pt);
  CHECK(c.poly == Poly::constant(Rat(1)));
  CHECK(c.poly.degree() == 0);
}

TEST_CASE("ehrhart constant term is 1 and degree is dim across a corpus") {
  std::vector<LatticePolytope> corpus;
  corpus.push_back(monomial_triangle());
  corpus.push_back(cube(2));
  corpus.push_back(cube(3));
  corpus.push_back(standard_simplex(2));
  corpus.push_back(standard_simplex(3));
  corpus.push_back(reeve(4));
  corpus.push_back(decagon());
  corpus.push_back(dilate(monomial_triangle(), Int(3)));
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    corpus.push_back(random_polygon(seed, 6, 8));
  }
  for (const auto& p : corpus) {
    EhrhartPolynomial e = ehrhart_polynomial(p);
    CHECK(e.poly.degree() == static_cast<int>(p.dim()));
    CHECK(e.poly.coefficient(0) == Rat(1));
    CHECK(e.poly.leading_coefficient() > 0);
  }
}

TEST_CASE("leading coefficient equals volume up to dimension 3") {
  std::vector<LatticePolytope> corpus;
  corpus.push_back(monomial_triangle());
  corpus.push_back(decagon());
  corpus.push_back(cube(3));
  corpus.push_back(reeve(5));
  corpus.push_back(standard_simplex(1));
  corpus.push_back(dilate(standard_simplex(3), Int(2)));
  for (const auto& p : corpus) {
    CHECK(leading_coefficient_volume(p) == volume(p));
  }
}

TEST_CASE("ehrhart is invariant under lattice symmetries") {
  std::mt19937_64 eng(808);
  std::vector<LatticePolytope> corpus;
  corpus.push_back(decagon());
  corpus.push_back(reeve(3));
  for (const auto& p : corpus) {
    const Eigen::Index d = p.ambient_dim();
    Poly reference = ehrhart_polynomial(p).poly;
    for (int iter = 0; iter < 5; ++iter) {
      IntMat u = IntMat::Identity(d, d);
      for (int step = 0; step < 8; ++step) {
        Eigen::Index i = static_cast<Eigen::Index>(eng() % d);
        Eigen::Index j = static_cast<Eigen::Index>(eng() % d);
        if (i == j) continue;
        u.row(i) += Int(static_cast<long long>(eng() % 3) - 1) * u.row(j);
      }
      IntVec t(d);
      for (Eigen::Index i = 0; i < d; ++i) {
        t(i) = static_cast<long long>(eng() % 9) - 4;
      }
      std::vector<IntVec> moved;
      for (const IntVec& v : p.vertices()) moved.push_back(IntVec(u * v) + t);
      CHECK(ehrhart_polynomial(convex_hull(moved)).poly == reference);
    }
  }
}

TEST_CASE("pick identity on the worked examples") {
  PickReport d = pick_check(decagon());
  CHECK(d.interior == 23);
  CHECK(d.boundary == 16);
  CHECK(d.area == Rat(30));
  CHECK(d.pick_value == Rat(30));
  CHECK(d.holds);

  PickReport t = pick_check(monomial_triangle());
  CHECK(t.area == Rat(1, 2));
  CHECK(t.holds);

  PickReport sq = pick_check(cube(2));
  CHECK(sq.area == Rat(1));
  CHECK(sq.holds);

  CHECK_THROWS_AS(pick_check(reeve(1)), std::domain_error);
  CHECK_THROWS_AS(pick_check(convex_hull({make_point({0, 0}), make_point({1, 1})})),
                  std::domain_error);
}

TEST_CASE("pick identity holds on seeded random polygons") {
  for (std::uint64_t seed = 100; seed < 160; ++seed) {
    LatticePolytope p = random_polygon(seed);
    PickReport r = pick_check(p);
    CHECK(r.holds);
    // cross-check the ingredients against the brute-force counter
    CHECK(Int(r.interior + r.boundary) ==
          oracles::count_bruteforce(p.vertices(), Int(1)));
  }
}
