#pragma once

// Named polytope families and the seeded random polygon stream used by the
// tests, the CLI `gen` command, and the search harness.

#include "latgeo/polytope.hpp"

#include <cstdint>

namespace latgeo {

// conv(0, e_1, ..., e_d), label "simplex(d)". d >= 1.
LatticePolytope standard_simplex(int d);

// conv((0,0), (1,0), (1,1)), the running 2D example; label "triangle".
LatticePolytope monomial_triangle();

// Reeve tetrahedron conv(0, e_1, e_2, (1,1,r)); label "reeve(r)". r >= 1.
LatticePolytope reeve(const Int& r);

// {0,1}^d, label "cube(d)". d >= 1.
LatticePolytope cube(int d);

// k * p (vertices scaled by k), label "dilate(<label>,k)". k >= 1.
LatticePolytope dilate(const LatticePolytope& p, const Int& k);

// Convex hull of up to max_points draws from {0..bound}^2, retrying with
// fresh draws from the same stream until full-dimensional. Deterministic for
// a given seed: the engine is mt19937_64 and each coordinate is drawn as
// engine() % (bound+1) (std::uniform_int_distribution is implementation-
// defined, so it is avoided on purpose). Label "random(seed)".
LatticePolytope random_polygon(std::uint64_t seed, int bound = 8,
                               int max_points = 10);

}  // namespace latgeo
