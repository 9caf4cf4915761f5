#pragma once

// Exact scalar types and small helpers shared by every module.
//
// Int is arbitrary precision (GMP-backed), Rat is always canonical: lowest
// terms, positive denominator. Vectors and matrices are Eigen dense types
// over these scalars, so the usual expression syntax (m * v, a + b, dot)
// works and is exact.

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <boost/functional/hash.hpp>
#include <Eigen/Core>

#include <cstdint>
#include <initializer_list>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace latgeo {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

using IntVec = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using IntMat = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using RatVec = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;
using RatMat = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;

// Thrown by the text parsers (polytope files, generator specs); the CLI maps
// it to exit code 1.
class parse_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Thrown on filesystem failures (missing input, unwritable results file).
class io_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Lexicographic comparison; shorter vectors sort first so mixed sizes still
// get a total order.
int lex_compare(const IntVec& a, const IntVec& b);

inline bool points_equal(const IntVec& a, const IntVec& b) {
  return lex_compare(a, b) == 0;
}

struct LexLess {
  bool operator()(const IntVec& a, const IntVec& b) const {
    return lex_compare(a, b) < 0;
  }
};

using PointSet = std::set<IntVec, LexLess>;

std::size_t hash_of(const IntVec& v);

struct VecHash {
  std::size_t operator()(const IntVec& v) const { return hash_of(v); }
};
struct VecEq {
  bool operator()(const IntVec& a, const IntVec& b) const {
    return points_equal(a, b);
  }
};

using PointHashSet = std::unordered_set<IntVec, VecHash, VecEq>;

IntVec make_point(std::initializer_list<long long> coords);

// Division rounding toward -inf (operator/ on Int truncates toward zero).
Int floor_div(const Int& a, const Int& b);

// "p/q" in lowest terms, or just "n" when the denominator is 1.
std::string to_string(const Rat& r);
std::string to_string(const Int& n);

}  // namespace latgeo
