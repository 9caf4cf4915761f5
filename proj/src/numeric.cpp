#include "latgeo/numeric.hpp"

namespace latgeo {

int lex_compare(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a(i) != b(i)) return a(i) < b(i) ? -1 : 1;
  }
  return 0;
}

std::size_t hash_of(const IntVec& v) {
  std::size_t seed = boost::hash_value(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    boost::hash_combine(seed, v(i));
  }
  return seed;
}

IntVec make_point(std::initializer_list<long long> coords) {
  IntVec v(static_cast<Eigen::Index>(coords.size()));
  Eigen::Index i = 0;
  for (long long c : coords) v(i++) = c;
  return v;
}

Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if (q * b != a && ((a < 0) != (b < 0))) --q;
  return q;
}

std::string to_string(const Rat& r) {
  Int num = numerator(r);
  Int den = denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string to_string(const Int& n) { return n.str(); }

}  // namespace latgeo
