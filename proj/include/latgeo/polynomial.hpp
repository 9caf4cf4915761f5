#pragma once

#include "latgeo/numeric.hpp"

#include <utility>
#include <vector>

namespace latgeo {

// Dense univariate polynomial with exact rational coefficients, stored in
// ascending degree order (coefficients()[k] multiplies x^k).
class Poly {
 public:
  Poly() = default;  // the zero polynomial
  explicit Poly(std::vector<Rat> coeffs);

  static Poly constant(const Rat& c);

  const std::vector<Rat>& coefficients() const { return coeffs_; }
  int degree() const;  // -1 for the zero polynomial
  bool is_zero() const { return coeffs_.empty(); }
  Rat coefficient(int k) const;  // 0 beyond the stored range
  Rat leading_coefficient() const;

  Rat operator()(const Rat& x) const;
  Rat operator()(const Int& x) const { return (*this)(Rat(x)); }

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly& operator*=(const Rat& c);

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

 private:
  void strip();
  std::vector<Rat> coeffs_;
};

// Exact interpolation through nodes (x_i, y_i); the x_i must be distinct.
Poly lagrange_interpolate(const std::vector<std::pair<Rat, Rat>>& nodes);

}  // namespace latgeo
