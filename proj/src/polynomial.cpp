#include "latgeo/polynomial.hpp"

#include <algorithm>

namespace latgeo {

Poly::Poly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { strip(); }

Poly Poly::constant(const Rat& c) {
  Poly p;
  if (c != 0) p.coeffs_.push_back(c);
  return p;
}

void Poly::strip() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

int Poly::degree() const { return static_cast<int>(coeffs_.size()) - 1; }

Rat Poly::coefficient(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Rat(0);
  return coeffs_[static_cast<std::size_t>(k)];
}

Rat Poly::leading_coefficient() const {
  return coeffs_.empty() ? Rat(0) : coeffs_.back();
}

Rat Poly::operator()(const Rat& x) const {
  Rat acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Rat> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Rat(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
  return Poly(std::move(out));
}

Poly operator-(const Poly& a, const Poly& b) {
  std::vector<Rat> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Rat(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] -= b.coeffs_[i];
  return Poly(std::move(out));
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rat> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return Poly(std::move(out));
}

Poly& Poly::operator*=(const Rat& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (Rat& a : coeffs_) a *= c;
  return *this;
}

Poly lagrange_interpolate(const std::vector<std::pair<Rat, Rat>>& nodes) {
  if (nodes.empty()) {
    throw std::invalid_argument("lagrange_interpolate: no nodes");
  }
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (std::size_t j = i + 1; j < nodes.size(); ++j) {
      if (nodes[i].first == nodes[j].first) {
        throw std::invalid_argument("lagrange_interpolate: duplicate node");
      }
    }
  }
  Poly result;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    // basis_i(x) = prod_{j != i} (x - x_j) / (x_i - x_j)
    Poly basis = Poly::constant(Rat(1));
    Rat denom(1);
    for (std::size_t j = 0; j < nodes.size(); ++j) {
      if (j == i) continue;
      basis = basis * Poly({-nodes[j].first, Rat(1)});
      denom *= nodes[i].first - nodes[j].first;
    }
    basis *= nodes[i].second / denom;
    result = result + basis;
  }
  return result;
}

}  // namespace latgeo
