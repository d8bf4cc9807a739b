#pragma once

#include <vector>

#include "rasa/rational.hpp"

namespace rasa {

// Dense univariate polynomial over the rationals. This is the oracle engine:
// every operation is exact, so identities checked through it have zero
// residual by construction.
class RationalPoly {
 public:
  RationalPoly() = default;
  explicit RationalPoly(std::vector<Rational> coeffs);  // coeffs[i] multiplies z^i

  static RationalPoly constant(const Rational& c);
  // (1 + a*z)^m for m >= 0
  static RationalPoly binomial_power(const Rational& a, int m);

  long degree() const { return static_cast<long>(c_.size()) - 1; }  // -1 for zero
  const Rational& coeff(long i) const;
  const std::vector<Rational>& coeffs() const { return c_; }

  RationalPoly operator+(const RationalPoly& o) const;
  RationalPoly operator-(const RationalPoly& o) const;
  RationalPoly operator*(const RationalPoly& o) const;

  // p(z) / z^k; requires the k lowest coefficients to vanish.
  RationalPoly divided_by_z_power(int k) const;

  Rational eval(const Rational& z) const;

  // Coefficients of p re-expanded around z = center, i.e. t_k with
  // p(z) = sum_k t_k (z - center)^k, by repeated synthetic division.
  std::vector<Rational> taylor_at(const Rational& center) const;

 private:
  void trim();
  std::vector<Rational> c_;
};

}  // namespace rasa
