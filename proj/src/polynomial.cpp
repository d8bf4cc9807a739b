#include "rasa/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace rasa {

namespace {
const Rational kZero(0);
}

RationalPoly::RationalPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

RationalPoly RationalPoly::constant(const Rational& c) { return RationalPoly({c}); }

RationalPoly RationalPoly::binomial_power(const Rational& a, int m) {
  if (m < 0) throw std::invalid_argument("binomial_power: exponent must be >= 0");
  std::vector<Rational> c(m + 1);
  for (int k = 0; k <= m; ++k) c[k] = Rational(binomial(m, k)) * rational_pow(a, k);
  return RationalPoly(std::move(c));
}

const Rational& RationalPoly::coeff(long i) const {
  if (i < 0 || i >= static_cast<long>(c_.size())) return kZero;
  return c_[i];
}

RationalPoly RationalPoly::operator+(const RationalPoly& o) const {
  std::vector<Rational> c(std::max(c_.size(), o.c_.size()), Rational(0));
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = coeff(static_cast<long>(i)) + o.coeff(static_cast<long>(i));
  return RationalPoly(std::move(c));
}

RationalPoly RationalPoly::operator-(const RationalPoly& o) const {
  std::vector<Rational> c(std::max(c_.size(), o.c_.size()), Rational(0));
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = coeff(static_cast<long>(i)) - o.coeff(static_cast<long>(i));
  return RationalPoly(std::move(c));
}

RationalPoly RationalPoly::operator*(const RationalPoly& o) const {
  if (c_.empty() || o.c_.empty()) return RationalPoly();
  std::vector<Rational> c(c_.size() + o.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
  return RationalPoly(std::move(c));
}

RationalPoly RationalPoly::divided_by_z_power(int k) const {
  if (k < 0) throw std::invalid_argument("divided_by_z_power: k must be >= 0");
  if (static_cast<long>(c_.size()) < k) {
    if (c_.empty()) return RationalPoly();
    throw std::domain_error("divided_by_z_power: polynomial shorter than divisor power");
  }
  for (int i = 0; i < k; ++i)
    if (c_[i] != 0)
      throw std::domain_error("divided_by_z_power: low-order coefficient is nonzero");
  return RationalPoly(std::vector<Rational>(c_.begin() + k, c_.end()));
}

Rational RationalPoly::eval(const Rational& z) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

std::vector<Rational> RationalPoly::taylor_at(const Rational& center) const {
  // Repeated synthetic division by (z - center), in place; after pass k the
  // slot t[k] holds the coefficient of (z - center)^k.
  std::vector<Rational> t = c_;
  if (t.empty()) return {Rational(0)};
  const std::size_t d = t.size() - 1;
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t i = d; i-- > k;) t[i] += center * t[i + 1];
  return t;
}

void RationalPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

}  // namespace rasa
