#include "rasa/scalar.hpp"

#include <charconv>
#include <cmath>

namespace rasa {

namespace {

std::string shortest_double(double d) {
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, d);
  (void)ec;
  return std::string(buf, p);
}

}  // namespace

std::string Scalar::str() const {
  return is_exact() ? rational().get_str() : shortest_double(dbl());
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same_mode(*this, o);
  if (is_exact())
    std::get<Rational>(v_) += o.rational();
  else
    std::get<double>(v_) += o.dbl();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same_mode(*this, o);
  if (is_exact())
    std::get<Rational>(v_) -= o.rational();
  else
    std::get<double>(v_) -= o.dbl();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same_mode(*this, o);
  if (is_exact())
    std::get<Rational>(v_) *= o.rational();
  else
    std::get<double>(v_) *= o.dbl();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  check_same_mode(*this, o);
  if (is_exact()) {
    if (o.rational() == 0) throw std::domain_error("Scalar: exact division by zero");
    std::get<Rational>(v_) /= o.rational();
  } else {
    std::get<double>(v_) /= o.dbl();
  }
  return *this;
}

Scalar abs(const Scalar& s) {
  if (s.is_exact()) return Scalar(Rational(::abs(s.rational())));
  return Scalar(std::fabs(s.dbl()));
}

int sign(const Scalar& s) {
  if (s.is_exact()) return mpq_sgn(s.rational().get_mpq_t());
  return s.dbl() > 0 ? 1 : (s.dbl() < 0 ? -1 : 0);
}

}  // namespace rasa
