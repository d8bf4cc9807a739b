#pragma once

#include <stdexcept>
#include <string>
#include <variant>

#include "rasa/rational.hpp"

namespace rasa {

enum class Mode { Exact, Float };

// Thrown when Exact and Float operands meet in one expression.
struct ModeError : std::logic_error {
  using std::logic_error::logic_error;
};

// A number carried either as an arbitrary-precision rational or as a double.
// Exact-mode arithmetic is closed and error-free; the two modes never mix
// silently -- an expression over both throws ModeError.
class Scalar {
 public:
  Scalar() : v_(Rational(0)) {}
  explicit Scalar(Rational r) : v_(std::move(r)) {}
  explicit Scalar(double d) : v_(d) {}
  explicit Scalar(long num, long den) : v_(Rational(num, den)) {
    std::get<Rational>(v_).canonicalize();
  }

  static Scalar zero(Mode m) { return m == Mode::Exact ? Scalar(Rational(0)) : Scalar(0.0); }
  static Scalar one(Mode m) { return m == Mode::Exact ? Scalar(Rational(1)) : Scalar(1.0); }

  Mode mode() const { return std::holds_alternative<Rational>(v_) ? Mode::Exact : Mode::Float; }
  bool is_exact() const { return mode() == Mode::Exact; }

  const Rational& rational() const {
    if (!is_exact()) throw ModeError("Scalar: rational() on a Float value");
    return std::get<Rational>(v_);
  }
  double dbl() const {
    if (is_exact()) throw ModeError("Scalar: dbl() on an Exact value");
    return std::get<double>(v_);
  }

  // Lossy view, valid in either mode.
  double to_double() const {
    return is_exact() ? std::get<Rational>(v_).get_d() : std::get<double>(v_);
  }

  // "p/q" in Exact mode, shortest round-trip decimal in Float mode.
  std::string str() const;

  Scalar operator-() const {
    return is_exact() ? Scalar(Rational(-std::get<Rational>(v_))) : Scalar(-std::get<double>(v_));
  }

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    check_same_mode(a, b);
    return a.is_exact() ? a.rational() == b.rational() : a.dbl() == b.dbl();
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
  friend bool operator<(const Scalar& a, const Scalar& b) {
    check_same_mode(a, b);
    return a.is_exact() ? a.rational() < b.rational() : a.dbl() < b.dbl();
  }
  friend bool operator>(const Scalar& a, const Scalar& b) { return b < a; }
  friend bool operator<=(const Scalar& a, const Scalar& b) { return !(b < a); }
  friend bool operator>=(const Scalar& a, const Scalar& b) { return !(a < b); }

 private:
  static void check_same_mode(const Scalar& a, const Scalar& b) {
    if (a.mode() != b.mode())
      throw ModeError("Scalar: Exact and Float operands in one expression");
  }
  std::variant<Rational, double> v_;
};

Scalar abs(const Scalar& s);
int sign(const Scalar& s);

}  // namespace rasa
