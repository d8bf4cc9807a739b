#pragma once

#include <stdexcept>
#include <string>

namespace rasa {

// Raised when a truncation or quadrature result cannot be certified within
// its stated bound. Never swallowed: callers either handle it or fail loudly.
struct CertificationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Tolerance {
  double abs_tol = 1e-10;
  double rel_tol = 0.0;

  Tolerance() = default;
  explicit Tolerance(double abs_t, double rel_t = 0.0) : abs_tol(abs_t), rel_tol(rel_t) {
    if (!(abs_tol > 0)) throw std::invalid_argument("Tolerance: abs_tol must be > 0");
    if (!(rel_tol >= 0)) throw std::invalid_argument("Tolerance: rel_tol must be >= 0");
  }

  // residual acceptance threshold for values of the given magnitude
  double margin(double scale) const { return abs_tol + rel_tol * std::abs(scale); }
};

// Declared bound on |f(t)| for t >= 0: C*(1+t)^d or C*e^(c*t). The functional
// over an infinite basis cannot be truncated with a certificate unless such a
// bound is supplied.
class GrowthEnvelope {
 public:
  enum class Kind { Polynomial, Exponential };

  static GrowthEnvelope polynomial(int degree, double constant);
  static GrowthEnvelope exponential(double rate, double constant);

  Kind kind() const { return kind_; }
  int degree() const { return degree_; }
  double rate() const { return rate_; }
  double constant() const { return constant_; }

  // C * core(t)
  double bound(double t) const { return constant_ * core(t); }

  // (1+t)^d or e^(c*t); submultiplicative: core(s+t) <= core(s)*core(t).
  double core(double t) const;
  double log_core(double t) const;

  std::string describe() const;

 private:
  GrowthEnvelope(Kind k, int d, double c, double C)
      : kind_(k), degree_(d), rate_(c), constant_(C) {}
  Kind kind_;
  int degree_ = 0;
  double rate_ = 0.0;
  double constant_ = 1.0;
};

}  // namespace rasa
