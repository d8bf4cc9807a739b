#pragma once

#include <functional>

#include "rasa/numerics.hpp"

namespace rasa {

struct QuadratureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct QuadratureResult {
  double value = 0.0;
  double error_bound = 0.0;  // sum of accepted local estimates, <= tol.abs_tol
  long intervals = 0;        // subintervals examined
};

// Adaptive bisection with a fixed Gauss-Kronrod 7-15 local rule. An interval
// is accepted when its local estimate fits the error share proportional to
// its length, so the accepted shares sum to at most tol.abs_tol. Exceeding
// max_intervals throws QuadratureError naming the interval that failed.
QuadratureResult integrate(const std::function<double(double)>& f, double lo, double hi,
                           const Tolerance& tol, long max_intervals = 1'000'000);

// Iterated tensor-product form of the 1-D rule (no 2-D adaptivity). Oracle
// for integrals reduced to one dimension by a change of variables.
QuadratureResult integrate2d(const std::function<double(double, double)>& f, double xlo,
                             double xhi, double ylo, double yhi, const Tolerance& tol);

}  // namespace rasa
