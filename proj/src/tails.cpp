#include "rasa/tails.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace rasa {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr long kIndexBudget = 2'000'000;

// e^{-x} x^v / v! without overflow.
double poisson_term(double x, long v) {
  if (x == 0.0) return v == 0 ? 1.0 : 0.0;
  return std::exp(-x + v * std::log(x) - std::lgamma(static_cast<double>(v) + 1.0));
}

// b_{n,v}(x) = C(n+v-1, v) x^v / (1+x)^{n+v} without overflow.
double baskakov_term(int n, double x, long v) {
  if (x == 0.0) return v == 0 ? 1.0 : 0.0;
  const double dn = n, dv = v;
  return std::exp(std::lgamma(dn + dv) - std::lgamma(dv + 1.0) - std::lgamma(dn) +
                  dv * std::log(x) - (dn + dv) * std::log1p(x));
}

long scan_for_index(const Tolerance& tol, const std::function<double(long)>& bound_at,
                    const char* what) {
  for (long N = 0; N <= kIndexBudget; ++N) {
    if (bound_at(N) < tol.abs_tol) return N;
  }
  throw CertificationError(std::string(what) + ": no certified truncation within index budget");
}

}  // namespace

double poisson_tail_bound(double x, long N) {
  if (x < 0) throw std::domain_error("poisson_tail_bound: x must be >= 0");
  if (x == 0.0) return 0.0;
  if (!(N + 2 > x)) return kInf;
  const double head = poisson_term(x, N + 1);
  return head / (1.0 - x / (N + 2));
}

double szasz_tail_bound(double x, const GrowthEnvelope& env, long N) {
  if (x < 0) throw std::domain_error("szasz_tail_bound: x must be >= 0");
  if (x == 0.0) return 0.0;
  if (env.kind() == GrowthEnvelope::Kind::Exponential) {
    // s_v(x) e^{cv} = e^{x(e^c - 1)} s_v(x e^c)
    const double rate = x * std::exp(env.rate());
    return env.constant() * std::exp(x * (std::exp(env.rate()) - 1.0)) *
           poisson_tail_bound(rate, N);
  }
  const long v = N + 1;
  const double ratio =
      (x / (v + 1)) * std::pow((v + 2.0) / (v + 1.0), env.degree());
  if (!(ratio < 1.0)) return kInf;
  const double term =
      env.constant() * poisson_term(x, v) * std::pow(1.0 + v, env.degree());
  return term / (1.0 - ratio);
}

long szasz_tail_index(double x, const GrowthEnvelope& env, const Tolerance& tol) {
  if (x < 0) throw std::domain_error("szasz_tail_index: x must be >= 0");
  if (env.kind() == GrowthEnvelope::Kind::Exponential && env.rate() >= 1.0)
    throw CertificationError(
        "szasz_tail_index: cannot certify truncation for exponential rate >= 1");
  return scan_for_index(tol, [&](long N) { return szasz_tail_bound(x, env, N); },
                        "szasz_tail_index");
}

double szasz_weighted_mass_bound(double x, const GrowthEnvelope& env) {
  if (x == 0.0) return env.bound(0.0);
  if (env.kind() == GrowthEnvelope::Kind::Exponential)
    return env.constant() * std::exp(x * (std::exp(env.rate()) - 1.0));
  double partial = 0.0;
  for (long v = 0;; ++v) {
    partial += env.constant() * poisson_term(x, v) * std::pow(1.0 + v, env.degree());
    const double tail = szasz_tail_bound(x, env, v);
    if (tail < 1e-6 * std::max(partial, 1.0) || v > kIndexBudget) return partial + tail;
  }
}

double baskakov_tail_bound(int n, double x, const GrowthEnvelope& env, long N) {
  if (n < 1) throw std::domain_error("baskakov_tail_bound: n must be >= 1");
  if (x < 0) throw std::domain_error("baskakov_tail_bound: x must be >= 0");
  if (env.kind() == GrowthEnvelope::Kind::Exponential)
    throw CertificationError("baskakov tails certify polynomial envelopes only");
  if (x == 0.0) return 0.0;
  const long v = N + 1;
  const double q = x / (1.0 + x);
  const double ratio = ((static_cast<double>(n) + v) / (v + 1)) * q *
                       std::pow((v + 2.0) / (v + 1.0), env.degree());
  if (!(ratio < 1.0)) return kInf;
  const double term =
      env.constant() * baskakov_term(n, x, v) * std::pow(1.0 + v, env.degree());
  return term / (1.0 - ratio);
}

long baskakov_tail_index(int n, double x, const GrowthEnvelope& env, const Tolerance& tol) {
  if (env.kind() == GrowthEnvelope::Kind::Exponential)
    throw CertificationError("baskakov_tail_index: polynomial envelope required");
  if (x < 0) throw std::domain_error("baskakov_tail_index: x must be >= 0");
  return scan_for_index(tol, [&](long N) { return baskakov_tail_bound(n, x, env, N); },
                        "baskakov_tail_index");
}

double baskakov_weighted_mass_bound(int n, double x, const GrowthEnvelope& env) {
  if (env.kind() == GrowthEnvelope::Kind::Exponential)
    throw CertificationError("baskakov_weighted_mass_bound: polynomial envelope required");
  if (x == 0.0) return env.bound(0.0);
  double partial = 0.0;
  for (long v = 0;; ++v) {
    partial += env.constant() * baskakov_term(n, x, v) * std::pow(1.0 + v, env.degree());
    const double tail = baskakov_tail_bound(n, x, env, v);
    if (tail < 1e-6 * std::max(partial, 1.0) || v > kIndexBudget) return partial + tail;
  }
}

}  // namespace rasa
