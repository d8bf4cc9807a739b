#include "rasa/basis.hpp"

#include <cmath>
#include <stdexcept>

namespace rasa {

OperatorKind OperatorKind::bernstein(int n) {
  if (n < 1) throw std::invalid_argument("bernstein: n must be a positive integer");
  return OperatorKind(Family::Bernstein, n);
}

OperatorKind OperatorKind::szasz() { return OperatorKind(Family::Szasz, 0); }

OperatorKind OperatorKind::baskakov(int n) {
  if (n < 1) throw std::invalid_argument("baskakov: n must be a positive integer");
  return OperatorKind(Family::Baskakov, n);
}

std::optional<OperatorKind> OperatorKind::parse(std::string_view name, int n) {
  if (name == "bernstein") return bernstein(n);
  if (name == "szasz") return szasz();
  if (name == "baskakov") return baskakov(n);
  return std::nullopt;
}

std::string_view OperatorKind::name() const {
  switch (family_) {
    case Family::Bernstein: return "bernstein";
    case Family::Szasz: return "szasz";
    case Family::Baskakov: return "baskakov";
  }
  return "";
}

Rational OperatorKind::node_exact(long k) const {
  if (family_ == Family::Bernstein) {
    Rational r(k, 2L * n_);
    r.canonicalize();
    return r;
  }
  return Rational(k);
}

double OperatorKind::node(long k) const {
  return family_ == Family::Bernstein ? static_cast<double>(k) / (2.0 * n_)
                                      : static_cast<double>(k);
}

bool OperatorKind::contains(double x) const {
  return family_ == Family::Bernstein ? (x >= 0.0 && x <= 1.0) : x >= 0.0;
}

void OperatorKind::require_in_domain(const Scalar& x) const {
  const double v = x.to_double();
  if (!contains(v))
    throw std::domain_error(std::string(name()) + ": point outside the operator domain");
}

Scalar bernstein_basis(int n, long v, const Scalar& x) {
  if (n < 1) throw std::invalid_argument("bernstein_basis: n must be >= 1");
  if (v < 0) throw std::invalid_argument("bernstein_basis: v must be >= 0");
  OperatorKind::bernstein(n).require_in_domain(x);
  if (v > n) return Scalar::zero(x.mode());  // the v > n convention
  if (x.is_exact()) {
    const Rational& r = x.rational();
    return Scalar(Rational(binomial(n, v)) * rational_pow(r, v) *
                  rational_pow(1 - r, n - v));
  }
  const double d = x.dbl();
  return Scalar(Rational(binomial(n, v)).get_d() * std::pow(d, static_cast<double>(v)) *
                std::pow(1.0 - d, static_cast<double>(n - v)));
}

Scalar szasz_basis(long v, const Scalar& x) {
  if (v < 0) throw std::invalid_argument("szasz_basis: v must be >= 0");
  const double d = x.to_double();
  if (d < 0) throw std::domain_error("szasz_basis: x must be >= 0");
  if (d == 0.0) return Scalar(v == 0 ? 1.0 : 0.0);
  if (v <= 30) {
    double t = std::exp(-d);
    for (long i = 1; i <= v; ++i) t *= d / i;
    return Scalar(t);
  }
  // v! overflows doubles near 171; go through logs well before that.
  return Scalar(std::exp(-d + v * std::log(d) - std::lgamma(static_cast<double>(v) + 1.0)));
}

Scalar baskakov_basis(int n, long v, const Scalar& x) {
  if (n < 1) throw std::invalid_argument("baskakov_basis: n must be >= 1");
  if (v < 0) throw std::invalid_argument("baskakov_basis: v must be >= 0");
  if (x.is_exact()) {
    const Rational& r = x.rational();
    if (r < 0) throw std::domain_error("baskakov_basis: x must be >= 0");
    return Scalar(Rational(binomial(n + v - 1, v)) * rational_pow(r, v) /
                  rational_pow(1 + r, n + v));
  }
  const double d = x.dbl();
  if (d < 0) throw std::domain_error("baskakov_basis: x must be >= 0");
  if (d == 0.0) return Scalar(v == 0 ? 1.0 : 0.0);
  if (v <= 30 && n + v <= 60) {
    return Scalar(Rational(binomial(n + v - 1, v)).get_d() *
                  std::pow(d, static_cast<double>(v)) /
                  std::pow(1.0 + d, static_cast<double>(n + v)));
  }
  const double dn = n, dv = v;
  return Scalar(std::exp(std::lgamma(dn + dv) - std::lgamma(dv + 1.0) - std::lgamma(dn) +
                         dv * std::log(d) - (dn + dv) * std::log1p(d)));
}

BasisRow basis_row(const OperatorKind& kind, const Scalar& x, const Tolerance& tol,
                   const GrowthEnvelope& envelope) {
  kind.require_in_domain(x);
  BasisRow row{kind, x, {}, std::nullopt};
  switch (kind.family()) {
    case Family::Bernstein: {
      row.values.reserve(kind.n() + 1);
      for (long v = 0; v <= kind.n(); ++v) row.values.push_back(bernstein_basis(kind.n(), v, x));
      return row;
    }
    case Family::Szasz: {
      const double d = x.to_double();
      const long N = szasz_tail_index(d, envelope, tol);
      row.values.reserve(N + 1);
      for (long v = 0; v <= N; ++v) row.values.push_back(szasz_basis(v, x));
      row.truncation = TruncationCertificate{N, szasz_tail_bound(d, envelope, N)};
      return row;
    }
    case Family::Baskakov: {
      const double d = x.to_double();
      const long N = baskakov_tail_index(kind.n(), d, envelope, tol);
      row.values.reserve(N + 1);
      for (long v = 0; v <= N; ++v)
        row.values.push_back(x.is_exact() ? baskakov_basis(kind.n(), v, x)
                                          : baskakov_basis(kind.n(), v, Scalar(d)));
      row.truncation = TruncationCertificate{N, baskakov_tail_bound(kind.n(), d, envelope, N)};
      return row;
    }
  }
  throw std::logic_error("basis_row: unreachable");
}

}  // namespace rasa
