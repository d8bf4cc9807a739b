#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "rasa/numerics.hpp"
#include "rasa/scalar.hpp"
#include "rasa/tails.hpp"

namespace rasa {

enum class Family { Bernstein, Szasz, Baskakov };

// One of the three operator bases, together with its domain and the node map
// fixed by the corresponding theorem: k/(2n) for Bernstein, k otherwise.
class OperatorKind {
 public:
  static OperatorKind bernstein(int n);
  static OperatorKind szasz();
  static OperatorKind baskakov(int n);
  static std::optional<OperatorKind> parse(std::string_view name, int n);

  Family family() const { return family_; }
  int n() const { return n_; }
  bool finite() const { return family_ == Family::Bernstein; }
  std::string_view name() const;

  Rational node_exact(long k) const;
  double node(long k) const;

  // [0,1] for Bernstein, [0,inf) otherwise
  bool contains(double x) const;
  void require_in_domain(const Scalar& x) const;

 private:
  OperatorKind(Family f, int n) : family_(f), n_(n) {}
  Family family_;
  int n_;
};

// p_{n,v}(x) = C(n,v) x^v (1-x)^{n-v}; identically 0 for v > n.
Scalar bernstein_basis(int n, long v, const Scalar& x);

// s_v(x) = e^{-x} x^v / v!; float route (log-space beyond small v).
// Exact inputs are narrowed to double -- the result is always Float.
Scalar szasz_basis(long v, const Scalar& x);

// b_{n,v}(x) = C(n+v-1,v) x^v / (1+x)^{n+v}; exact for rational x.
Scalar baskakov_basis(int n, long v, const Scalar& x);

struct BasisRow {
  OperatorKind kind;
  Scalar point;
  std::vector<Scalar> values;  // v = 0..N
  std::optional<TruncationCertificate> truncation;  // infinite kinds only
};

// Full row for Bernstein; truncated row with a certificate for the infinite
// kinds, where the certificate bounds sum_{v>N} basis_v(x) * envelope(v).
BasisRow basis_row(const OperatorKind& kind, const Scalar& x, const Tolerance& tol,
                   const GrowthEnvelope& envelope);

}  // namespace rasa
