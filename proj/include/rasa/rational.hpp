#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace rasa {

using Integer = mpz_class;
using Rational = mpq_class;

// C(n, k) with exact integer arithmetic; 0 when k > n.
Integer binomial(unsigned long n, unsigned long k);

// base^e for e >= 0; negative e allowed when base != 0.
Rational rational_pow(const Rational& base, long e);

// Accepts "p/q", integers, and decimal literals with an optional exponent
// ("0.05" -> 1/20, "2.5e-3" -> 1/400). Returns nullopt on malformed input.
std::optional<Rational> parse_rational(std::string_view text);

std::string to_string(const Rational& r);
double to_double(const Rational& r);

}  // namespace rasa
