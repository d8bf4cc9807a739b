#include "rasa/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace rasa {

Integer binomial(unsigned long n, unsigned long k) {
  if (k > n) return Integer(0);
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

Rational rational_pow(const Rational& base, long e) {
  if (e < 0) {
    if (base == 0) throw std::domain_error("rational_pow: 0 to a negative power");
    return 1 / rational_pow(base, -e);
  }
  Rational acc(1), b = base;
  unsigned long m = static_cast<unsigned long>(e);
  while (m > 0) {
    if (m & 1) acc *= b;
    m >>= 1;
    if (m > 0) b *= b;
  }
  return acc;
}

namespace {

bool is_integer_token(std::string_view s) {
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view text) {
  if (text.empty()) return std::nullopt;

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    if (!is_integer_token(num) || !is_integer_token(den)) return std::nullopt;
    Rational r;
    if (mpq_set_str(r.get_mpq_t(), std::string(text).c_str(), 10) != 0) return std::nullopt;
    if (mpq_sgn(mpq_denref(r.get_mpq_t())) == 0) return std::nullopt;
    r.canonicalize();
    return r;
  }

  // Decimal literal: sign, digits, optional fraction, optional exponent.
  std::string_view s = text;
  bool neg = false;
  if (s.front() == '+' || s.front() == '-') {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  std::string digits;
  long frac_digits = 0;
  long exponent = 0;
  std::size_t i = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) digits.push_back(s[i++]);
  if (i < s.size() && s[i] == '.') {
    ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      digits.push_back(s[i++]);
      ++frac_digits;
    }
  }
  if (digits.empty()) return std::nullopt;
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    bool eneg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
      eneg = s[i] == '-';
      ++i;
    }
    if (i == s.size()) return std::nullopt;
    long ev = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      ev = ev * 10 + (s[i] - '0');
      if (ev > 100000) return std::nullopt;
      ++i;
    }
    exponent = eneg ? -ev : ev;
  }
  if (i != s.size()) return std::nullopt;

  Integer mantissa(digits, 10);
  if (neg) mantissa = -mantissa;
  long pow10 = exponent - frac_digits;
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(pow10 < 0 ? -pow10 : pow10));
  Rational r = pow10 < 0 ? Rational(mantissa, scale) : Rational(mantissa * scale);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

double to_double(const Rational& r) { return r.get_d(); }

}  // namespace rasa
