#include "rasa/catalog.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace rasa {

namespace {

Rational require_rational(std::string_view what, std::string_view text) {
  auto r = parse_rational(text);
  if (!r) throw std::invalid_argument("FunctionSpec: bad " + std::string(what) + " value '" +
                                      std::string(text) + "'");
  return *r;
}

bool is_integral(double p) { return p == std::floor(p) && std::abs(p) < 1e9; }

}  // namespace

FunctionSpec FunctionSpec::square() {
  return FunctionSpec(Kind::Square, GrowthEnvelope::polynomial(2, 1.0));
}

FunctionSpec FunctionSpec::power(double p) {
  if (!(p >= 1.0)) throw std::invalid_argument("power: p must be >= 1");
  FunctionSpec f(Kind::Power, GrowthEnvelope::polynomial(static_cast<int>(std::ceil(p)), 1.0));
  f.p_ = p;
  return f;
}

FunctionSpec FunctionSpec::abs_dist(Rational c) {
  FunctionSpec f(Kind::Abs, GrowthEnvelope::polynomial(1, 1.0 + std::abs(to_double(c))));
  f.c_ = std::move(c);
  return f;
}

FunctionSpec FunctionSpec::hinge(Rational c) {
  FunctionSpec f(Kind::Hinge, GrowthEnvelope::polynomial(1, 1.0 + std::abs(to_double(c))));
  f.c_ = std::move(c);
  return f;
}

FunctionSpec FunctionSpec::exponential(double lambda) {
  if (!(lambda >= 0)) throw std::invalid_argument("exp: lambda must be >= 0");
  FunctionSpec f(Kind::Exp, GrowthEnvelope::exponential(lambda, 1.0));
  f.p_ = lambda;
  return f;
}

FunctionSpec FunctionSpec::entropy() {
  // |t log t| <= (1+t)^2 on [0, inf)
  return FunctionSpec(Kind::Entropy, GrowthEnvelope::polynomial(2, 1.0));
}

FunctionSpec FunctionSpec::sequence(std::vector<Scalar> values) {
  if (values.empty()) throw std::invalid_argument("sequence: needs at least one value");
  double peak = 0.0;
  for (const auto& v : values) peak = std::max(peak, std::abs(v.to_double()));
  FunctionSpec f(Kind::Sequence, GrowthEnvelope::polynomial(0, std::max(peak, 1.0)));
  f.seq_ = std::move(values);
  return f;
}

FunctionSpec FunctionSpec::parse(std::string_view text) {
  std::string_view head = text;
  std::string_view args;
  if (auto colon = text.find(':'); colon != std::string_view::npos) {
    head = text.substr(0, colon);
    args = text.substr(colon + 1);
  }
  auto keyval = [&](std::string_view key) -> std::string_view {
    if (args.substr(0, key.size()) == key && args.size() > key.size() &&
        args[key.size()] == '=')
      return args.substr(key.size() + 1);
    throw std::invalid_argument("FunctionSpec: expected '" + std::string(key) + "=...' in '" +
                                std::string(text) + "'");
  };

  if (head == "square") return square();
  if (head == "entropy") return entropy();
  if (head == "power") return power(to_double(require_rational("p", keyval("p"))));
  if (head == "abs") return abs_dist(require_rational("c", keyval("c")));
  if (head == "hinge") return hinge(require_rational("c", keyval("c")));
  if (head == "exp") return exponential(to_double(require_rational("lambda", keyval("lambda"))));
  if (head == "seq") {
    std::vector<Scalar> vals;
    std::string token;
    std::stringstream ss{std::string(args)};
    while (std::getline(ss, token, ','))
      vals.push_back(Scalar(require_rational("seq entry", token)));
    return sequence(std::move(vals));
  }
  throw std::invalid_argument("FunctionSpec: unknown function '" + std::string(text) + "'");
}

FunctionSpec FunctionSpec::with_envelope(GrowthEnvelope env) const {
  FunctionSpec f = *this;
  f.envelope_ = env;
  return f;
}

std::string FunctionSpec::describe() const {
  switch (kind_) {
    case Kind::Square: return "square";
    case Kind::Power: return "power:p=" + std::to_string(p_);
    case Kind::Abs: return "abs:c=" + to_string(c_);
    case Kind::Hinge: return "hinge:c=" + to_string(c_);
    case Kind::Exp: return "exp:lambda=" + std::to_string(p_);
    case Kind::Entropy: return "entropy";
    case Kind::Sequence: {
      std::string out = "seq:";
      for (std::size_t i = 0; i < seq_.size(); ++i) {
        if (i) out += ',';
        out += seq_[i].str();
      }
      return out;
    }
  }
  return "";
}

bool FunctionSpec::exact_capable() const {
  switch (kind_) {
    case Kind::Square:
    case Kind::Abs:
    case Kind::Hinge:
      return true;
    case Kind::Power:
      return is_integral(p_);
    case Kind::Sequence:
      for (const auto& v : seq_)
        if (!v.is_exact()) return false;
      return true;
    default:
      return false;
  }
}

Scalar FunctionSpec::evaluate(const Scalar& t) const {
  const bool exact = t.is_exact();
  switch (kind_) {
    case Kind::Square:
      return t * t;
    case Kind::Power: {
      if (t.to_double() < 0) throw std::domain_error("power: t must be >= 0");
      if (exact) {
        if (!is_integral(p_)) throw ModeError("power: non-integer exponent is Float-only");
        return Scalar(rational_pow(t.rational(), std::lround(p_)));
      }
      return Scalar(std::pow(t.dbl(), p_));
    }
    case Kind::Abs:
      return exact ? Scalar(Rational(::abs(t.rational() - c_)))
                   : Scalar(std::fabs(t.dbl() - to_double(c_)));
    case Kind::Hinge: {
      if (exact) {
        Rational d = t.rational() - c_;
        return Scalar(d > 0 ? d : Rational(0));
      }
      return Scalar(std::max(0.0, t.dbl() - to_double(c_)));
    }
    case Kind::Exp: {
      if (exact) throw ModeError("exp: Float-only function requested in Exact mode");
      return Scalar(std::exp(p_ * t.dbl()));
    }
    case Kind::Entropy: {
      if (exact) throw ModeError("entropy: Float-only function requested in Exact mode");
      const double d = t.dbl();
      if (d < 0) throw std::domain_error("entropy: t must be >= 0");
      return Scalar(d == 0.0 ? 0.0 : d * std::log(d));
    }
    case Kind::Sequence: {
      long idx = -1;
      if (exact) {
        const Rational& r = t.rational();
        if (r.get_den() != 1) throw std::domain_error("sequence: non-integer node");
        idx = static_cast<long>(r.get_num().get_si());
      } else {
        const double d = t.dbl();
        if (d != std::floor(d)) throw std::domain_error("sequence: non-integer node");
        idx = static_cast<long>(d);
      }
      if (idx < 0 || idx >= static_cast<long>(seq_.size()))
        throw std::domain_error("sequence: index out of range");
      const Scalar& v = seq_[idx];
      if (!exact) return Scalar(v.to_double());
      if (!v.is_exact()) throw ModeError("sequence: Float entry requested in Exact mode");
      return v;
    }
  }
  throw std::logic_error("FunctionSpec::evaluate: unreachable");
}

ConvexityReport check_convex_on_grid(const FunctionSpec& f, const std::vector<Scalar>& nodes) {
  if (nodes.size() < 3)
    throw std::invalid_argument("check_convex_on_grid: needs at least 3 nodes");
  // the theorems only consume equispaced second differences
  for (std::size_t i = 2; i < nodes.size(); ++i) {
    const Scalar d1 = nodes[i] - nodes[i - 1];
    const Scalar d0 = nodes[i - 1] - nodes[i - 2];
    if (d1.is_exact() ? d1 != d0 : std::fabs(d1.dbl() - d0.dbl()) > 1e-12)
      throw std::invalid_argument("check_convex_on_grid: nodes must be equally spaced");
  }
  std::vector<Scalar> a;
  a.reserve(nodes.size());
  for (const auto& t : nodes) a.push_back(f.evaluate(t));
  for (std::size_t k = 0; k + 2 < a.size(); ++k) {
    const Scalar d2 = a[k + 2] - a[k + 1] - a[k + 1] + a[k];
    if (sign(d2) < 0) return {false, static_cast<long>(k)};
  }
  return {true, -1};
}

}  // namespace rasa
