#include "rasa/numerics.hpp"

#include <cmath>

namespace rasa {

GrowthEnvelope GrowthEnvelope::polynomial(int degree, double constant) {
  if (degree < 0) throw std::invalid_argument("GrowthEnvelope: degree must be >= 0");
  if (!(constant > 0)) throw std::invalid_argument("GrowthEnvelope: constant must be > 0");
  return GrowthEnvelope(Kind::Polynomial, degree, 0.0, constant);
}

GrowthEnvelope GrowthEnvelope::exponential(double rate, double constant) {
  if (!(rate >= 0)) throw std::invalid_argument("GrowthEnvelope: rate must be >= 0");
  if (!(constant > 0)) throw std::invalid_argument("GrowthEnvelope: constant must be > 0");
  return GrowthEnvelope(Kind::Exponential, 0, rate, constant);
}

double GrowthEnvelope::core(double t) const {
  return kind_ == Kind::Polynomial ? std::pow(1.0 + t, degree_) : std::exp(rate_ * t);
}

double GrowthEnvelope::log_core(double t) const {
  return kind_ == Kind::Polynomial ? degree_ * std::log1p(t) : rate_ * t;
}

std::string GrowthEnvelope::describe() const {
  if (kind_ == Kind::Polynomial)
    return "poly(d=" + std::to_string(degree_) + ",C=" + std::to_string(constant_) + ")";
  return "exp(c=" + std::to_string(rate_) + ",C=" + std::to_string(constant_) + ")";
}

}  // namespace rasa
