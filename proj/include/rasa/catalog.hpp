#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rasa/numerics.hpp"
#include "rasa/scalar.hpp"

namespace rasa {

// A convex test function: a named entry with parameters, or an explicit value
// sequence indexed by the grouped node index. Each spec carries a growth
// envelope that is a true bound for the function on [0, inf).
class FunctionSpec {
 public:
  enum class Kind { Square, Power, Abs, Hinge, Exp, Entropy, Sequence };

  static FunctionSpec square();
  static FunctionSpec power(double p);          // t^p, p >= 1
  static FunctionSpec abs_dist(Rational c);     // |t - c|
  static FunctionSpec hinge(Rational c);        // max(0, t - c)
  static FunctionSpec exponential(double lambda);  // e^(lambda t), lambda >= 0
  static FunctionSpec entropy();                // t log t, 0 at t = 0
  static FunctionSpec sequence(std::vector<Scalar> values);

  // "square" | "power:p=2.5" | "abs:c=0.3" | "hinge:c=1/2" | "exp:lambda=0.5"
  // | "entropy" | "seq:0,1,4,9"
  static FunctionSpec parse(std::string_view text);

  FunctionSpec with_envelope(GrowthEnvelope env) const;

  Kind kind() const { return kind_; }
  const GrowthEnvelope& envelope() const { return envelope_; }
  bool is_sequence() const { return kind_ == Kind::Sequence; }
  const std::vector<Scalar>& values() const { return seq_; }
  std::string describe() const;

  // True when the entry evaluates to a rational at rational arguments.
  bool exact_capable() const;

  // Sequence specs require t to be the integer grouped index; anything else
  // is a domain error there.
  Scalar evaluate(const Scalar& t) const;

 private:
  FunctionSpec(Kind k, GrowthEnvelope env) : kind_(k), envelope_(env) {}
  Kind kind_;
  GrowthEnvelope envelope_;
  double p_ = 2.0;       // Power exponent / Exp rate
  Rational c_ = 0;       // Abs / Hinge offset
  std::vector<Scalar> seq_;
};

struct ConvexityReport {
  bool convex = true;
  long first_violation = -1;  // index k of the first negative second difference
};

// Second-difference convexity over equispaced samples; this is exactly the
// hypothesis the decomposition consumes.
ConvexityReport check_convex_on_grid(const FunctionSpec& f, const std::vector<Scalar>& nodes);

}  // namespace rasa
