#pragma once

#include "rasa/numerics.hpp"

namespace rasa {

// Rigorous truncation bounds for the infinite Szasz and Baskakov series.
// Every bound here is a certified upper estimate of the discarded tail;
// truncation without one is never performed.

struct TruncationCertificate {
  long index = 0;          // series kept through this index
  double tail_bound = 0.0; // certified bound on everything beyond it
};

// sum_{v>N} e^{-x} x^v / v!  <=  e^{-x} * x^{N+1}/(N+1)! * (1 - x/(N+2))^{-1},
// finite when N+2 > x; +inf otherwise.
double poisson_tail_bound(double x, long N);

// Certified bound on sum_{v>N} s_v(x) * C * core(v) for the declared envelope.
// Exponential envelopes fold into a Poisson tail at rate x*e^c; polynomial
// envelopes use the exact term ratio x/(v+1) * ((v+2)/(v+1))^d, which is
// nonincreasing, so the first ratio dominates a geometric majorant.
double szasz_tail_bound(double x, const GrowthEnvelope& envelope, long N);

// Smallest N whose certified bound drops below tol.abs_tol. Envelopes with
// exponential rate >= 1 are rejected outright (CertificationError) rather
// than silently truncated.
long szasz_tail_index(double x, const GrowthEnvelope& envelope, const Tolerance& tol);

// Upper bound on the full weighted series sum_{v>=0} s_v(x) * C * core(v).
double szasz_weighted_mass_bound(double x, const GrowthEnvelope& envelope);

// Baskakov analogues. The term ratio b_{n,v+1}/b_{n,v} = (n+v)/(v+1) * x/(1+x)
// is eventually < 1, which certifies a geometric tail; only polynomial
// envelopes are admissible (exponential weights can defeat the ratio).
double baskakov_tail_bound(int n, double x, const GrowthEnvelope& envelope, long N);
long baskakov_tail_index(int n, double x, const GrowthEnvelope& envelope, const Tolerance& tol);
double baskakov_weighted_mass_bound(int n, double x, const GrowthEnvelope& envelope);

}  // namespace rasa
