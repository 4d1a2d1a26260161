#pragma once

#include "lastzero/quadrature.hpp"

namespace lastzero {

// Drifted Brownian motion B(s) + mu*s observed on [0, t]; T denotes its last
// zero crossing time in [0, t]. The drift must be nonzero and the horizon
// positive. The scaled family with drift mu*sqrt(r) is built through
// scaled(), keeping a single source of truth for the drift.
struct DriftedBMParams {
  double mu;
  double t;

  DriftedBMParams(double mu, double t);
  static DriftedBMParams scaled(double mu, double r, double t);
};

// Time window [a, b] with 0 < a < b for zero-crossing probabilities.
struct CrossingWindow {
  double a;
  double b;

  CrossingWindow(double a, double b);
};

// Good rate function of the r-speed principle: mu^2*b/2 on [0,t], +inf
// elsewhere.
struct RateFunctionJ {
  double mu;
  double t;

  RateFunctionJ(double mu, double t);
  double operator()(double b) const;
};

// Good rate function of the moderate-scaling principles: mu^2*b/2 on
// [0,inf), +inf for b < 0. Restricting to [0,t] recovers RateFunctionJ.
struct RateFunctionJTilde {
  double mu;

  explicit RateFunctionJTilde(double mu);
  double operator()(double b) const;
};

// Weak limit Y of r*T under drift mu*sqrt(r) as r grows; G is its CDF.
struct LimitLaw {
  double mu;

  explicit LimitLaw(double mu);
};

// P(T <= a). Exactly 0 at a = 0 and 1 at a = t; inputs outside [0, t] clamp
// to the support values 0 and 1.
double last_zero_cdf(const DriftedBMParams& p, double a,
                     const QuadratureConfig& cfg = {});

// log P(T >= z) for z in [0, t], computed with the dominant exponential
// factored analytically:
//   log P = -mu^2 z/2 + log((2/pi) * int_0^U exp(-(mu^2 z/2) y^2)/(1+y^2) dy)
// with U = sqrt((t-z)/z). Stays finite for z < t however large mu^2 z gets;
// z = 0 gives 0 and z = t gives -inf. Out-of-range z throws.
double last_zero_log_survival(const DriftedBMParams& p, double z,
                              const QuadratureConfig& cfg = {});

// Density of T. Zero outside [0, t]; +inf at the endpoints where the
// integrable singularities sit. The inner integral is evaluated after the
// fixed substitution y = a + u^2 which removes the 1/sqrt(y-a) kernel.
double last_zero_pdf(const DriftedBMParams& p, double a,
                     const QuadratureConfig& cfg = {});

// E[T] = (1 - exp(-mu^2 t/2)) / mu^2, computed via expm1 so the driftless
// limit t/2 is reached without cancellation.
double last_zero_mean(const DriftedBMParams& p);

// Var[T], algebraically rearranged as (t^2/4)*(3*A(x)/x^2 - (E1(x)/x)^2)
// with x = mu^2 t/2, E1 = 1-exp(-x), A = 1-(1+x)exp(-x); A/x^2 switches to
// its series for small x. Strictly positive, driftless limit t^2/8.
double last_zero_variance(const DriftedBMParams& p);

// Probability of at least one zero of the drifted path inside [a, b],
// evaluated in the substituted form
//   (2/pi) * int_0^sqrt((b-a)/a) exp(-(mu^2 a/2)(1+y^2))/(1+y^2) dy.
double crossing_probability(double mu, const CrossingWindow& w,
                            const QuadratureConfig& cfg = {});

// log of the above with the exp(-mu^2 a/2) factor pulled out analytically;
// finite for arbitrarily large mu^2 a.
double crossing_log_probability(double mu, const CrossingWindow& w,
                                const QuadratureConfig& cfg = {});

// G(a) = 1 - (2/pi) * int_0^inf exp(-(mu^2 a/2)(1+y^2))/(1+y^2) dy, via the
// semi-infinite map. Zero for a <= 0.
double limit_law_cdf(const LimitLaw& law, double a,
                     const QuadratureConfig& cfg = {});

// E[Y] = 1/mu^2.
double limit_law_mean(const LimitLaw& law);

// Var[Y] = 2/mu^4.
double limit_law_variance(const LimitLaw& law);

}  // namespace lastzero
