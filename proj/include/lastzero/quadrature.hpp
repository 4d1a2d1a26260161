#pragma once

#include <functional>

namespace lastzero {

// Tolerances and subdivision cap shared by every numeric integration in the
// library. At least one tolerance must be strictly positive.
struct QuadratureConfig {
  double abs_tol = 1e-12;
  double rel_tol = 1e-10;
  int max_depth = 60;  // per-panel bisection depth cap
};

void validate(const QuadratureConfig& cfg);

struct IntegralResult {
  double value = 0.0;
  double err_estimate = 0.0;
  long evaluations = 0;
  // converged implies err_estimate <= max(abs_tol, rel_tol*|value|).
  bool converged = false;
};

// Adaptive Gauss-Kronrod 7-15 over [lo, hi] (finite bounds, lo <= hi).
// Deterministic: identical inputs give bit-identical results. Panels whose
// error exceeds their share of the tolerance are bisected depth-first until
// max_depth; exhaustion yields converged=false with an honest err_estimate
// rather than a silently wrong value. A NaN/Inf integrand evaluation throws
// NumericalError. Integrands with endpoint singularities must be substituted
// by the caller first; see the distribution module for the fixed ones.
IntegralResult integrate(const std::function<double(double)>& f, double lo,
                         double hi, const QuadratureConfig& cfg = {});

// Integral over [lo, inf) via the rational map y = lo + u/(1-u), u in [0,1),
// then delegation to integrate(). The Kronrod nodes are interior, so the
// integrand is never evaluated at u = 1.
IntegralResult integrate_semi_infinite(const std::function<double(double)>& f,
                                       double lo,
                                       const QuadratureConfig& cfg = {});

// Density of the Normal(mean, variance) distribution; variance must be > 0.
double normal_pdf(double x, double mean, double variance);

}  // namespace lastzero
