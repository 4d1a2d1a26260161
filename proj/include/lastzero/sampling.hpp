#pragma once

#include <vector>

#include "lastzero/distribution.hpp"
#include "lastzero/rng.hpp"

namespace lastzero {

// Stopping rule for CDF inversion: accept when the CDF misfit is within
// p_tol or the bracket has shrunk to x_tol.
struct RootFindConfig {
  double x_tol;
  double p_tol;
  int max_iter;

  // Library defaults: x_tol = 1e-10 * t (time-axis tolerance scales with the
  // horizon), p_tol = 1e-10, max_iter = 200.
  static RootFindConfig for_horizon(double t) { return {1e-10 * t, 1e-10, 200}; }
};

void validate(const RootFindConfig& cfg);

// Inverse of last_zero_cdf at prob in [0,1]: bracketed bisection refined by
// secant (Illinois false-position) steps on [0, t]. prob = 0 and 1 return
// the support endpoints exactly. Throws NumericalError when max_iter passes
// without either tolerance being met.
double quantile(const DriftedBMParams& p, double prob,
                const RootFindConfig& cfg, const QuadratureConfig& qcfg = {});
double quantile(const DriftedBMParams& p, double prob);

// n i.i.d. last-zero times by inverse transform: variate i is
// quantile(uniform(i)) where uniform(i) is draw i of the Philox substream
// selected by (seed, stream_id). The sequence is a pure function of the
// index, so internal parallelism cannot change the output.
std::vector<double> sample_last_zero(const DriftedBMParams& p, long n,
                                     RngSeed seed);

// Same scheme for the limit law Y: the upper bracket starts at 1/mu^2 and
// doubles until G exceeds the target, then the inversion proceeds as above.
std::vector<double> sample_limit_law(const LimitLaw& law, long n, RngSeed seed);

}  // namespace lastzero
