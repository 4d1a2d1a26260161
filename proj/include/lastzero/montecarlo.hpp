#pragma once

#include <vector>

#include "lastzero/distribution.hpp"
#include "lastzero/rng.hpp"

namespace lastzero {

// Path count, Euler step and draw source for the Monte Carlo oracle. The
// step is rounded to an integer partition of the horizon (h = t/K with
// K = round(t/dt)); dt may not exceed a tenth of the horizon it is used
// with, and at least 100 paths are required.
struct McConfig {
  long n_paths;
  double dt;
  RngSeed seed;
  bool bridge_correction = true;
};

struct MCEstimate {
  double p_hat;   // in [0, 1]
  double stderr_; // sqrt(p_hat (1 - p_hat) / n)
  long n;
};

// Zero-hitting probability of a Brownian bridge with unit-variance noise
// between values x0 and x1 a time dt apart: 1 when the endpoints straddle
// zero, exp(-2 x0 x1 / dt) otherwise.
double bridge_cross_prob(double x0, double x1, double dt);

// One last-zero time per path. Paths follow the Euler grid
// x_{k+1} = x_k + mu h + sqrt(h) N(0,1) from x_0 = 0 (exact in distribution
// for constant drift). Intervals are scanned from the final one backward;
// an interval registers a zero on an endpoint sign change, or - with the
// bridge correction - with probability bridge_cross_prob. The first
// registering interval ends the scan and its midpoint is returned. The
// interval adjacent to the time-0 zero is excluded, so a path with no later
// crossing returns 0.
//
// Draw order per path (fixed, documented): increment draws occupy indices
// 0..K-1 of the path substream; bridge draws follow from index K in
// backward-scan order.
std::vector<double> simulate_last_zero(const DriftedBMParams& p,
                                       const McConfig& cfg);

// Fraction of paths with simulated last zero <= a, with binomial stderr.
MCEstimate estimate_last_zero_cdf(const DriftedBMParams& p, double a,
                                  const McConfig& cfg);

// Fraction of paths registering at least one zero in an interval contained
// in [w.a, w.b]; the simulation horizon must reach w.b.
MCEstimate estimate_crossing(double mu, const CrossingWindow& w,
                             double horizon, const McConfig& cfg);

}  // namespace lastzero
