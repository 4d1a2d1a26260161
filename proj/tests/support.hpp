#pragma once

// Test-side oracles, kept independent of the library paths they check.

#include <algorithm>
#include <cmath>
#include <vector>

namespace testsupport {

constexpr double kPi = 3.141592653589793238462643383279503;

// Driftless (arcsine-law) oracles for the mu -> 0 degeneration.
inline double arcsine_cdf(double a, double t) {
  if (a <= 0.0) return 0.0;
  if (a >= t) return 1.0;
  return (2.0 / kPi) * std::asin(std::sqrt(a / t));
}

inline double arcsine_pdf(double a, double t) {
  return 1.0 / (kPi * std::sqrt(a * (t - a)));
}

inline double arcsine_mean(double t) { return 0.5 * t; }

inline double arcsine_variance(double t) { return t * t / 8.0; }

// Classic driftless zero-crossing probability for a window [a, b].
inline double arcsine_crossing(double a, double b) {
  return (2.0 / kPi) * std::atan(std::sqrt((b - a) / a));
}

// One-sample Kolmogorov-Smirnov statistic of `samples` against `cdf`.
template <class Cdf>
double ks_statistic(std::vector<double> samples, Cdf cdf) {
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double d = 0.0;
  for (size_t i = 0; i < samples.size(); ++i) {
    const double f = cdf(samples[i]);
    const double lo = f - static_cast<double>(i) / n;
    const double hi = static_cast<double>(i + 1) / n - f;
    d = std::max({d, lo, hi});
  }
  return d;
}

// 5 percent one-sample KS critical value (asymptotic).
inline double ks_critical_5pct(long n) {
  return 1.36 / std::sqrt(static_cast<double>(n));
}

inline double mean_of(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

inline double variance_of(const std::vector<double>& v) {
  const double m = mean_of(v);
  double s = 0.0;
  for (double x : v) s += (x - m) * (x - m);
  return s / static_cast<double>(v.size() - 1);
}

}  // namespace testsupport
