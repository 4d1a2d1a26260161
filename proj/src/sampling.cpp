#include "lastzero/sampling.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

#include "lastzero/errors.hpp"
#include "lastzero/parallel.hpp"

namespace lastzero {

namespace {

// Illinois false-position on a monotone CDF-style function. The bracket
// [lo, hi] must satisfy f(lo) <= target <= f(hi).
double invert_monotone(const std::function<double(double)>& f, double target,
                       double lo, double hi, double flo, double fhi,
                       const RootFindConfig& cfg, const char* what) {
  int side = 0;
  for (int iter = 0; iter < cfg.max_iter; ++iter) {
    double x;
    const double denom = fhi - flo;
    if (denom > 0.0) {
      x = lo + (target - flo) * (hi - lo) / denom;
      const double margin = 0.01 * (hi - lo);
      if (!(x > lo + margin) || !(x < hi - margin)) x = 0.5 * (lo + hi);
    } else {
      x = 0.5 * (lo + hi);
    }
    const double fx = f(x);
    if (std::fabs(fx - target) <= cfg.p_tol) return x;
    if (fx < target) {
      lo = x;
      flo = fx;
      if (side == -1) fhi = 0.5 * (fhi + target);  // Illinois damping
      side = -1;
    } else {
      hi = x;
      fhi = fx;
      if (side == +1) flo = 0.5 * (flo + target);
      side = +1;
    }
    if (hi - lo <= cfg.x_tol) return 0.5 * (lo + hi);
  }
  throw NumericalError(std::string(what) +
                       ": inversion exceeded max_iter without meeting x_tol "
                       "or p_tol");
}

}  // namespace

void validate(const RootFindConfig& cfg) {
  if (!(cfg.x_tol > 0.0) || !(cfg.p_tol > 0.0))
    throw std::domain_error("root-find tolerances must be strictly positive");
  if (cfg.max_iter < 1)
    throw std::domain_error("max_iter must be at least 1");
}

double quantile(const DriftedBMParams& p, double prob,
                const RootFindConfig& cfg, const QuadratureConfig& qcfg) {
  validate(cfg);
  if (!(prob >= 0.0) || !(prob <= 1.0))
    throw std::domain_error("prob must be in [0, 1]");
  if (prob == 0.0) return 0.0;
  if (prob == 1.0) return p.t;
  auto f = [&](double a) { return last_zero_cdf(p, a, qcfg); };
  return invert_monotone(f, prob, 0.0, p.t, 0.0, 1.0, cfg, "quantile");
}

double quantile(const DriftedBMParams& p, double prob) {
  return quantile(p, prob, RootFindConfig::for_horizon(p.t));
}

std::vector<double> sample_last_zero(const DriftedBMParams& p, long n,
                                     RngSeed seed) {
  if (n < 1) throw std::domain_error("n must be at least 1");
  const PhiloxStream rng(seed);
  const RootFindConfig cfg = RootFindConfig::for_horizon(p.t);
  std::vector<double> out(static_cast<size_t>(n));
  parallel_for_range(n, [&](long begin, long end) {
    for (long i = begin; i < end; ++i) {
      const double u = rng.uniform(0, static_cast<std::uint64_t>(i));
      out[static_cast<size_t>(i)] = quantile(p, u, cfg);
    }
  });
  return out;
}

std::vector<double> sample_limit_law(const LimitLaw& law, long n,
                                     RngSeed seed) {
  if (n < 1) throw std::domain_error("n must be at least 1");
  const PhiloxStream rng(seed);
  const double scale = 1.0 / (law.mu * law.mu);
  const RootFindConfig cfg{1e-10 * scale, 1e-10, 200};
  std::vector<double> out(static_cast<size_t>(n));
  parallel_for_range(n, [&](long begin, long end) {
    auto G = [&](double a) { return limit_law_cdf(law, a); };
    for (long i = begin; i < end; ++i) {
      const double u = rng.uniform(0, static_cast<std::uint64_t>(i));
      double hi = scale;
      double ghi = G(hi);
      while (ghi < u) {
        hi *= 2.0;
        ghi = G(hi);
        if (!(hi < 1e300))
          throw NumericalError("sample_limit_law: bracket blew up");
      }
      out[static_cast<size_t>(i)] =
          invert_monotone(G, u, 0.0, hi, 0.0, ghi, cfg, "sample_limit_law");
    }
  });
  return out;
}

}  // namespace lastzero
