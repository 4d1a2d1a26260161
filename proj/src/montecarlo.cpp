#include "lastzero/montecarlo.hpp"

#include <cmath>
#include <stdexcept>

#include "lastzero/parallel.hpp"

namespace lastzero {

namespace {

void check_config(const McConfig& cfg, double horizon) {
  if (cfg.n_paths < 100)
    throw std::domain_error("n_paths must be at least 100");
  if (!(cfg.dt > 0.0)) throw std::domain_error("dt must be positive");
  if (cfg.dt > horizon / 10.0)
    throw std::domain_error("dt must not exceed a tenth of the horizon");
}

long step_count(double horizon, double dt) {
  const long k = std::llround(horizon / dt);
  return k < 1 ? 1 : k;
}

// Simulates grid values x_1..x_steps of one path into buf (buf[k] = x_k,
// buf[0] = 0) using increment draws 0..steps-1 of the path substream.
void fill_path(const PhiloxStream& rng, std::uint64_t path, double mu,
               double h, long steps, std::vector<double>& buf) {
  const double drift = mu * h;
  const double vol = std::sqrt(h);
  buf[0] = 0.0;
  double x = 0.0;
  for (long k = 0; k < steps; ++k) {
    const double z =
        normal_inverse_cdf(rng.uniform(path, static_cast<std::uint64_t>(k)));
    x += drift + vol * z;
    buf[static_cast<size_t>(k + 1)] = x;
  }
}

// Backward scan over intervals [k_lo, k_hi]; returns the first registering
// interval index or -1. Bridge draws consume indices bridge_base, base+1, ...
// in scan order.
long scan_backward(const PhiloxStream& rng, std::uint64_t path,
                   const std::vector<double>& buf, long k_hi, long k_lo,
                   double h, bool bridge, std::uint64_t bridge_base) {
  std::uint64_t draw = bridge_base;
  for (long k = k_hi; k >= k_lo; --k) {
    const double x0 = buf[static_cast<size_t>(k)];
    const double x1 = buf[static_cast<size_t>(k + 1)];
    if (x0 * x1 <= 0.0) return k;
    if (bridge) {
      const double u = rng.uniform(path, draw++);
      if (u < std::exp(-2.0 * x0 * x1 / h)) return k;
    }
  }
  return -1;
}

}  // namespace

double bridge_cross_prob(double x0, double x1, double dt) {
  if (!(dt > 0.0)) throw std::domain_error("dt must be positive");
  if (x0 * x1 <= 0.0) return 1.0;
  return std::exp(-2.0 * x0 * x1 / dt);
}

std::vector<double> simulate_last_zero(const DriftedBMParams& p,
                                       const McConfig& cfg) {
  check_config(cfg, p.t);
  const long steps = step_count(p.t, cfg.dt);
  const double h = p.t / static_cast<double>(steps);
  const PhiloxStream rng(cfg.seed);
  std::vector<double> times(static_cast<size_t>(cfg.n_paths));
  parallel_for_range(cfg.n_paths, [&](long begin, long end) {
    std::vector<double> buf(static_cast<size_t>(steps + 1));
    for (long i = begin; i < end; ++i) {
      const auto path = static_cast<std::uint64_t>(i);
      fill_path(rng, path, p.mu, h, steps, buf);
      // Interval 0 starts at the known zero at time 0 and is excluded from
      // the scan; a path registering nowhere has its last zero there.
      const long k = scan_backward(rng, path, buf, steps - 1, 1, h,
                                   cfg.bridge_correction,
                                   static_cast<std::uint64_t>(steps));
      times[static_cast<size_t>(i)] =
          k < 0 ? 0.0 : static_cast<double>(k) * h + 0.5 * h;
    }
  });
  return times;
}

MCEstimate estimate_last_zero_cdf(const DriftedBMParams& p, double a,
                                  const McConfig& cfg) {
  if (!(a >= 0.0) || !(a <= p.t))
    throw std::domain_error("a must lie in [0, t]");
  const std::vector<double> times = simulate_last_zero(p, cfg);
  long count = 0;
  for (double ti : times)
    if (ti <= a) ++count;
  const long n = cfg.n_paths;
  const double p_hat = static_cast<double>(count) / static_cast<double>(n);
  return {p_hat, std::sqrt(p_hat * (1.0 - p_hat) / static_cast<double>(n)), n};
}

MCEstimate estimate_crossing(double mu, const CrossingWindow& w,
                             double horizon, const McConfig& cfg) {
  if (!(mu != 0.0)) throw std::domain_error("mu must be nonzero");
  if (!(horizon >= w.b))
    throw std::domain_error("horizon must reach the window end");
  check_config(cfg, horizon);
  const long steps = step_count(horizon, cfg.dt);
  const double h = horizon / static_cast<double>(steps);
  // Intervals fully inside [a, b]: k*h >= a and (k+1)*h <= b.
  const long k_lo = static_cast<long>(std::ceil(w.a / h - 1e-9));
  const long k_hi = static_cast<long>(std::floor(w.b / h + 1e-9)) - 1;
  if (k_hi < k_lo)
    throw std::domain_error("window shorter than one time step");
  const long steps_needed = k_hi + 1;

  const PhiloxStream rng(cfg.seed);
  // Per-path indicator slots summed afterward keep the estimate identical
  // for any worker count.
  std::vector<unsigned char> hits(static_cast<size_t>(cfg.n_paths), 0);
  parallel_for_range(cfg.n_paths, [&](long begin, long end) {
    std::vector<double> buf(static_cast<size_t>(steps_needed + 1));
    for (long i = begin; i < end; ++i) {
      const auto path = static_cast<std::uint64_t>(i);
      fill_path(rng, path, mu, h, steps_needed, buf);
      const long k = scan_backward(rng, path, buf, k_hi, k_lo, h,
                                   cfg.bridge_correction,
                                   static_cast<std::uint64_t>(steps));
      hits[static_cast<size_t>(i)] = k >= 0 ? 1 : 0;
    }
  });
  long total = 0;
  for (unsigned char v : hits) total += v;
  const long n = cfg.n_paths;
  const double p_hat = static_cast<double>(total) / static_cast<double>(n);
  return {p_hat, std::sqrt(p_hat * (1.0 - p_hat) / static_cast<double>(n)), n};
}

}  // namespace lastzero
