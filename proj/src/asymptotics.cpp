#include "lastzero/asymptotics.hpp"

#include <cmath>
#include <stdexcept>

namespace lastzero {

namespace detail {

double aitken_last3(const std::vector<double>& values) {
  if (values.size() < 3)
    throw std::domain_error("extrapolation needs at least 3 rows");
  const double s0 = values[values.size() - 3];
  const double s1 = values[values.size() - 2];
  const double s2 = values[values.size() - 1];
  const double d1 = s1 - s0;
  const double d2 = s2 - s1;
  const double denom = d2 - d1;
  if (!std::isfinite(denom) || std::fabs(denom) < 1e-14) return s2;
  return s2 - d2 * d2 / denom;
}

}  // namespace detail

ModerateScale::ModerateScale(double beta_) : beta(beta_) {
  if (!(beta > 0.0) || !(beta < 1.0))
    throw std::domain_error("beta must lie in (0, 1)");
}

double ModerateScale::gamma(double r) const { return std::pow(r, -beta); }

double ModerateScale::speed(double r) const { return std::pow(r, beta); }

RGrid::RGrid(double r_min_, double r_max_, int points_)
    : r_min(r_min_), r_max(r_max_), points(points_) {
  if (!(r_min > 0.0)) throw std::domain_error("r_min must be positive");
  if (!(r_max > r_min)) throw std::domain_error("r_max must exceed r_min");
  if (points < 2) throw std::domain_error("grid needs at least 2 points");
}

std::vector<double> RGrid::values() const {
  std::vector<double> out(static_cast<size_t>(points));
  const double ratio = r_max / r_min;
  for (int i = 0; i < points; ++i)
    out[static_cast<size_t>(i)] =
        r_min * std::pow(ratio, static_cast<double>(i) /
                                    static_cast<double>(points - 1));
  out.front() = r_min;
  out.back() = r_max;
  return out;
}

ScanTable ldp_scan(double mu, double t, double z, const RGrid& grid,
                   const QuadratureConfig& cfg) {
  if (!(z > 0.0) || !(z <= t))
    throw std::domain_error("z must lie in (0, t]");
  ScanTable table;
  table.meta = {"ldp", mu, t, z, 0.0, 0.0, 0.0, grid};
  const double theory = -0.5 * mu * mu * z;
  for (double r : grid.values()) {
    const DriftedBMParams p = DriftedBMParams::scaled(mu, r, t);
    ScanRow row;
    row.r = r;
    row.raw_log = last_zero_log_survival(p, z, cfg);
    row.scaled = row.raw_log / r;
    row.theory = theory;
    row.abs_err = std::fabs(row.scaled - theory);
    table.rows.push_back(row);
  }
  table.extrapolated = extrapolate_limit(table);
  return table;
}

ScanTable md_scan(double mu, double t, double z, const ModerateScale& scale,
                  const RGrid& grid, const QuadratureConfig& cfg) {
  if (!(z > 0.0)) throw std::domain_error("z must be positive");
  ScanTable table;
  table.meta = {"md", mu, t, z, scale.beta, 0.0, 0.0, grid};
  const double theory = -0.5 * mu * mu * z;
  bool any_admissible = false;
  for (double r : grid.values()) {
    const double gamma = scale.gamma(r);
    const double z_eff = z / (r * gamma);
    ScanRow row;
    row.r = r;
    row.theory = theory;
    if (z_eff > t) {
      row.skipped = true;
      row.raw_log = std::nan("");
      row.scaled = std::nan("");
      row.abs_err = std::nan("");
    } else {
      any_admissible = true;
      const DriftedBMParams p = DriftedBMParams::scaled(mu, r, t);
      row.raw_log = last_zero_log_survival(p, z_eff, cfg);
      row.scaled = gamma * row.raw_log;
      row.abs_err = std::fabs(row.scaled - theory);
    }
    table.rows.push_back(row);
  }
  if (!any_admissible)
    throw std::domain_error(
        "no admissible r in grid: z/(r gamma_r) exceeds t everywhere");
  table.extrapolated = extrapolate_limit(table);
  return table;
}

CrossingScanTable crossing_scan(double mu, const CrossingWindow& w,
                                const RGrid& grid,
                                const QuadratureConfig& cfg) {
  if (!(mu != 0.0)) throw std::domain_error("mu must be nonzero");
  CrossingScanTable table;
  table.meta = {"crossing", mu, 0.0, 0.0, 0.0, w.a, w.b, grid};
  const double theory_rate = -0.5 * mu * mu * w.a;
  constexpr double pi = 3.141592653589793238462643383279503;
  const double theory_prefactor = std::sqrt(2.0 / (pi * mu * mu * w.a));
  for (double r : grid.values()) {
    CrossingScanRow row;
    row.r = r;
    row.raw_log = crossing_log_probability(mu * std::sqrt(r), w, cfg);
    row.scaled_rate = row.raw_log / r;
    row.theory_rate = theory_rate;
    row.abs_err_rate = std::fabs(row.scaled_rate - theory_rate);
    // Entirely in log domain until the single exponentiation.
    const double log_prefactor =
        row.raw_log + 0.5 * mu * mu * r * w.a + 0.5 * std::log(r);
    row.scaled_prefactor = std::exp(log_prefactor);
    row.theory_prefactor = theory_prefactor;
    row.abs_err_prefactor = std::fabs(row.scaled_prefactor - theory_prefactor);
    table.rows.push_back(row);
  }
  std::vector<double> rates, prefactors;
  for (const auto& row : table.rows) {
    rates.push_back(row.scaled_rate);
    prefactors.push_back(row.scaled_prefactor);
  }
  table.extrapolated_rate = detail::aitken_last3(rates);
  table.extrapolated_prefactor = detail::aitken_last3(prefactors);
  return table;
}

double extrapolate_limit(const ScanTable& table) {
  std::vector<double> scaled;
  for (const auto& row : table.rows)
    if (!row.skipped) scaled.push_back(row.scaled);
  return detail::aitken_last3(scaled);
}

}  // namespace lastzero
