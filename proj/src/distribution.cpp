#include "lastzero/distribution.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "lastzero/errors.hpp"

namespace lastzero {

namespace {

constexpr double kPi = 3.141592653589793238462643383279503;
constexpr double kInf = std::numeric_limits<double>::infinity();

void check_drift(double mu) {
  if (!(mu != 0.0) || !std::isfinite(mu))
    throw std::domain_error("mu must be nonzero");
}

void check_horizon(double t) {
  if (!(t > 0.0) || !std::isfinite(t))
    throw std::domain_error("t must be positive");
}

double require_converged(const IntegralResult& r, const char* what) {
  if (!r.converged)
    throw NumericalError(std::string("quadrature did not converge in ") +
                         what);
  return r.value;
}

// int_0^U exp(-c(1+y^2))/(1+y^2) dy  (linear domain)
double tail_integral(double c, double upper, const QuadratureConfig& cfg,
                     const char* what) {
  auto f = [c](double y) { return std::exp(-c * (1.0 + y * y)) / (1.0 + y * y); };
  return require_converged(integrate(f, 0.0, upper, cfg), what);
}

// int_0^U exp(-c y^2)/(1+y^2) dy  (factored domain, exp(-c) pulled out)
double tail_integral_factored(double c, double upper,
                              const QuadratureConfig& cfg, const char* what) {
  auto f = [c](double y) { return std::exp(-c * y * y) / (1.0 + y * y); };
  return require_converged(integrate(f, 0.0, upper, cfg), what);
}

// A(x)/x^2 with A = 1 - (1+x)e^{-x} = sum_{k>=2} (-1)^k (k-1)/k! x^k.
// The direct form loses all digits below x ~ 1e-6, so small arguments use
// the series (alternating, terms (j+1)/(j+2)! x^j).
double one_minus_1px_expmx_over_x2(double x) {
  if (x < 0.5) {
    double sum = 0.0;
    double term = 0.5;  // (j+1)/(j+2)! at j = 0
    double xpow = 1.0;
    for (int j = 0; j < 24; ++j) {
      const double contrib = term * xpow;
      sum += (j % 2 == 0) ? contrib : -contrib;
      if (std::fabs(contrib) < 1e-20 * std::fabs(sum)) break;
      xpow *= x;
      term *= (j + 2.0) / ((j + 3.0) * (j + 1.0));
    }
    return sum;
  }
  return (1.0 - (1.0 + x) * std::exp(-x)) / (x * x);
}

}  // namespace

DriftedBMParams::DriftedBMParams(double mu_, double t_) : mu(mu_), t(t_) {
  check_drift(mu);
  check_horizon(t);
}

DriftedBMParams DriftedBMParams::scaled(double mu, double r, double t) {
  if (!(r > 0.0) || !std::isfinite(r))
    throw std::domain_error("r must be positive");
  return DriftedBMParams(mu * std::sqrt(r), t);
}

CrossingWindow::CrossingWindow(double a_, double b_) : a(a_), b(b_) {
  if (!(0.0 < a) || !(a < b) || !std::isfinite(a) || !std::isfinite(b))
    throw std::domain_error("crossing window requires 0 < a < b");
}

RateFunctionJ::RateFunctionJ(double mu_, double t_) : mu(mu_), t(t_) {
  check_drift(mu);
  check_horizon(t);
}

double RateFunctionJ::operator()(double b) const {
  if (b < 0.0 || b > t) return kInf;
  return 0.5 * mu * mu * b;
}

RateFunctionJTilde::RateFunctionJTilde(double mu_) : mu(mu_) {
  check_drift(mu);
}

double RateFunctionJTilde::operator()(double b) const {
  if (b < 0.0) return kInf;
  return 0.5 * mu * mu * b;
}

LimitLaw::LimitLaw(double mu_) : mu(mu_) { check_drift(mu); }

double last_zero_cdf(const DriftedBMParams& p, double a,
                     const QuadratureConfig& cfg) {
  if (a <= 0.0) return 0.0;
  if (a >= p.t) return 1.0;
  const double c = 0.5 * p.mu * p.mu * a;
  const double upper = std::sqrt((p.t - a) / a);
  const double survival =
      (2.0 / kPi) * tail_integral(c, upper, cfg, "last_zero_cdf");
  return 1.0 - survival;
}

double last_zero_log_survival(const DriftedBMParams& p, double z,
                              const QuadratureConfig& cfg) {
  if (!(z >= 0.0) || !(z <= p.t))
    throw std::domain_error("z must lie in [0, t]");
  if (z == 0.0) return 0.0;
  if (z == p.t) return -kInf;
  const double c = 0.5 * p.mu * p.mu * z;
  const double upper = std::sqrt((p.t - z) / z);
  const double integral =
      tail_integral_factored(c, upper, cfg, "last_zero_log_survival");
  return -c + std::log((2.0 / kPi) * integral);
}

double last_zero_pdf(const DriftedBMParams& p, double a,
                     const QuadratureConfig& cfg) {
  if (a < 0.0 || a > p.t) return 0.0;
  if (a == 0.0 || a == p.t) return kInf;
  const double mu2 = p.mu * p.mu;
  const double term1 =
      std::exp(-0.5 * mu2 * p.t) / (kPi * std::sqrt(a * (p.t - a)));
  // Substitution y = a + u^2 turns the inner kernel into
  // 2 exp(-(mu^2/2)(a+u^2))/sqrt(a), u in [0, sqrt(t-a)].
  auto kernel = [mu2, a](double u) {
    return std::exp(-0.5 * mu2 * (a + u * u));
  };
  const double inner = require_converged(
      integrate(kernel, 0.0, std::sqrt(p.t - a), cfg), "last_zero_pdf");
  const double term2 = (mu2 / (2.0 * kPi)) * (2.0 / std::sqrt(a)) * inner;
  return term1 + term2;
}

double last_zero_mean(const DriftedBMParams& p) {
  const double x = 0.5 * p.mu * p.mu * p.t;
  return -std::expm1(-x) / (p.mu * p.mu);
}

double last_zero_variance(const DriftedBMParams& p) {
  const double x = 0.5 * p.mu * p.mu * p.t;
  const double e1_over_x = -std::expm1(-x) / x;
  const double a_over_x2 = one_minus_1px_expmx_over_x2(x);
  return 0.25 * p.t * p.t * (3.0 * a_over_x2 - e1_over_x * e1_over_x);
}

double crossing_probability(double mu, const CrossingWindow& w,
                            const QuadratureConfig& cfg) {
  check_drift(mu);
  const double c = 0.5 * mu * mu * w.a;
  const double upper = std::sqrt((w.b - w.a) / w.a);
  return (2.0 / kPi) * tail_integral(c, upper, cfg, "crossing_probability");
}

double crossing_log_probability(double mu, const CrossingWindow& w,
                                const QuadratureConfig& cfg) {
  check_drift(mu);
  const double c = 0.5 * mu * mu * w.a;
  const double upper = std::sqrt((w.b - w.a) / w.a);
  const double integral =
      tail_integral_factored(c, upper, cfg, "crossing_log_probability");
  return -c + std::log((2.0 / kPi) * integral);
}

double limit_law_cdf(const LimitLaw& law, double a,
                     const QuadratureConfig& cfg) {
  if (a <= 0.0) return 0.0;
  const double c = 0.5 * law.mu * law.mu * a;
  auto f = [c](double y) { return std::exp(-c * (1.0 + y * y)) / (1.0 + y * y); };
  const double integral = require_converged(
      integrate_semi_infinite(f, 0.0, cfg), "limit_law_cdf");
  return 1.0 - (2.0 / kPi) * integral;
}

double limit_law_mean(const LimitLaw& law) { return 1.0 / (law.mu * law.mu); }

double limit_law_variance(const LimitLaw& law) {
  const double mu2 = law.mu * law.mu;
  return 2.0 / (mu2 * mu2);
}

}  // namespace lastzero
