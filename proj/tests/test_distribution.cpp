#include "lastzero/distribution.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include <doctest.h>

#include "lastzero/errors.hpp"
#include "support.hpp"

using namespace lastzero;
namespace ts = testsupport;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Quadrature moment oracle: integrates g(a)*pdf(a) over [0,t] with the
// endpoint substitutions a = u^2 and a = t - u^2 splitting at t/2, so the
// inverse-square-root singularities never reach the integrator raw.
double pdf_moment(const DriftedBMParams& p, int power) {
  auto weighted = [&](double a) {
    double w = 1.0;
    for (int k = 0; k < power; ++k) w *= a;
    return w * last_zero_pdf(p, a);
  };
  const double split = std::sqrt(p.t / 2.0);
  const auto left = integrate(
      [&](double u) { return weighted(u * u) * 2.0 * u; }, 0.0, split);
  const auto right = integrate(
      [&](double u) { return weighted(p.t - u * u) * 2.0 * u; }, 0.0, split);
  REQUIRE(left.converged);
  REQUIRE(right.converged);
  return left.value + right.value;
}

}  // namespace

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(DriftedBMParams(0.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(DriftedBMParams(1.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(DriftedBMParams(1.0, -2.0), std::domain_error);
  CHECK_THROWS_AS(DriftedBMParams::scaled(1.0, -1.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(CrossingWindow(0.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(CrossingWindow(0.5, 0.5), std::domain_error);
  CHECK_THROWS_AS(LimitLaw(0.0), std::domain_error);
  const DriftedBMParams s = DriftedBMParams::scaled(2.0, 9.0, 1.5);
  CHECK(s.mu == doctest::Approx(6.0));
  CHECK(s.t == 1.5);
}

TEST_CASE("cdf support endpoints are exact") {
  const DriftedBMParams p(1.0, 1.0);
  CHECK(last_zero_cdf(p, 1.0) == 1.0);
  CHECK(last_zero_cdf(p, 0.0) == 0.0);
  CHECK(last_zero_cdf(p, -0.3) == 0.0);
  CHECK(last_zero_cdf(p, 1.7) == 1.0);
}

TEST_CASE("cdf degenerates to the arcsine law as mu -> 0") {
  const DriftedBMParams p(1e-6, 1.0);
  CHECK(std::fabs(last_zero_cdf(p, 0.5) - 0.5) < 1e-6);
  for (double a : {0.05, 0.2, 0.35, 0.65, 0.8, 0.95})
    CHECK(std::fabs(last_zero_cdf(p, a) - ts::arcsine_cdf(a, 1.0)) < 1e-6);
}

TEST_CASE("cdf is nondecreasing over a grid of parameters") {
  for (double mu : {0.5, 1.0, 2.0}) {
    for (double t : {0.5, 1.0, 2.0}) {
      const DriftedBMParams p(mu, t);
      double prev = last_zero_cdf(p, 0.0);
      CHECK(prev == 0.0);
      for (int i = 1; i <= 50; ++i) {
        const double a = t * static_cast<double>(i) / 50.0;
        const double cur = last_zero_cdf(p, a);
        CHECK(cur >= prev);
        prev = cur;
      }
      CHECK(prev == 1.0);
    }
  }
}

TEST_CASE("log survival basics and factored-domain reach") {
  const DriftedBMParams p(1.0, 1.0);
  CHECK(last_zero_log_survival(p, 0.0) == 0.0);
  CHECK(last_zero_log_survival(p, 1.0) == -kInf);
  CHECK_THROWS_AS(last_zero_log_survival(p, -0.1), std::domain_error);
  CHECK_THROWS_AS(last_zero_log_survival(p, 1.1), std::domain_error);

  // mu^2 z/2 = 2000: linear domain would underflow, the factorization keeps
  // the value finite and below -mu^2 z/2 (the leftover integral is < 1).
  const DriftedBMParams steep(100.0, 1.0);
  const double ls = last_zero_log_survival(steep, 0.4);
  CHECK(std::isfinite(ls));
  CHECK(ls < -2000.0);
  CHECK(ls > -2100.0);
}

TEST_CASE("survival consistency between linear and log paths") {
  for (double mu : {0.3, 1.0, 2.5}) {
    const DriftedBMParams p(mu, 1.0);
    for (double z : {0.01, 0.1, 0.3, 0.5, 0.7, 0.9, 0.99}) {
      if (0.5 * mu * mu * z >= 30.0) continue;
      const double lin = 1.0 - last_zero_cdf(p, z);
      const double log_path = std::exp(last_zero_log_survival(p, z));
      CHECK(std::fabs(lin - log_path) < 1e-12);
    }
  }
}

TEST_CASE("pdf support, endpoints and driftless limit") {
  const DriftedBMParams p(1.0, 1.0);
  CHECK(last_zero_pdf(p, -0.1) == 0.0);
  CHECK(last_zero_pdf(p, 1.1) == 0.0);
  CHECK(last_zero_pdf(p, 0.0) == kInf);
  CHECK(last_zero_pdf(p, 1.0) == kInf);

  const DriftedBMParams drl(1e-6, 1.0);
  CHECK(std::fabs(last_zero_pdf(drl, 0.5) - ts::arcsine_pdf(0.5, 1.0)) < 1e-5);
}

TEST_CASE("pdf integrates to one") {
  const DriftedBMParams p(1.0, 1.0);
  CHECK(std::fabs(pdf_moment(p, 0) - 1.0) < 1e-8);
}

TEST_CASE("pdf matches the finite-difference derivative of the cdf") {
  const DriftedBMParams p(1.0, 1.0);
  const double h = 1e-5;
  const double fd =
      (last_zero_cdf(p, 0.3 + h) - last_zero_cdf(p, 0.3 - h)) / (2.0 * h);
  const double pdf = last_zero_pdf(p, 0.3);
  CHECK(std::fabs(fd - pdf) / pdf < 1e-5);
}

TEST_CASE("density-cdf consistency across a parameter grid") {
  const double h = 1e-5;
  for (double mu : {0.5, 1.0, 2.0}) {
    for (double t : {0.5, 1.0, 2.0}) {
      const DriftedBMParams p(mu, t);
      for (int i = 1; i < 100; ++i) {
        const double a = t * static_cast<double>(i) / 100.0;
        const double step = h * t;
        const double fd =
            (last_zero_cdf(p, a + step) - last_zero_cdf(p, a - step)) /
            (2.0 * step);
        const double pdf = last_zero_pdf(p, a);
        CHECK(std::fabs(fd - pdf) / pdf <= 1e-4);
      }
    }
  }
}

TEST_CASE("mean closed form") {
  CHECK(last_zero_mean(DriftedBMParams(std::sqrt(2.0), 1.0)) ==
        doctest::Approx(0.31606027941427883).epsilon(1e-14));
  // driftless limit t/2 without cancellation
  CHECK(std::fabs(last_zero_mean(DriftedBMParams(1e-8, 1.0)) - 0.5) < 1e-8);
  // quadrature moment oracle
  const DriftedBMParams p(1.0, 1.0);
  CHECK(std::fabs(last_zero_mean(p) - pdf_moment(p, 1)) < 1e-8);
}

TEST_CASE("variance closed form") {
  // r^2 Var -> 2/mu^4 at r = 1e4 (the e^{-5000} terms are below machine
  // precision, so equality is to full relative accuracy)
  const DriftedBMParams scaled = DriftedBMParams::scaled(1.0, 1e4, 1.0);
  const double r2var = 1e8 * last_zero_variance(scaled);
  CHECK(std::fabs(r2var - 2.0) / 2.0 < 1e-10);

  const DriftedBMParams p(1.0, 1.0);
  const double var = last_zero_variance(p);
  CHECK(var > 0.0);
  const double oracle = pdf_moment(p, 2) - pdf_moment(p, 1) * pdf_moment(p, 1);
  CHECK(std::fabs(var - oracle) < 1e-8);

  CHECK(std::fabs(last_zero_variance(DriftedBMParams(1e-8, 1.0)) - 0.125) <
        1e-6);
}

TEST_CASE("variance is strictly positive across scales") {
  for (double mu : {1e-8, 1e-3, 0.5, 1.0, 10.0, 300.0})
    for (double t : {1e-3, 1.0, 50.0})
      CHECK(last_zero_variance(DriftedBMParams(mu, t)) > 0.0);
}

TEST_CASE("crossing probability") {
  // driftless oracle (2/pi) arctan(sqrt((b-a)/a))
  CHECK(std::fabs(crossing_probability(1e-6, CrossingWindow(0.5, 1.0)) - 0.5) <
        1e-6);
  CHECK(std::fabs(crossing_probability(1e-6, CrossingWindow(0.25, 1.0)) -
                  ts::arcsine_crossing(0.25, 1.0)) < 1e-6);
  // vanishing window
  CHECK(crossing_probability(1.0, CrossingWindow(0.5, 0.5 + 1e-12)) < 1e-5);
  // in (0,1), decreasing in |mu|, increasing in b
  const double p1 = crossing_probability(0.5, CrossingWindow(0.5, 1.0));
  const double p2 = crossing_probability(1.0, CrossingWindow(0.5, 1.0));
  const double p3 = crossing_probability(-2.0, CrossingWindow(0.5, 1.0));
  CHECK(p1 > 0.0);
  CHECK(p1 < 1.0);
  CHECK(p1 > p2);
  CHECK(p2 > p3);
  CHECK(crossing_probability(1.0, CrossingWindow(0.5, 2.0)) > p2);
}

TEST_CASE("crossing log probability") {
  const CrossingWindow w(0.5, 1.0);
  CHECK(std::fabs(std::exp(crossing_log_probability(1.0, w)) -
                  crossing_probability(1.0, w)) < 1e-12);
  // mu^2 a/2 = 5000 stays finite in log domain
  const double lp = crossing_log_probability(100.0, CrossingWindow(1.0, 2.0));
  CHECK(std::isfinite(lp));
  CHECK(lp < -5000.0);
  CHECK(lp > -5100.0);
  // increasing in b
  const double l1 = crossing_log_probability(1.0, CrossingWindow(0.5, 1.0));
  const double l2 = crossing_log_probability(1.0, CrossingWindow(0.5, 1.5));
  const double l3 = crossing_log_probability(1.0, CrossingWindow(0.5, 2.5));
  CHECK(l2 > l1);
  CHECK(l3 > l2);
}

TEST_CASE("limit law cdf") {
  const LimitLaw law(1.0);
  CHECK(limit_law_cdf(law, 0.0) == 0.0);
  CHECK(limit_law_cdf(law, -1.0) == 0.0);
  CHECK(std::fabs(limit_law_cdf(law, 1e6) - 1.0) < 1e-12);
  // nondecreasing
  double prev = 0.0;
  for (double a : {0.1, 0.5, 1.0, 2.0, 5.0, 10.0}) {
    const double g = limit_law_cdf(law, a);
    CHECK(g >= prev);
    prev = g;
  }
  // weak convergence of the rescaled last-zero law to G
  const DriftedBMParams scaled = DriftedBMParams::scaled(1.0, 1e4, 1.0);
  const double approx = last_zero_cdf(scaled, 0.5 / 1e4);
  CHECK(std::fabs(approx - limit_law_cdf(law, 0.5)) < 1e-3);
}

TEST_CASE("limit law moments against tail-integral oracles") {
  // reduced forms of the tail integrals:
  // E[Y]  = (4/(pi mu^2)) int 1/(1+y^2)^2, E[Y^2] = (16/(pi mu^4)) int
  // 1/(1+y^2)^3
  auto tail_mean = [](double mu) {
    const auto q = integrate_semi_infinite(
        [](double y) {
          const double d = 1.0 + y * y;
          return 1.0 / (d * d);
        },
        0.0);
    return 4.0 / (ts::kPi * mu * mu) * q.value;
  };
  auto tail_second_moment = [](double mu) {
    const auto q = integrate_semi_infinite(
        [](double y) {
          const double d = 1.0 + y * y;
          return 1.0 / (d * d * d);
        },
        0.0);
    return 16.0 / (ts::kPi * mu * mu * mu * mu) * q.value;
  };
  for (double mu : {1.0, 2.0, std::sqrt(2.0)}) {
    const LimitLaw law(mu);
    const double mean = limit_law_mean(law);
    const double var = limit_law_variance(law);
    CHECK(std::fabs(mean - tail_mean(mu)) < 1e-6);
    CHECK(std::fabs(var - (tail_second_moment(mu) - mean * mean)) < 1e-6);
  }
  CHECK(limit_law_mean(LimitLaw(1.0)) == doctest::Approx(1.0));
  CHECK(limit_law_mean(LimitLaw(2.0)) == doctest::Approx(0.25));
  CHECK(limit_law_variance(LimitLaw(1.0)) == doctest::Approx(2.0));
  CHECK(limit_law_variance(LimitLaw(std::sqrt(2.0))) == doctest::Approx(0.5));
  // r * mean of the scaled family approaches E[Y]
  CHECK(std::fabs(1e6 * last_zero_mean(DriftedBMParams::scaled(1.0, 1e6, 1.0)) -
                  1.0) < 1e-6);
}

TEST_CASE("rate functions") {
  const RateFunctionJ J(1.0, 1.0);
  CHECK(J(0.0) == 0.0);
  CHECK(J(0.5) == doctest::Approx(0.25));
  CHECK(J(1.1) == kInf);
  CHECK(J(-0.2) == kInf);

  const RateFunctionJTilde Jt(2.0);
  CHECK(Jt(0.0) == 0.0);
  CHECK(Jt(3.0) == doctest::Approx(6.0));
  CHECK(Jt(-1.0) == kInf);

  // restriction identity: J == J~ on [0, t], bit-exact
  const RateFunctionJ J2(1.7, 2.0);
  const RateFunctionJTilde Jt2(1.7);
  for (int i = 0; i <= 40; ++i) {
    const double b = 2.0 * static_cast<double>(i) / 40.0;
    CHECK(J2(b) == Jt2(b));
  }
}
