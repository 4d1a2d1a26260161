#pragma once

#include <vector>

#include "lastzero/distribution.hpp"

namespace lastzero {

// Moderate scaling gamma_r = r^(-beta), beta in (0,1). Both moderate-
// deviation conditions hold for this family: gamma_r -> 0 and
// r*gamma_r = r^(1-beta) -> infinity. The principle's speed is 1/gamma_r.
struct ModerateScale {
  double beta;

  explicit ModerateScale(double beta);
  double gamma(double r) const;  // r^(-beta)
  double speed(double r) const;  // 1/gamma(r)
};

// Strictly increasing geometric grid of scan abscissae.
struct RGrid {
  double r_min;
  double r_max;
  int points;

  RGrid(double r_min, double r_max, int points);
  std::vector<double> values() const;
};

struct ScanRow {
  double r = 0.0;
  double raw_log = 0.0;  // log of the probability (or of Psi)
  double scaled = 0.0;   // raw_log divided by the speed
  double theory = 0.0;   // the proposition's limit
  double abs_err = 0.0;  // |scaled - theory|
  bool skipped = false;  // r below the admissibility threshold (md only)
};

// Parameter echo carried by every table so output files are reproducible.
struct ScanMeta {
  const char* kind = "";
  double mu = 0.0;
  double t = 0.0;
  double z = 0.0;
  double beta = 0.0;
  double a = 0.0;
  double b = 0.0;
  RGrid grid{1.0, 10.0, 2};
};

struct ScanTable {
  std::vector<ScanRow> rows;  // ordered by r
  double extrapolated = 0.0;
  ScanMeta meta;
};

// One row of the crossing scan, which tracks both limits of the crossing
// proposition: the exponential rate and the sqrt(r)-corrected prefactor.
struct CrossingScanRow {
  double r = 0.0;
  double raw_log = 0.0;
  double scaled_rate = 0.0;       // raw_log / r
  double theory_rate = 0.0;       // -mu^2 a / 2
  double abs_err_rate = 0.0;
  double scaled_prefactor = 0.0;  // exp(raw_log + mu^2 r a/2 + log(r)/2)
  double theory_prefactor = 0.0;  // sqrt(2/(pi mu^2 a))
  double abs_err_prefactor = 0.0;
};

struct CrossingScanTable {
  std::vector<CrossingScanRow> rows;
  double extrapolated_rate = 0.0;
  double extrapolated_prefactor = 0.0;
  ScanMeta meta;
};

// (1/r) log P(T_{mu sqrt(r), t} >= z) against -mu^2 z/2 over the grid.
// Requires 0 < z <= t. At z = t the survival probability is identically
// zero, so rows carry raw_log = -inf; the finite-limit behavior is the
// left limit z -> t.
ScanTable ldp_scan(double mu, double t, double z, const RGrid& grid,
                   const QuadratureConfig& cfg = {});

// gamma_r log P(r gamma_r T >= z) against -mu^2 z/2. Rows with
// z/(r gamma_r) > t are marked skipped (the proposition needs r large
// enough that the rescaled threshold lies in [0, t]); a grid with no
// admissible row throws.
ScanTable md_scan(double mu, double t, double z, const ModerateScale& scale,
                  const RGrid& grid, const QuadratureConfig& cfg = {});

// Both crossing-probability limits; the prefactor column is assembled in
// log domain and exponentiated only once at the end.
CrossingScanTable crossing_scan(double mu, const CrossingWindow& w,
                                const RGrid& grid,
                                const QuadratureConfig& cfg = {});

// Aitken delta-squared on the last three scaled values (skipped rows are
// ignored); falls back to the last value when the delta-squared denominator
// is below 1e-14 in magnitude. Fewer than three usable rows throws.
double extrapolate_limit(const ScanTable& table);

namespace detail {
double aitken_last3(const std::vector<double>& values);
}

}  // namespace lastzero
