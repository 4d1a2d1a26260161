#include "lastzero/cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lastzero/asymptotics.hpp"
#include "lastzero/distribution.hpp"
#include "lastzero/errors.hpp"
#include "lastzero/montecarlo.hpp"
#include "lastzero/sampling.hpp"
#include "lastzero/version.hpp"

namespace lastzero::cli {

namespace {

using nlohmann::json;

// Logs below this are never exponentiated into a printed probability; the
// linear cell is left empty and the log_ column carries the value.
constexpr double kLogUnderflowFloor = -700.0;

struct Cell {
  enum class Kind { Number, Integer, Null } kind = Kind::Null;
  double num = 0.0;
  long integer = 0;

  static Cell number(double v) { return {Kind::Number, v, 0}; }
  static Cell whole(long v) { return {Kind::Integer, 0.0, v}; }
  static Cell null() { return {}; }
};

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> cells) { rows.push_back(std::move(cells)); }
};

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.16e", v);
  return buf;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string to_csv(const Table& table) {
  std::ostringstream out;
  for (size_t i = 0; i < table.columns.size(); ++i) {
    if (i) out << ',';
    out << csv_escape(table.columns[i]);
  }
  out << '\n';
  for (const auto& row : table.rows) {
    for (size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      switch (row[i].kind) {
        case Cell::Kind::Number: out << format_number(row[i].num); break;
        case Cell::Kind::Integer: out << row[i].integer; break;
        case Cell::Kind::Null: break;
      }
    }
    out << '\n';
  }
  return out.str();
}

json cell_to_json(const Cell& cell) {
  switch (cell.kind) {
    case Cell::Kind::Number:
      if (!std::isfinite(cell.num)) return nullptr;
      return cell.num;
    case Cell::Kind::Integer: return cell.integer;
    case Cell::Kind::Null: return nullptr;
  }
  return nullptr;
}

json rows_to_json(const Table& table) {
  json rows = json::array();
  for (const auto& row : table.rows) {
    json obj = json::object();
    for (size_t i = 0; i < row.size(); ++i)
      obj[table.columns[i]] = cell_to_json(row[i]);
    rows.push_back(std::move(obj));
  }
  return rows;
}

std::string timestamp_utc() {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

struct CommonOpts {
  std::string format = "csv";
  std::string out_path;
  double tol = 0.0;  // 0 = library default tolerances

  QuadratureConfig quadrature() const {
    if (tol == 0.0) return {};
    return {tol * 1e-3, tol, 60};
  }
};

void add_common(CLI::App* sub, CommonOpts& opts) {
  sub->add_option("--format", opts.format, "Output format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--out", opts.out_path,
                  "Output file (default: standard output)");
  sub->add_option("--tol", opts.tol,
                  "Relative quadrature tolerance for this run "
                  "(absolute tolerance scales as tol/1000)")
      ->check(CLI::PositiveNumber);
}

// Every run emits this JSON echo (tool version, command, full parameters,
// timestamp) so any table can be reproduced from it alone.
json make_manifest(const std::string& command, const json& parameters,
                   const CommonOpts& opts) {
  json manifest;
  manifest["tool"] = "lastzero";
  manifest["version"] = kVersion;
  manifest["command"] = command;
  manifest["parameters"] = parameters;
  manifest["format"] = opts.format;
  manifest["quadrature_rel_tol"] = opts.tol == 0.0 ? 1e-10 : opts.tol;
  manifest["timestamp"] = timestamp_utc();
  return manifest;
}

void emit(const Table& table, const json& manifest, const CommonOpts& opts) {
  if (opts.format == "json") {
    json doc;
    doc["manifest"] = manifest;
    doc["rows"] = rows_to_json(table);
    const std::string text = doc.dump(2) + "\n";
    if (opts.out_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream f(opts.out_path, std::ios::binary);
      if (!f) throw std::runtime_error("cannot open " + opts.out_path);
      f << text;
    }
    return;
  }
  const std::string csv = to_csv(table);
  if (opts.out_path.empty()) {
    std::cout << csv;
    std::cerr << manifest.dump() << "\n";
  } else {
    std::ofstream f(opts.out_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + opts.out_path);
    f << csv;
    std::ofstream mf(opts.out_path + ".manifest.json", std::ios::binary);
    mf << manifest.dump(2) << "\n";
  }
}

std::vector<double> a_grid(double t, int n) {
  std::vector<double> out(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i)
    out[static_cast<size_t>(i)] =
        t * static_cast<double>(i) / static_cast<double>(n - 1);
  return out;
}

Cell probability_cell(double log_value) {
  if (log_value < kLogUnderflowFloor) return Cell::null();
  return Cell::number(std::exp(log_value));
}

void append_scan_rows(Table& table, const ScanTable& scan) {
  for (const auto& row : scan.rows) {
    std::vector<Cell> cells;
    cells.push_back(Cell::number(row.r));
    if (row.skipped) {
      cells.push_back(Cell::null());
      cells.push_back(Cell::null());
      cells.push_back(Cell::number(row.theory));
      cells.push_back(Cell::null());
    } else {
      cells.push_back(Cell::number(row.raw_log));
      cells.push_back(Cell::number(row.scaled));
      cells.push_back(Cell::number(row.theory));
      cells.push_back(Cell::number(row.abs_err));
    }
    if (table.columns.size() == 7)  // md: skipped flag column
      cells.push_back(Cell::whole(row.skipped ? 1 : 0));
    cells.push_back(Cell::number(scan.extrapolated));
    table.add_row(std::move(cells));
  }
}

}  // namespace

int run(int argc, const char* const* argv) {
  CLI::App app{
      "lastzero: last zero crossing time of drifted Brownian motion.\n"
      "Closed-form CDF/density/moments, crossing probabilities, exact\n"
      "sampling, Monte Carlo validation and asymptotic-limit scans.\n"
      "Tables go to --out (or stdout) as CSV or JSON; every run also emits\n"
      "a JSON manifest (beside the CSV file, on stderr, or embedded in the\n"
      "JSON document). LASTZERO_THREADS caps worker count (0 = auto)."};
  app.set_version_flag("--version", std::string("lastzero ") + kVersion);
  app.require_subcommand(1);

  // ---- cdf ----
  struct {
    double mu = 0, t = 0, a = 0;
    int grid = 0;
    CommonOpts common;
  } cdf_opts;
  auto* cdf_cmd = app.add_subcommand(
      "cdf", "P(T <= a) from the closed form. Columns: a,cdf");
  cdf_cmd->add_option("--mu", cdf_opts.mu, "Drift (nonzero)")->required();
  cdf_cmd->add_option("--t", cdf_opts.t, "Horizon (positive)")->required();
  auto* cdf_a = cdf_cmd->add_option("--a", cdf_opts.a, "Evaluation point");
  auto* cdf_grid = cdf_cmd->add_option(
      "--grid", cdf_opts.grid, "Evaluate on N evenly spaced points in [0,t]");
  cdf_a->excludes(cdf_grid);
  add_common(cdf_cmd, cdf_opts.common);

  // ---- pdf ----
  struct {
    double mu = 0, t = 0, a = 0;
    int grid = 0;
    CommonOpts common;
  } pdf_opts;
  auto* pdf_cmd = app.add_subcommand(
      "pdf", "Density of T. Columns: a,pdf (endpoints print inf)");
  pdf_cmd->add_option("--mu", pdf_opts.mu, "Drift (nonzero)")->required();
  pdf_cmd->add_option("--t", pdf_opts.t, "Horizon (positive)")->required();
  auto* pdf_a = pdf_cmd->add_option("--a", pdf_opts.a, "Evaluation point");
  auto* pdf_grid = pdf_cmd->add_option(
      "--grid", pdf_opts.grid, "Evaluate on N evenly spaced points in [0,t]");
  pdf_a->excludes(pdf_grid);
  add_common(pdf_cmd, pdf_opts.common);

  // ---- moments ----
  struct {
    double mu = 0, t = 0, r = 1.0;
    CommonOpts common;
  } mom_opts;
  auto* mom_cmd = app.add_subcommand(
      "moments",
      "Mean and variance of T under drift mu*sqrt(r). Columns: "
      "r,mean,variance,r_squared_variance");
  mom_cmd->add_option("--mu", mom_opts.mu, "Drift (nonzero)")->required();
  mom_cmd->add_option("--t", mom_opts.t, "Horizon (positive)")->required();
  mom_cmd->add_option("--r", mom_opts.r, "Scaling parameter (default 1)");
  add_common(mom_cmd, mom_opts.common);

  // ---- crossing ----
  struct {
    double mu = 0, a = 0, b = 0;
    CommonOpts common;
  } cross_opts;
  auto* cross_cmd = app.add_subcommand(
      "crossing",
      "Probability of a zero in [a,b]. Columns: a,b,psi,log_psi (psi is "
      "left empty when log_psi < -700)");
  cross_cmd->add_option("--mu", cross_opts.mu, "Drift (nonzero)")->required();
  cross_cmd->add_option("--a", cross_opts.a, "Window start (0 < a < b)")
      ->required();
  cross_cmd->add_option("--b", cross_opts.b, "Window end")->required();
  add_common(cross_cmd, cross_opts.common);

  // ---- limit-law ----
  struct {
    double mu = 0, a = 0;
    bool moments = false;
    CommonOpts common;
  } law_opts;
  auto* law_cmd = app.add_subcommand(
      "limit-law",
      "Weak limit Y of r*T. Columns: a,G with --a; mean,variance with "
      "--moments");
  law_cmd->add_option("--mu", law_opts.mu, "Drift (nonzero)")->required();
  auto* law_a = law_cmd->add_option("--a", law_opts.a, "Evaluate G at a");
  auto* law_m = law_cmd->add_flag("--moments", law_opts.moments,
                                  "Report E[Y] and Var[Y] instead");
  law_a->excludes(law_m);
  add_common(law_cmd, law_opts.common);

  // ---- sample ----
  struct {
    double mu = 0, t = 0;
    long n = 0;
    std::uint64_t seed = 0;
    bool limit_law = false;
    CommonOpts common;
  } sample_opts;
  auto* sample_cmd = app.add_subcommand(
      "sample",
      "Exact inverse-CDF variates of T (or of Y with --limit-law). "
      "Columns: index,value");
  sample_cmd->add_option("--mu", sample_opts.mu, "Drift (nonzero)")
      ->required();
  sample_cmd->add_option("--t", sample_opts.t,
                         "Horizon (required unless --limit-law)");
  sample_cmd->add_option("--n", sample_opts.n, "Sample count")->required();
  sample_cmd->add_option("--seed", sample_opts.seed, "RNG seed")->required();
  sample_cmd->add_flag("--limit-law", sample_opts.limit_law,
                       "Sample the limit law Y instead of T");
  add_common(sample_cmd, sample_opts.common);

  // ---- mc ----
  struct {
    double mu = 0, t = 0, dt = 0, cdf_at = 0;
    long n_paths = 0;
    std::uint64_t seed = 0;
    std::vector<double> crossing;
    bool no_bridge = false;
    CommonOpts common;
  } mc_opts;
  auto* mc_cmd = app.add_subcommand(
      "mc",
      "Monte Carlo estimate against the closed form. Columns: "
      "p_hat,stderr,n,closed_form,abs_diff,sigmas");
  mc_cmd->add_option("--mu", mc_opts.mu, "Drift (nonzero)")->required();
  mc_cmd->add_option("--t", mc_opts.t, "Horizon (positive)")->required();
  mc_cmd->add_option("--n-paths", mc_opts.n_paths, "Path count (>= 100)")
      ->required();
  mc_cmd->add_option("--dt", mc_opts.dt, "Euler step (<= t/10)")->required();
  mc_cmd->add_option("--seed", mc_opts.seed, "RNG seed")->required();
  auto* mc_cdf_at = mc_cmd->add_option("--cdf-at", mc_opts.cdf_at,
                                       "Estimate P(T <= A)");
  auto* mc_cross = mc_cmd->add_option("--crossing", mc_opts.crossing,
                                      "Estimate crossing probability in "
                                      "[A, B]")
                       ->expected(2);
  mc_cdf_at->excludes(mc_cross);
  mc_cmd->add_flag("--no-bridge", mc_opts.no_bridge,
                   "Disable the Brownian-bridge correction");
  add_common(mc_cmd, mc_opts.common);

  // ---- scan subcommands ----
  struct ScanOpts {
    double mu = 0, t = 0, z = 0, beta = 0, a = 0, b = 0;
    double r_min = 10.0, r_max = 1e4;
    int r_points = 12;
    CommonOpts common;
  };
  ScanOpts ldp_opts, md_opts, cscan_opts;

  auto add_grid = [](CLI::App* sub, ScanOpts& o) {
    sub->add_option("--r-min", o.r_min, "Grid start (default 10)");
    sub->add_option("--r-max", o.r_max, "Grid end (default 1e4)");
    sub->add_option("--r-points", o.r_points,
                    "Geometric grid size (default 12)");
  };

  auto* ldp_cmd = app.add_subcommand(
      "ldp",
      "Large-deviation slope scan: (1/r) log P(T >= z) vs -mu^2 z/2. "
      "Columns: r,raw_log,scaled,theory,abs_err,extrapolated");
  ldp_cmd->add_option("--mu", ldp_opts.mu, "Drift (nonzero)")->required();
  ldp_cmd->add_option("--t", ldp_opts.t, "Horizon (positive)")->required();
  ldp_cmd->add_option("--z", ldp_opts.z, "Threshold in (0, t]")->required();
  add_grid(ldp_cmd, ldp_opts);
  add_common(ldp_cmd, ldp_opts.common);

  auto* md_cmd = app.add_subcommand(
      "md",
      "Moderate-deviation scan with gamma_r = r^-beta. Columns: "
      "r,raw_log,scaled,theory,abs_err,skipped,extrapolated");
  md_cmd->add_option("--mu", md_opts.mu, "Drift (nonzero)")->required();
  md_cmd->add_option("--t", md_opts.t, "Horizon (positive)")->required();
  md_cmd->add_option("--z", md_opts.z, "Threshold (positive)")->required();
  md_cmd->add_option("--beta", md_opts.beta, "Scaling exponent in (0,1)")
      ->required();
  add_grid(md_cmd, md_opts);
  add_common(md_cmd, md_opts.common);

  auto* cscan_cmd = app.add_subcommand(
      "crossing-scan",
      "Crossing-probability limits under drift mu*sqrt(r). Columns: "
      "r,raw_log,scaled_rate,theory_rate,abs_err_rate,scaled_prefactor,"
      "theory_prefactor,abs_err_prefactor,extrapolated_rate,"
      "extrapolated_prefactor");
  cscan_cmd->add_option("--mu", cscan_opts.mu, "Drift (nonzero)")->required();
  cscan_cmd->add_option("--a", cscan_opts.a, "Window start (0 < a < b)")
      ->required();
  cscan_cmd->add_option("--b", cscan_opts.b, "Window end")->required();
  add_grid(cscan_cmd, cscan_opts);
  add_common(cscan_cmd, cscan_opts.common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::CallForVersion& e) {
    std::cout << app.version() << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*cdf_cmd) {
      const auto& o = cdf_opts;
      if (cdf_a->count() == 0 && cdf_grid->count() == 0)
        throw std::domain_error("--a or --grid is required");
      if (cdf_grid->count() > 0 && o.grid < 2)
        throw std::domain_error("--grid must be at least 2");
      const DriftedBMParams p(o.mu, o.t);
      const QuadratureConfig q = o.common.quadrature();
      Table table{{"a", "cdf"}, {}};
      const std::vector<double> points =
          cdf_grid->count() ? a_grid(o.t, o.grid)
                            : std::vector<double>{o.a};
      for (double a : points)
        table.add_row({Cell::number(a), Cell::number(last_zero_cdf(p, a, q))});
      json params{{"mu", o.mu}, {"t", o.t}};
      if (cdf_grid->count()) params["grid"] = o.grid; else params["a"] = o.a;
      emit(table, make_manifest("cdf", params, o.common), o.common);
    } else if (*pdf_cmd) {
      const auto& o = pdf_opts;
      if (pdf_a->count() == 0 && pdf_grid->count() == 0)
        throw std::domain_error("--a or --grid is required");
      if (pdf_grid->count() > 0 && o.grid < 2)
        throw std::domain_error("--grid must be at least 2");
      const DriftedBMParams p(o.mu, o.t);
      const QuadratureConfig q = o.common.quadrature();
      Table table{{"a", "pdf"}, {}};
      const std::vector<double> points =
          pdf_grid->count() ? a_grid(o.t, o.grid)
                            : std::vector<double>{o.a};
      for (double a : points)
        table.add_row({Cell::number(a), Cell::number(last_zero_pdf(p, a, q))});
      json params{{"mu", o.mu}, {"t", o.t}};
      if (pdf_grid->count()) params["grid"] = o.grid; else params["a"] = o.a;
      emit(table, make_manifest("pdf", params, o.common), o.common);
    } else if (*mom_cmd) {
      const auto& o = mom_opts;
      const DriftedBMParams p = DriftedBMParams::scaled(o.mu, o.r, o.t);
      const double mean = last_zero_mean(p);
      const double var = last_zero_variance(p);
      Table table{{"r", "mean", "variance", "r_squared_variance"}, {}};
      table.add_row({Cell::number(o.r), Cell::number(mean), Cell::number(var),
                     Cell::number(o.r * o.r * var)});
      emit(table,
           make_manifest("moments", {{"mu", o.mu}, {"t", o.t}, {"r", o.r}},
                         o.common),
           o.common);
    } else if (*cross_cmd) {
      const auto& o = cross_opts;
      const CrossingWindow w(o.a, o.b);
      const QuadratureConfig q = o.common.quadrature();
      const double log_psi = crossing_log_probability(o.mu, w, q);
      Table table{{"a", "b", "psi", "log_psi"}, {}};
      table.add_row({Cell::number(o.a), Cell::number(o.b),
                     probability_cell(log_psi), Cell::number(log_psi)});
      emit(table,
           make_manifest("crossing", {{"mu", o.mu}, {"a", o.a}, {"b", o.b}},
                         o.common),
           o.common);
    } else if (*law_cmd) {
      const auto& o = law_opts;
      const LimitLaw law(o.mu);
      json params{{"mu", o.mu}};
      if (o.moments) {
        Table table{{"mean", "variance"}, {}};
        table.add_row({Cell::number(limit_law_mean(law)),
                       Cell::number(limit_law_variance(law))});
        params["moments"] = true;
        emit(table, make_manifest("limit-law", params, o.common), o.common);
      } else {
        if (law_a->count() == 0)
          throw std::domain_error("--a or --moments is required");
        Table table{{"a", "G"}, {}};
        table.add_row(
            {Cell::number(o.a),
             Cell::number(limit_law_cdf(law, o.a, o.common.quadrature()))});
        params["a"] = o.a;
        emit(table, make_manifest("limit-law", params, o.common), o.common);
      }
    } else if (*sample_cmd) {
      const auto& o = sample_opts;
      if (o.n < 1) throw std::domain_error("n must be at least 1");
      std::vector<double> values;
      json params{{"mu", o.mu}, {"n", o.n}, {"seed", o.seed},
                  {"limit_law", o.limit_law}};
      if (o.limit_law) {
        values = sample_limit_law(LimitLaw(o.mu), o.n, {o.seed, 0});
      } else {
        if (sample_cmd->count("--t") == 0)
          throw std::domain_error("--t is required unless --limit-law");
        params["t"] = o.t;
        values = sample_last_zero(DriftedBMParams(o.mu, o.t), o.n,
                                  {o.seed, 0});
      }
      Table table{{"index", "value"}, {}};
      for (size_t i = 0; i < values.size(); ++i)
        table.add_row(
            {Cell::whole(static_cast<long>(i)), Cell::number(values[i])});
      json manifest = make_manifest("sample", params, o.common);
      manifest["seed"] = o.seed;
      emit(table, manifest, o.common);
    } else if (*mc_cmd) {
      const auto& o = mc_opts;
      if (mc_cdf_at->count() == 0 && mc_cross->count() == 0)
        throw std::domain_error("--cdf-at or --crossing is required");
      const McConfig cfg{o.n_paths, o.dt, {o.seed, 0}, !o.no_bridge};
      const QuadratureConfig q = o.common.quadrature();
      MCEstimate est{};
      double closed = 0.0;
      json params{{"mu", o.mu},       {"t", o.t},   {"n_paths", o.n_paths},
                  {"dt", o.dt},       {"seed", o.seed},
                  {"bridge", !o.no_bridge}};
      if (mc_cdf_at->count()) {
        const DriftedBMParams p(o.mu, o.t);
        est = estimate_last_zero_cdf(p, o.cdf_at, cfg);
        closed = last_zero_cdf(p, o.cdf_at, q);
        params["cdf_at"] = o.cdf_at;
      } else {
        const CrossingWindow w(o.crossing[0], o.crossing[1]);
        est = estimate_crossing(o.mu, w, o.t, cfg);
        closed = crossing_probability(o.mu, w, q);
        params["crossing"] = {o.crossing[0], o.crossing[1]};
      }
      const double diff = std::fabs(est.p_hat - closed);
      Table table{
          {"p_hat", "stderr", "n", "closed_form", "abs_diff", "sigmas"}, {}};
      table.add_row({Cell::number(est.p_hat), Cell::number(est.stderr_),
                     Cell::whole(est.n), Cell::number(closed),
                     Cell::number(diff),
                     Cell::number(est.stderr_ > 0 ? diff / est.stderr_ : 0)});
      json manifest = make_manifest("mc", params, o.common);
      manifest["seed"] = o.seed;
      emit(table, manifest, o.common);
    } else if (*ldp_cmd) {
      const auto& o = ldp_opts;
      const ScanTable scan =
          ldp_scan(o.mu, o.t, o.z, RGrid(o.r_min, o.r_max, o.r_points),
                   o.common.quadrature());
      Table table{{"r", "raw_log", "scaled", "theory", "abs_err",
                   "extrapolated"},
                  {}};
      append_scan_rows(table, scan);
      emit(table,
           make_manifest("ldp",
                         {{"mu", o.mu}, {"t", o.t}, {"z", o.z},
                          {"r_min", o.r_min}, {"r_max", o.r_max},
                          {"r_points", o.r_points}},
                         o.common),
           o.common);
    } else if (*md_cmd) {
      const auto& o = md_opts;
      const ScanTable scan =
          md_scan(o.mu, o.t, o.z, ModerateScale(o.beta),
                  RGrid(o.r_min, o.r_max, o.r_points), o.common.quadrature());
      Table table{{"r", "raw_log", "scaled", "theory", "abs_err", "skipped",
                   "extrapolated"},
                  {}};
      append_scan_rows(table, scan);
      emit(table,
           make_manifest("md",
                         {{"mu", o.mu}, {"t", o.t}, {"z", o.z},
                          {"beta", o.beta}, {"r_min", o.r_min},
                          {"r_max", o.r_max}, {"r_points", o.r_points}},
                         o.common),
           o.common);
    } else if (*cscan_cmd) {
      const auto& o = cscan_opts;
      const CrossingScanTable scan =
          crossing_scan(o.mu, CrossingWindow(o.a, o.b),
                        RGrid(o.r_min, o.r_max, o.r_points),
                        o.common.quadrature());
      Table table{{"r", "raw_log", "scaled_rate", "theory_rate",
                   "abs_err_rate", "scaled_prefactor", "theory_prefactor",
                   "abs_err_prefactor", "extrapolated_rate",
                   "extrapolated_prefactor"},
                  {}};
      for (const auto& row : scan.rows)
        table.add_row({Cell::number(row.r), Cell::number(row.raw_log),
                       Cell::number(row.scaled_rate),
                       Cell::number(row.theory_rate),
                       Cell::number(row.abs_err_rate),
                       Cell::number(row.scaled_prefactor),
                       Cell::number(row.theory_prefactor),
                       Cell::number(row.abs_err_prefactor),
                       Cell::number(scan.extrapolated_rate),
                       Cell::number(scan.extrapolated_prefactor)});
      emit(table,
           make_manifest("crossing-scan",
                         {{"mu", o.mu}, {"a", o.a}, {"b", o.b},
                          {"r_min", o.r_min}, {"r_max", o.r_max},
                          {"r_points", o.r_points}},
                         o.common),
           o.common);
    }
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const NumericalError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}

}  // namespace lastzero::cli
