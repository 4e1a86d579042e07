#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "moso/baselines.hpp"
#include "moso/generators.hpp"
#include "moso/solver.hpp"

namespace moso {

/// Which generator to instantiate and with what parameters.  Parsed from the
/// flat key=value config format (see parse_config_text).
struct ProblemConfig {
  std::string kind = "quadratic"; // quadratic | portfolio | np | np_file | lp
  int d = 5;
  int m = 2;
  std::uint64_t seed = 1;   // instance seed (quadratic fixture)
  double radius = 1.0;      // lp / np domain radius
  double noise = 0.25;      // lp coefficient noise scale
  double gamma = 0.0;       // np level / portfolio return floor
  double grid = 0.0;        // portfolio grid resolution (0 = no optimum)
  std::vector<double> mean; // portfolio mean returns
  Mat cov;                  // portfolio covariance
  std::vector<double> pos_mean, neg_mean; // np class means
  double pos_sigma = 1.0, neg_sigma = 1.0;
  std::string data;         // np_file path
  std::vector<double> cost; // lp objective
  Mat a;                    // lp constraint rows
  std::vector<double> b;    // lp offsets
};

struct ExperimentConfig {
  ProblemConfig problem;
  std::string solver = "pd"; // pd | pd_exact | scalarize | burn_in
  double theta = 1.0;
  double delta = 0.01;
  std::string caps_mode = "auto"; // auto | oracle | explicit
  Vec caps_explicit;
  Vec weights;                // scalarization weights (m+1 entries)
  double burn_fraction = 0.3;
  std::string relax_mode = "auto";
  Vec relax_explicit;
  std::vector<std::int64_t> horizons{1000};
  int n_seeds = 1;
  std::uint64_t base_seed = 1;
  std::int64_t eval_samples = 1000000; // Monte Carlo fallback evaluation size
  int threads = 1;
  std::string out_dir;
};

/// Parses the flat dotted key=value format ('#' comments, blank lines
/// ignored).  Unknown keys raise ConfigError naming the key.
ExperimentConfig parse_config_text(const std::string& text);
ExperimentConfig parse_config_file(const std::string& path);

/// Instantiates the generator described by the problem section.
ProblemSpec build_problem(const ProblemConfig& pc);

/// One experiment cell: a single (solver, T, seed) run.
struct RunRow {
  std::string solver;
  std::string problem;
  std::int64_t T = 0;
  std::uint64_t seed = 0;
  double subopt = 0.0; // NaN when the instance optimum is unknown
  Vec viol;            // expected constraint loss minus level, signed
  double bound_subopt = 0.0;
  double bound_viol = 0.0;
  double wall_ms = 0.0;
};

struct TAggregate {
  std::int64_t T = 0;
  double median_subopt = 0.0;
  double median_max_viol = 0.0;
  double frac_subopt_over_bound = 0.0; // fraction of seeds over the bound
  double frac_viol_over_bound = 0.0;   // any constraint over gamma + bound
  double frac_infeasible = 0.0;        // any constraint over gamma
};

struct ExperimentReport {
  ExperimentConfig config;
  std::string problem_name;
  std::vector<RunRow> rows;        // fixed order: T-major, then seed
  std::vector<TAggregate> aggregates;
  double rate_slope = 0.0;     // log-log fit of median subopt vs T (NaN if
  double rate_residual = 0.0;  // fewer than 3 horizons)
  double union_confidence = 0.0;

  std::string csv() const;     // schema: solver,problem,T,seed,subopt,
                               // viol_1..viol_m,bound_subopt,bound_viol,wall_ms
  std::string summary() const; // human-readable digest
};

ExperimentReport run_experiment(const ExperimentConfig& cfg);

/// Writes runs.csv and report.txt under out_dir (created if missing).
void write_report(const ExperimentReport& report, const std::string& out_dir);

struct RateFit {
  double slope = 0.0;
  double intercept = 0.0;
  double residual = 0.0; // sum of squared log-space residuals
};

/// Least-squares slope of log(error) against log(T).  Errors are clamped
/// below at 1e-12 before taking logs; fewer than 3 points is a ConfigError.
RateFit fit_rate(const std::vector<std::pair<double, double>>& t_and_error);

struct OracleCheckResult {
  std::string check;
  bool pass = false;
  double stat = 0.0;   // measured statistic
  double limit = 0.0;  // allowed bound
  std::string detail;
};

/// Estimator-vs-analytic diagnostics for a generated instance: sample-mean
/// unbiasedness (4 sigma), sampled-gradient unbiasedness, finite-difference
/// consistency of the analytic gradients, subgradient norms vs L, and
/// midpoint convexity of expected losses.
std::vector<OracleCheckResult> validate_oracle(const ProblemSpec& spec,
                                               std::uint64_t seed,
                                               int points = 5,
                                               std::int64_t samples = 100000);

}  // namespace moso
