#pragma once

#include "moso/config.hpp"
#include "moso/oracle.hpp"
#include "moso/solver.hpp"

namespace moso {

/// Projected SGD on the weighted sum sum_i weights_i * f_t^i (index 0 is the
/// objective), step size (R / L) / sqrt(t).  Weights must be nonnegative and
/// not all zero.  Constraint levels play no role in the iteration; the trace
/// reports no guarantee bounds.
RunTrace solve_scalarized(StochasticOracle& oracle, const ProblemSpec& spec,
                          const SolverConfig& cfg, const Vec& weights,
                          const SolveOptions& options = {});

/// Running-mean estimate of affine constraint coefficients from n draws.
/// Only the running means and second moments are retained, never the draws.
struct BurnInEstimate {
  Mat normals_hat;  // m x d coefficient means
  Vec offsets_hat;  // m offset means
  Mat normals_var;  // unbiased per-coefficient sample variance
  Vec offsets_var;
  std::int64_t samples = 0;

  /// Default slack: 2 * (largest coefficient std) / sqrt(n).
  Vec default_relaxation(const Vec& gamma) const;
};

/// Consumes n draws from the oracle (which must have linear constraints).
BurnInEstimate estimate_constraints(StochasticOracle& oracle, std::int64_t n);

/// Largest absolute estimation error over all constraint coefficients and
/// offsets, measured against the instance's affine expected constraints.
double coefficient_error(const BurnInEstimate& est, const ProblemSpec& spec);

struct BurnInOptions {
  double burn_fraction = 0.3; // fraction of the budget spent estimating
  Vec relaxation;             // per-constraint slack; empty = default rule
  SolveOptions solve;
};

/// Two-phase baseline: spend burn_fraction * T draws estimating the affine
/// constraints, then run projected SGD on the objective over the estimated
/// (relaxed) feasible region intersected with the ball.  Requires an oracle
/// with linear constraints and burn_fraction in (0, 1).  An empty estimated
/// region surfaces as InfeasibleError.
RunTrace solve_burn_in(StochasticOracle& oracle, const ProblemSpec& spec,
                       const SolverConfig& cfg,
                       const BurnInOptions& options = {});

}  // namespace moso
