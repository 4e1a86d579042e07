#pragma once

#include <functional>
#include <utility>

#include "moso/config.hpp"
#include "moso/oracle.hpp"

namespace moso {

/// Dual caps and gradient bounds derived from an instance's certified
/// constants.
struct DualCapEstimate {
  double lambda_sum_bound = 0.0; // L / tau, bounds the sum of optimal duals
  Vec caps;                      // per-constraint cap L / tau + theta
  double theta = 0.0;
  double grad_bound = 0.0;           // G at the original levels
  double grad_bound_tightened = 0.0; // G at tightened levels when supplied,
                                     // otherwise equal to grad_bound
};

/// Combined gradient bound
///   G^2 = max( L^2 (1 + sum_i caps_i)^2,  sup_w sum_i (f_i(w) - gamma_i)^2 )
/// with the sup taken over the primal ball.  For instances with affine
/// expected constraints the sup is evaluated in closed form; otherwise it is
/// estimated by probing 10^4 domain points and inflating by 10%.
double gradient_bound(const ProblemSpec& spec, const Vec& caps,
                      const Vec& gamma);

/// caps_i = L / tau + theta.  Requires spec.tau > 0; otherwise throws
/// ConfigError instructing the caller to supply caps directly.  When
/// `tightened` is non-null, grad_bound_tightened is computed against it.
DualCapEstimate estimate_dual_caps(const ProblemSpec& spec, double theta,
                                   const Vec* tightened = nullptr);

/// One simultaneous primal-dual update from (w, lambda) using the oracle's
/// current sample:
///   w'      = project( w - eta * (g_0 + sum_i lambda_i g_i) )
///   lambda' = clamp( lambda_i + eta * (f_i(w) - gamma_i), [0, caps_i] )
/// Both sides read only the pre-update (w, lambda).  Throws OracleError when
/// the sample produces non-finite values.
std::pair<Vec, Vec> primal_dual_step(
    const Vec& w, const Vec& lambda, const StochasticOracle& sample,
    double eta, const Vec& gamma, const Vec& caps,
    const std::function<Vec(const Vec&)>& project_primal);

struct SolveOptions {
  int max_log_points = 1000;  // iterate log thinned to about this many rows
  bool evaluate = true;       // fill trace.eval from spec analytics
};

/// Averaged primal-dual run at the configured levels.  Uses cfg.gamma,
/// cfg.dual_caps and cfg.grad_bound as given; the primal domain projection
/// comes from spec.project_primal.  An oracle failure mid-run yields a
/// partial trace with the error flag set rather than an exception.
RunTrace solve_primal_dual(StochasticOracle& oracle, const ProblemSpec& spec,
                           const SolverConfig& cfg,
                           const SolveOptions& options = {});

/// Conservative variant: tightens each level by mu(delta) / (theta sqrt(T)),
/// verifies the tightened problem is strictly feasible at the instance's
/// certificate point (throwing InfeasibleError with advice otherwise),
/// recomputes the gradient bound and step size at the tightened levels, and
/// runs the same iteration.  The returned trace reports bounds against the
/// *original* levels.
RunTrace solve_primal_dual_exact(StochasticOracle& oracle,
                                 const ProblemSpec& spec,
                                 const SolverConfig& cfg,
                                 const SolveOptions& options = {});

}  // namespace moso
