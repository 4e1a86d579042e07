#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "moso/types.hpp"

namespace moso {

// High-probability deviation constant used by both solver variants:
//   mu(delta) = sqrt(2) * G * sqrt(R^2 + D^2) + 2 * G * (R + D) * sqrt(2 ln(1/delta))
// where G bounds the sampled gradient norms, R the primal radius and D the
// dual box diameter.  delta = 1 is allowed (the ln term vanishes).
double mu_bound(double delta, double grad_bound, double radius,
                double dual_diameter);

// Step size eta = sqrt((R^2 + D^2) / (2 T)) / G.
double derive_step_size(double radius, double dual_diameter,
                        std::int64_t horizon, double grad_bound);

/// Constraint levels, optionally with the conservative (tightened) variant.
struct Thresholds {
  Vec gamma;
  std::optional<Vec> tightened;

  // tightened_i = gamma_i - mu / (theta * sqrt(T)), computed exactly this way
  // so callers can reproduce it bit for bit.
  static Thresholds tighten(const Vec& gamma, double mu, double theta,
                            std::int64_t horizon);
};

/// Everything a single solver run needs.  Value type; copied into traces.
struct SolverConfig {
  int dimension = 0;        // primal dimension d
  int constraints = 0;      // number of constraint objectives m
  double radius = 1.0;      // primal ball radius R
  std::int64_t horizon = 1; // iteration count T
  double theta = 1.0;       // dual cap margin
  double delta = 0.01;      // per-event failure probability
  Vec gamma;                // constraint levels, size m
  Vec dual_caps;            // dual box upper bounds, size m
  double lipschitz = 0.0;   // subgradient norm bound L of the sampled losses
  double tau = 0.0;         // constraint-gradient lower bound; 0 = unknown
  double grad_bound = 0.0;  // combined gradient bound G driving the step size
  std::uint64_t seed = 0;   // oracle sample stream seed

  double dual_diameter_sq() const { return dual_caps.squaredNorm(); }
  double dual_diameter() const;
  double step_size() const;
  double mu() const;
  // Joint confidence 1 - (2m+1) delta for the suboptimality and violation
  // bounds holding simultaneously.
  double union_confidence() const {
    return 1.0 - (2.0 * constraints + 1.0) * delta;
  }

  /// Throws ConfigError on any inconsistency, including delta >= 1/(2m+1)
  /// which would make the joint guarantee vacuous.
  void validate() const;
};

/// One thinned log entry: the state *before* step t is applied.
struct IterateRecord {
  std::int64_t t = 0; // 1-based iteration index
  Vec w;              // primal iterate w_t
  Vec lambda;         // dual iterate lambda_t
  Vec losses;         // sampled losses f_t^i(w_t), i = 0..m
};

/// Expected losses at a point, measured under the true distribution.
struct Evaluation {
  double objective = 0.0;
  Vec constraints; // expected constraint losses minus nothing; level-free
};

/// Result of one solver run.
struct RunTrace {
  std::vector<IterateRecord> iterates; // thinned to ~1000 records
  std::int64_t log_stride = 1;
  Vec averaged;              // running mean of w_1..w_T (the returned point)
  Vec lambda_avg;            // mean dual iterate, diagnostic only
  std::optional<Evaluation> eval; // expected losses at `averaged`, if known
  SolverConfig config;       // echo of the exact configuration used
  Thresholds thresholds;     // levels the run enforced (tightened when so)
  double wall_seconds = 0.0;
  std::int64_t completed = 0; // iterations fully executed
  bool error_flag = false;    // true when the run aborted early
  std::string error_message;
  double bound_suboptimality = 0.0; // reference bound on f0(avg) - f0(opt)
  double bound_violation = 0.0;     // reference bound on f_i(avg) - gamma_i
  std::string solver_name;
};

}  // namespace moso
