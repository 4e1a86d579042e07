#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>

#include "moso/types.hpp"

namespace moso {

/// A stream of i.i.d. sampled loss functions (f_t^0, ..., f_t^m).
/// Index 0 is the objective; 1..m are the constraint losses.  value() and
/// gradient() refer to the sample drawn by the most recent next(); they are
/// pure given that sample and may be called repeatedly in any order.
class StochasticOracle {
 public:
  virtual ~StochasticOracle() = default;

  virtual int dim() const = 0;
  virtual int constraint_count() const = 0;

  /// Draws the next i.i.d. sample.
  virtual void next() = 0;

  /// 1-based count of next() calls; 0 before the first draw.
  virtual std::uint64_t draw_index() const = 0;

  /// Sampled loss value f_t^i(w), i in [0, m].  Throws OracleError when
  /// called before the first next() or with an out-of-range index.
  virtual double value(int i, const Vec& w) const = 0;

  /// Sampled (sub)gradient of f_t^i at w, written into `out`.
  virtual void gradient(int i, const Vec& w, Vec& out) const = 0;

  Vec gradient(int i, const Vec& w) const {
    Vec g(dim());
    gradient(i, w, g);
    return g;
  }

  /// Independent copy with identical distribution and state.
  virtual std::unique_ptr<StochasticOracle> clone() const = 0;

  /// True when the sampled constraints are affine, f_t^i(w) = <a, w> - b.
  virtual bool linear_constraints() const { return false; }

  /// Coefficients of the current sample's i-th constraint (i in [1, m]).
  /// Only valid when linear_constraints() is true.
  virtual void constraint_coeffs(int i, Vec& a, double& b) const;
};

/// Optimum attached to a generated instance when it is known in closed form
/// (or via certified enumeration / brute force at generation time).
struct KnownOptimum {
  Vec w;                  // a minimizer of the expected objective
  double objective = 0.0; // its expected objective value
  Vec multipliers;        // optimal dual multipliers, empty when unknown
};

/// Full description of a problem instance: geometry, certified constants,
/// oracle factory, and (when available) analytic expectations.
struct ProblemSpec {
  int d = 0;
  int m = 0;
  double radius = 1.0; // primal ball radius R
  Vec gamma;           // constraint levels
  double lipschitz = 0.0; // bound on sampled subgradient norms
  double tau = 0.0;       // lower bound on convex combinations of expected
                          // constraint gradients; 0 when not certified

  /// Fresh oracle over this instance's distribution, seeded independently.
  std::function<std::unique_ptr<StochasticOracle>(std::uint64_t seed)>
      make_oracle;

  bool has_analytic = false;
  std::function<double(int, const Vec&)> expected_value;   // i in [0, m]
  std::function<Vec(int, const Vec&)> expected_gradient;   // i in [0, m]

  std::optional<KnownOptimum> optimum;

  /// A point with expected constraint losses strictly below gamma; generators
  /// always certify one (or refuse to build the instance).
  Vec strictly_feasible;

  /// Projection onto the primal domain; defaults to the radius-R ball.
  std::function<Vec(const Vec&)> project_primal;

  /// Expected constraints in affine form f_i(w) = <row_i, w> - offset_i,
  /// set by generators whose constraints are affine in w.
  bool linear_expected = false;
  Mat constraint_normals;  // m x d
  Vec constraint_offsets;  // m

  std::string name;

  /// min_i (gamma_i - expected constraint loss at strictly_feasible).
  double feasible_slack() const;
};

/// Monte Carlo estimate of the expected losses at w using `samples` fresh
/// draws from the oracle; index i result in entry i (0..m).
Vec mc_expected_losses(StochasticOracle& oracle, const Vec& w,
                       std::int64_t samples);

/// Stable mix of a base seed and a stream index (splitmix64 finalizer);
/// distinct stream indices give effectively independent generator seeds.
std::uint64_t mix_seed(std::uint64_t base, std::uint64_t stream);

}  // namespace moso
