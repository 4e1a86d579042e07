#pragma once

#include <cstdint>
#include <string>

#include "moso/oracle.hpp"

namespace moso {

/// Mean-square return objective with an expected-return floor on the
/// probability simplex.  Samples r ~ N(mean, covariance); the objective is
/// <r, w>^2 and the constraint is min_return - <r, w> with level 0.
/// When grid_resolution > 0 (and d <= 3) a simplex-grid minimizer is
/// attached as the known optimum.  Throws GeneratorError when no strictly
/// feasible portfolio exists (max_i mean_i <= min_return).
ProblemSpec make_portfolio(const Vec& mean_return, const Mat& covariance,
                           double min_return, double grid_resolution = 0.0);

/// Isotropic Gaussian class-conditional model for one-sided error control.
struct GaussianClass {
  Vec mean;
  double sigma = 1.0;
};

/// Hinge-loss classification where the negative-class hinge risk must stay
/// below `gamma` while positive-class hinge risk is minimized over the
/// radius-R ball.  Expected losses and gradients are closed form for
/// isotropic Gaussian classes in any dimension.
ProblemSpec make_np_classification(const GaussianClass& positive,
                                   const GaussianClass& negative, double gamma,
                                   double radius);

/// Same problem over an empirical sample file: whitespace-separated rows of
/// "label x_1 ... x_d" with labels +1/-1.  The oracle resamples rows
/// uniformly; expected values are exact means over the file.
ProblemSpec make_np_from_file(const std::string& path, double gamma,
                              double radius);

/// Linear objective <c, w> with linear constraints <a_i, w> <= b_i observed
/// through clipped Gaussian coefficient noise of scale `noise`, solved over
/// the radius-R ball.  Constraint levels are all 0.  The exact optimum over
/// the ball is attached via active-set enumeration.
ProblemSpec make_stochastic_lp(const Vec& cost, const Mat& a, const Vec& b,
                               double noise, double radius);

struct QuadraticFixtureOptions {
  double radius = 1.0;
  double noise_obj = 0.1;      // objective noise scale (clipped Gaussian)
  double noise_con = 0.1;      // constraint coefficient noise scale
  double clip_sigmas = 4.0;    // clip at this many standard deviations
  double center_lo = 0.78;     // ||center|| drawn uniformly in [lo, hi]
  double center_hi = 0.85;
  double cone_degrees = 15.0;  // constraint normals within this angle of the
                               // center direction
  double offset_lo = 0.50;     // constraint offsets drawn in [lo, hi]
  double offset_hi = 0.60;
  double activity_margin = 0.05;  // required <a_i, center> - b_i at the center
  double optimum_interior = 0.97; // required ||w*|| <= interior * radius
};

/// Known-optimum fixture: squared-distance objective ||w - center||^2 with
/// linear noise, and m affine constraints arranged so the unconstrained
/// minimizer is infeasible.  The exact optimum, multipliers, tau and L are
/// computed at generation time.  Degenerate draws are retried with a
/// perturbed seed.
ProblemSpec make_known_optimum_quadratic(
    int d, int m, std::uint64_t seed,
    const QuadraticFixtureOptions& options = {});

}  // namespace moso
