#pragma once

#include <vector>

#include "moso/types.hpp"

namespace moso {

/// Closed halfspace {z : <normal, z> <= offset}.
struct Halfspace {
  Vec normal;
  double offset = 0.0;
};

/// Euclidean projection onto the ball of the given radius.  Points already
/// inside are returned unchanged (bitwise).
Vec project_ball(const Vec& w, double radius);

/// Coordinatewise clamp onto [lo, hi].  Throws ConfigError when lo > hi.
Vec project_box(const Vec& x, const Vec& lo, const Vec& hi);

/// Projection onto the probability simplex via the sort-and-threshold rule,
/// O(d log d).
Vec project_simplex(const Vec& w);

struct DykstraOptions {
  int max_cycles = 10000;
  double tol = 1e-10;      // per-cycle displacement stopping threshold
  double feas_tol = 1e-8;  // final constraint satisfaction requirement
};

/// Projection onto the intersection of halfspaces and a ball (radius may be
/// +infinity for a pure polyhedron) by Dykstra's alternating method.
/// Throws InfeasibleError when the intersection is provably empty and
/// ConvergenceError when the cycle cap is hit without reaching tolerance.
Vec project_halfspaces(const Vec& w, const std::vector<Halfspace>& halfspaces,
                       double radius, const DykstraOptions& options = {});

/// Minimum-norm point of {z : <a_j, z> <= b_j}.  Exact active-set
/// enumeration; intended as a feasibility probe for small systems (k <= 20).
/// Throws InfeasibleError when the polyhedron is empty.
Vec polyhedron_min_norm_point(const std::vector<Halfspace>& halfspaces,
                              int dim);

}  // namespace moso
