#include "moso/projection.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

namespace moso {

namespace {

// Unit-normal copy of the system; zero rows are dropped when vacuous and
// reported as infeasible when contradictory (0 <= b with b < 0).
std::vector<Halfspace> normalized(const std::vector<Halfspace>& halfspaces,
                                  int dim) {
  std::vector<Halfspace> out;
  out.reserve(halfspaces.size());
  for (const auto& h : halfspaces) {
    if (h.normal.size() != dim) {
      throw ConfigError("halfspace normal has dimension " +
                        std::to_string(h.normal.size()) + ", expected " +
                        std::to_string(dim));
    }
    const double norm = h.normal.norm();
    if (norm <= 1e-300) {
      if (h.offset < -1e-12) {
        throw InfeasibleError(
            "halfspace with zero normal and negative offset is empty");
      }
      continue;
    }
    out.push_back({h.normal / norm, h.offset / norm});
  }
  return out;
}

double max_violation(const Vec& x, const std::vector<Halfspace>& hs) {
  double v = 0.0;
  for (const auto& h : hs) v = std::max(v, h.normal.dot(x) - h.offset);
  return v;
}

}  // namespace

Vec project_ball(const Vec& w, double radius) {
  if (!(radius > 0.0)) throw ConfigError("project_ball: radius must be positive");
  const double norm = w.norm();
  if (norm <= radius) return w;
  return w * (radius / norm);
}

Vec project_box(const Vec& x, const Vec& lo, const Vec& hi) {
  if (lo.size() != x.size() || hi.size() != x.size()) {
    throw ConfigError("project_box: bound sizes do not match the point");
  }
  if ((lo.array() > hi.array()).any()) {
    throw ConfigError("project_box: lower bound exceeds upper bound");
  }
  return x.cwiseMax(lo).cwiseMin(hi);
}

Vec project_simplex(const Vec& w) {
  const Eigen::Index d = w.size();
  if (d < 1) throw ConfigError("project_simplex: empty input");
  std::vector<double> u(w.data(), w.data() + d);
  std::sort(u.begin(), u.end(), std::greater<double>());
  double cum = 0.0;
  double threshold = u[0] - 1.0;
  for (Eigen::Index j = 0; j < d; ++j) {
    cum += u[j];
    const double t = (cum - 1.0) / static_cast<double>(j + 1);
    if (u[j] - t > 0.0) threshold = t;
  }
  return (w.array() - threshold).max(0.0);
}

Vec polyhedron_min_norm_point(const std::vector<Halfspace>& halfspaces,
                              int dim) {
  if (dim < 1) throw ConfigError("polyhedron_min_norm_point: dim must be >= 1");
  const auto hs = normalized(halfspaces, dim);
  const int k = static_cast<int>(hs.size());
  if (k > 20) {
    throw ConfigError(
        "polyhedron_min_norm_point: enumeration supports at most 20 rows");
  }
  if (k == 0) return Vec::Zero(dim);

  // z = 0 is optimal iff every offset is nonnegative.
  bool origin_ok = true;
  for (const auto& h : hs) origin_ok = origin_ok && (h.offset >= 0.0);
  if (origin_ok) return Vec::Zero(dim);

  // KKT enumeration over active subsets: the optimum is the min-norm
  // solution of A_S z = b_S for some full-row-rank S with multipliers >= 0.
  bool found = false;
  Vec best;
  double best_norm = std::numeric_limits<double>::infinity();
  const double feas_tol = 1e-9;
  for (unsigned mask = 1; mask < (1u << k); ++mask) {
    const int s = std::popcount(mask);
    if (s > dim) continue;
    Mat a(s, dim);
    Vec b(s);
    int r = 0;
    for (int j = 0; j < k; ++j) {
      if (mask & (1u << j)) {
        a.row(r) = hs[j].normal.transpose();
        b[r] = hs[j].offset;
        ++r;
      }
    }
    Eigen::FullPivLU<Mat> lu(a);
    if (lu.rank() < s) continue; // same face reachable via a smaller subset
    const Mat gram = a * a.transpose();
    const Vec nu = gram.llt().solve(b);
    if ((nu.array() > feas_tol).any()) continue; // multiplier -2 nu_j < 0
    const Vec z = a.transpose() * nu;
    if (max_violation(z, hs) > feas_tol) continue;
    const double n = z.norm();
    if (n < best_norm) {
      best = z;
      best_norm = n;
      found = true;
    }
  }
  if (!found) {
    throw InfeasibleError(
        "polyhedron_min_norm_point: the halfspace intersection is empty");
  }
  return best;
}

Vec project_halfspaces(const Vec& w, const std::vector<Halfspace>& halfspaces,
                       double radius, const DykstraOptions& options) {
  const int dim = static_cast<int>(w.size());
  if (dim < 1) throw ConfigError("project_halfspaces: empty input");
  const bool bounded = std::isfinite(radius);
  if (bounded && !(radius > 0.0)) {
    throw ConfigError("project_halfspaces: radius must be positive");
  }
  const auto hs = normalized(halfspaces, dim);

  if (max_violation(w, hs) <= 0.0 && (!bounded || w.norm() <= radius)) {
    return w;
  }
  if (hs.empty()) return bounded ? project_ball(w, radius) : w;

  // Feasibility probe: the min-norm point certifies whether the polyhedron
  // is empty and, when bounded, whether it reaches the ball.
  const Vec probe = polyhedron_min_norm_point(halfspaces, dim);
  if (bounded && probe.norm() > radius * (1.0 + 1e-12) + 1e-12) {
    throw InfeasibleError(
        "project_halfspaces: polyhedron does not intersect the ball");
  }

  const int sets = static_cast<int>(hs.size()) + (bounded ? 1 : 0);
  Vec x = w;
  std::vector<Vec> corrections(sets, Vec::Zero(dim));
  for (int cycle = 0; cycle < options.max_cycles; ++cycle) {
    const Vec x_before = x;
    for (int s = 0; s < sets; ++s) {
      const Vec y = x + corrections[s];
      Vec z;
      if (s < static_cast<int>(hs.size())) {
        const double excess = hs[s].normal.dot(y) - hs[s].offset;
        z = excess > 0.0 ? Vec(y - excess * hs[s].normal) : y;
      } else {
        z = project_ball(y, radius);
      }
      corrections[s] = y - z;
      x = z;
    }
    if ((x - x_before).norm() < options.tol) {
      const bool ok = max_violation(x, hs) <= options.feas_tol &&
                      (!bounded || x.norm() <= radius + options.feas_tol);
      if (ok) return x;
    }
  }
  throw ConvergenceError(
      "project_halfspaces: Dykstra iteration cap reached without tolerance");
}

}  // namespace moso
