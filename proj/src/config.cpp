#include "moso/config.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace moso {

bool in_ball(const Vec& w, double radius, double tol) {
  return w.norm() <= radius + tol;
}

bool in_box(const Vec& x, const Vec& lo, const Vec& hi, double tol) {
  if (x.size() != lo.size() || x.size() != hi.size()) return false;
  return (x.array() >= lo.array() - tol).all() &&
         (x.array() <= hi.array() + tol).all();
}

double mu_bound(double delta, double grad_bound, double radius,
                double dual_diameter) {
  if (!(delta > 0.0) || !(delta <= 1.0)) {
    throw DomainError("mu_bound: delta must lie in (0, 1], got " +
                      std::to_string(delta));
  }
  if (!(grad_bound > 0.0)) {
    throw DomainError("mu_bound: gradient bound must be positive");
  }
  if (!(radius >= 0.0) || !(dual_diameter >= 0.0)) {
    throw DomainError("mu_bound: radius and dual diameter must be nonnegative");
  }
  const double hyp = std::sqrt(radius * radius + dual_diameter * dual_diameter);
  return std::numbers::sqrt2 * grad_bound * hyp +
         2.0 * grad_bound * (radius + dual_diameter) *
             std::sqrt(2.0 * std::log(1.0 / delta));
}

double derive_step_size(double radius, double dual_diameter,
                        std::int64_t horizon, double grad_bound) {
  if (horizon < 1) throw ConfigError("derive_step_size: horizon must be >= 1");
  if (!(grad_bound > 0.0)) {
    throw ConfigError("derive_step_size: gradient bound must be positive");
  }
  if (!(radius > 0.0) || !(dual_diameter >= 0.0)) {
    throw ConfigError("derive_step_size: invalid radius or dual diameter");
  }
  const double sq = radius * radius + dual_diameter * dual_diameter;
  return std::sqrt(sq / (2.0 * static_cast<double>(horizon))) / grad_bound;
}

Thresholds Thresholds::tighten(const Vec& gamma, double mu, double theta,
                               std::int64_t horizon) {
  if (!(theta > 0.0)) throw ConfigError("tighten: theta must be positive");
  if (horizon < 1) throw ConfigError("tighten: horizon must be >= 1");
  if (!(mu >= 0.0)) throw ConfigError("tighten: mu must be nonnegative");
  Thresholds out;
  out.gamma = gamma;
  const double shift =
      mu / (theta * std::sqrt(static_cast<double>(horizon)));
  Vec tight(gamma.size());
  for (Eigen::Index i = 0; i < gamma.size(); ++i) tight[i] = gamma[i] - shift;
  out.tightened = std::move(tight);
  return out;
}

double SolverConfig::dual_diameter() const {
  return std::sqrt(dual_diameter_sq());
}

double SolverConfig::step_size() const {
  return derive_step_size(radius, dual_diameter(), horizon, grad_bound);
}

double SolverConfig::mu() const {
  return mu_bound(delta, grad_bound, radius, dual_diameter());
}

void SolverConfig::validate() const {
  std::ostringstream err;
  if (dimension < 1) {
    err << "dimension must be >= 1, got " << dimension;
  } else if (constraints < 0) {
    err << "constraint count must be >= 0, got " << constraints;
  } else if (gamma.size() != constraints) {
    err << "gamma has " << gamma.size() << " entries, expected " << constraints;
  } else if (dual_caps.size() != constraints) {
    err << "dual_caps has " << dual_caps.size() << " entries, expected "
        << constraints;
  } else if (constraints > 0 && (dual_caps.array() < 0.0).any()) {
    err << "dual caps must be nonnegative";
  } else if (!(radius > 0.0)) {
    err << "radius must be positive";
  } else if (horizon < 1) {
    err << "horizon must be >= 1";
  } else if (!(theta > 0.0)) {
    err << "theta must be positive";
  } else if (!(grad_bound > 0.0)) {
    err << "gradient bound must be positive";
  } else if (!(lipschitz >= 0.0)) {
    err << "lipschitz bound must be nonnegative";
  } else if (!(delta > 0.0)) {
    err << "delta must be positive";
  } else if (delta >= 1.0 / (2.0 * constraints + 1.0)) {
    err << "delta = " << delta << " makes the joint confidence 1 - (2m+1)delta"
        << " vacuous with m = " << constraints << "; use delta < "
        << 1.0 / (2.0 * constraints + 1.0);
  }
  const std::string msg = err.str();
  if (!msg.empty()) throw ConfigError("SolverConfig: " + msg);
}

}  // namespace moso
