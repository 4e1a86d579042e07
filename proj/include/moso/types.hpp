#pragma once

#include <Eigen/Core>
#include <stdexcept>
#include <string>

namespace moso {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid configuration: bad sizes, vacuous confidence levels, unknown keys.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The requested feasible set is empty (or provably too tight).
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

/// An iterative routine hit its iteration cap before reaching tolerance.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// A problem generator could not produce a valid instance.
class GeneratorError : public Error {
 public:
  using Error::Error;
};

/// A stochastic oracle was misused or produced non-finite output.
class OracleError : public Error {
 public:
  using Error::Error;
};

/// True when ||w|| <= radius + tol.
bool in_ball(const Vec& w, double radius, double tol = 1e-9);

/// True when lo - tol <= x <= hi + tol coordinatewise.
bool in_box(const Vec& x, const Vec& lo, const Vec& hi, double tol = 1e-9);

}  // namespace moso
