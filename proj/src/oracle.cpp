#include "moso/oracle.hpp"

#include <cmath>
#include <limits>

namespace moso {

void StochasticOracle::constraint_coeffs(int, Vec&, double&) const {
  throw OracleError("constraint_coeffs: this oracle is not linear");
}

double ProblemSpec::feasible_slack() const {
  if (!has_analytic) {
    throw OracleError("feasible_slack: instance lacks analytic expectations");
  }
  if (strictly_feasible.size() != d) {
    throw OracleError("feasible_slack: no certified feasible point");
  }
  double slack = std::numeric_limits<double>::infinity();
  for (int i = 1; i <= m; ++i) {
    slack = std::min(slack, gamma[i - 1] - expected_value(i, strictly_feasible));
  }
  return slack;
}

Vec mc_expected_losses(StochasticOracle& oracle, const Vec& w,
                       std::int64_t samples) {
  if (samples < 1) throw OracleError("mc_expected_losses: samples must be >= 1");
  const int m = oracle.constraint_count();
  Vec mean = Vec::Zero(m + 1);
  for (std::int64_t t = 0; t < samples; ++t) {
    oracle.next();
    for (int i = 0; i <= m; ++i) {
      mean[i] += (oracle.value(i, w) - mean[i]) / static_cast<double>(t + 1);
    }
  }
  return mean;
}

std::uint64_t mix_seed(std::uint64_t base, std::uint64_t stream) {
  // splitmix64 finalizer applied to the combined word.
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace moso
