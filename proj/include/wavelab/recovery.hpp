#pragma once

#include <vector>

#include "wavelab/trace.hpp"

namespace wavelab {

struct RecoveryReport {
  std::vector<double> epsilons;
  std::vector<double> errors;    // distance of each single-scale estimate
                                 // from the linear map's trace
  double fitted_rate = 0.0;      // slope of log(error) vs log(epsilon)
  double extrapolated_error = 0.0;
  double best_single_error = 0.0;
  bool complete = false;         // no scale blew up or was skipped
  std::vector<double> skipped_epsilons;
};

struct RecoveryResult {
  BoundaryTrace estimate;  // Richardson combination of the two smallest scales
  RecoveryReport report;
};

/// Recover the linearized measurement map from nonlinear measurements:
/// L(eps) = Lambda(eps * F1) / eps for each scale, then the two-point
/// Richardson combination (eps_b L(eps_a) - eps_a L(eps_b)) / (eps_b - eps_a)
/// of the two smallest surviving scales. Blown-up scales are recorded and
/// skipped. The report's errors compare against the directly computed linear
/// map (available here because the speeds are known; an observer would only
/// have the estimates).
RecoveryResult recover_linear_map(const SpeedSystem& sys,
                                  const SourceData& unit_source,
                                  const std::vector<double>& epsilons,
                                  const GridSpec& g,
                                  double coupling_scale = 1.0);

}  // namespace wavelab
