#pragma once

#include <vector>

namespace wavelab {

struct ConvergenceFit {
  double order = 0.0;      // least-squares slope of log(err) vs log(h)
  double intercept = 0.0;  // log of the fitted error constant
  std::vector<double> pairwise;  // orders from consecutive refinements
};

/// Fit the observed order of accuracy from (h, error) samples. Requires at
/// least two samples with positive h and error, sorted or not.
ConvergenceFit convergence_order(const std::vector<double>& hs,
                                 const std::vector<double>& errors);

/// Least-squares slope of log(y) vs log(x); shared with the scaling sweeps.
double log_log_slope(const std::vector<double>& x,
                     const std::vector<double>& y);

}  // namespace wavelab
