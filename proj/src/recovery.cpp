#include "wavelab/recovery.hpp"

#include <algorithm>
#include <cmath>

#include "wavelab/convergence.hpp"

namespace wavelab {

RecoveryResult recover_linear_map(const SpeedSystem& sys,
                                  const SourceData& unit_source,
                                  const std::vector<double>& epsilons,
                                  const GridSpec& g, double coupling_scale) {
  if (epsilons.size() < 2)
    throw Error("recover_linear_map needs at least two scales");

  std::vector<double> eps = epsilons;
  std::sort(eps.begin(), eps.end(), std::greater<double>());

  const BoundaryTrace reference = lambda_lin_map(sys, unit_source, g);

  RecoveryResult res;
  std::vector<std::pair<double, BoundaryTrace>> estimates;
  for (double e : eps) {
    if (!(e > 0.0)) throw Error("recovery scales must be positive");
    try {
      const BoundaryTrace lam =
          lambda_map(sys, scale_source(unit_source, e), g, coupling_scale);
      BoundaryTrace single = trace_axpby(1.0 / e, lam, 0.0, lam);
      res.report.epsilons.push_back(e);
      res.report.errors.push_back(trace_diff(single, reference));
      estimates.emplace_back(e, std::move(single));
    } catch (const BlowUpError&) {
      res.report.skipped_epsilons.push_back(e);
    }
  }
  if (estimates.size() < 2)
    throw Error("recovery: fewer than two scales survived");
  res.report.complete = res.report.skipped_epsilons.empty();

  // Two smallest surviving scales carry the least quadratic contamination.
  const auto& [ea, ta] = estimates[estimates.size() - 2];
  const auto& [eb, tb] = estimates[estimates.size() - 1];
  const double denom = eb - ea;
  res.estimate = trace_axpby(eb / denom, ta, -ea / denom, tb);

  const bool all_positive =
      std::all_of(res.report.errors.begin(), res.report.errors.end(),
                  [](double v) { return v > 0.0; });
  if (res.report.errors.size() >= 2 && all_positive)
    res.report.fitted_rate =
        log_log_slope(res.report.epsilons, res.report.errors);
  res.report.extrapolated_error = trace_diff(res.estimate, reference);
  res.report.best_single_error =
      *std::min_element(res.report.errors.begin(), res.report.errors.end());
  return res;
}

}  // namespace wavelab
