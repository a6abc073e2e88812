#include "wavelab/convergence.hpp"

#include <cmath>

#include "wavelab/errors.hpp"

namespace wavelab {

double log_log_slope(const std::vector<double>& x,
                     const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2)
    throw Error("log_log_slope needs at least two (x, y) samples");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0.0) || !(y[i] > 0.0))
      throw Error("log_log_slope requires positive samples");
    const double lx = std::log(x[i]);
    const double ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double denom = n * sxx - sx * sx;
  if (!(std::abs(denom) > 0.0))
    throw Error("log_log_slope: degenerate abscissae");
  return (n * sxy - sx * sy) / denom;
}

ConvergenceFit convergence_order(const std::vector<double>& hs,
                                 const std::vector<double>& errors) {
  ConvergenceFit fit;
  fit.order = log_log_slope(hs, errors);
  double sx = 0, sy = 0;
  for (std::size_t i = 0; i < hs.size(); ++i) {
    sx += std::log(hs[i]);
    sy += std::log(errors[i]);
  }
  fit.intercept =
      (sy - fit.order * sx) / static_cast<double>(hs.size());
  for (std::size_t i = 0; i + 1 < hs.size(); ++i)
    fit.pairwise.push_back(std::log(errors[i + 1] / errors[i]) /
                           std::log(hs[i + 1] / hs[i]));
  return fit;
}

}  // namespace wavelab
