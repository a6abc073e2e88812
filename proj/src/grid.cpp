#include "wavelab/grid.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "wavelab/errors.hpp"

namespace wavelab {

double GridSpec::inner_diameter() const {
  double s = 0.0;
  for (int a = 0; a < dim; ++a) {
    const double len = inner[a].length();
    s += len * len;
  }
  return std::sqrt(s);
}

namespace {

int snap_index(double x, double lo, double h) {
  return static_cast<int>(std::lround((x - lo) / h));
}

}  // namespace

GridSpec make_grid(int dim, const std::vector<AxisInterval>& outer_extent,
                   const std::vector<AxisInterval>& inner_extent, double h,
                   double T, double stability_factor) {
  if (dim < 1 || dim > kMaxDim)
    throw GridError("dim must be 1, 2 or 3, got " + std::to_string(dim));
  if (outer_extent.size() != static_cast<std::size_t>(dim) ||
      inner_extent.size() != static_cast<std::size_t>(dim))
    throw GridError("extent count does not match dim");
  if (!(h > 0.0)) throw GridError("grid spacing h must be positive");
  if (!(T > 0.0)) throw GridError("final time T must be positive");
  if (!(stability_factor > 0.0) || stability_factor > 1.0)
    throw GridError("stability_factor must lie in (0, 1]");

  GridSpec g;
  g.dim = dim;
  g.h = h;
  g.T = T;
  g.stability_factor = stability_factor;

  for (int a = 0; a < dim; ++a) {
    const AxisInterval out = outer_extent[a];
    if (!(out.hi > out.lo))
      throw GridError("outer extent not well ordered on axis " +
                      std::to_string(a));
    const double cells = out.length() / h;
    const int nc = static_cast<int>(std::lround(cells));
    if (nc < 2 || std::abs(cells - nc) > 1e-6 * std::max(1.0, cells))
      throw GridError("h does not divide outer extent on axis " +
                      std::to_string(a));
    g.outer[a] = out;
    g.n[a] = nc + 1;

    const AxisInterval in = inner_extent[a];
    if (!(in.hi > in.lo))
      throw GridError("inner extent not well ordered on axis " +
                      std::to_string(a));
    const int ilo = snap_index(in.lo, out.lo, h);
    const int ihi = snap_index(in.hi, out.lo, h);
    if (ilo < 1 || ihi > g.n[a] - 2 || ilo >= ihi)
      throw GridError(
          "inner extent must be strictly inside the outer extent with at "
          "least one cell of margin on axis " +
          std::to_string(a));
    g.inner_lo[a] = ilo;
    g.inner_hi[a] = ihi;
    g.inner[a] = {out.lo + ilo * h, out.lo + ihi * h};
  }

  const double dt0 = stability_factor * h / std::sqrt(static_cast<double>(dim));
  g.n_steps = static_cast<int>(std::ceil(T / dt0 - 1e-12));
  if (g.n_steps < 1) g.n_steps = 1;
  g.dt = T / g.n_steps;
  return g;
}

}  // namespace wavelab
