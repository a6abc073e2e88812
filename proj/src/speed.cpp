#include "wavelab/speed.hpp"

#include <cmath>
#include <limits>

namespace wavelab {

SpeedViolation validate_speed(const SpeedField& c, const GridSpec& g) {
  check_shape(c.values, g, "validate_speed");
  if (!(c.m0 > 0.0)) throw GridError("speed envelope requires m0 > 0");
  if (!(c.m1 >= c.m0)) throw GridError("speed envelope requires m1 >= m0");
  if (!(c.R > 0.0)) throw GridError("speed envelope requires R > 0");

  const auto center = g.center();
  const double r2 = c.R * c.R;
  constexpr double kUnitTol = 1e-12;

  SpeedViolation v;
  for (std::size_t p = 0; p < c.values.size(); ++p) {
    const double val = c.values[p];
    const auto x = g.coords(p);
    double d2 = 0.0;
    for (int a = 0; a < g.dim; ++a) {
      const double dx = x[a] - center[a];
      d2 += dx * dx;
    }
    const bool outside = d2 > r2;
    if (!(val >= c.m0)) {
      v = {false, "squared speed below m0", p, x, val};
      return v;
    }
    if (!(val <= c.m1)) {
      v = {false, "squared speed above m1", p, x, val};
      return v;
    }
    if (outside && std::abs(val - 1.0) > kUnitTol) {
      v = {false, "squared speed not 1 outside the support ball", p, x, val};
      return v;
    }
  }
  return v;
}

double min_speed_on_inner(const SpeedSystem& sys, const GridSpec& g) {
  double m = std::numeric_limits<double>::infinity();
  for (const auto& f : sys.c) {
    check_shape(f.values, g, "min_speed_on_inner");
    for (int k = g.dim > 2 ? g.inner_lo[2] : 0;
         k <= (g.dim > 2 ? g.inner_hi[2] : 0); ++k)
      for (int j = g.dim > 1 ? g.inner_lo[1] : 0;
           j <= (g.dim > 1 ? g.inner_hi[1] : 0); ++j)
        for (int i = g.inner_lo[0]; i <= g.inner_hi[0]; ++i)
          m = std::min(m, f.values[g.index(i, j, k)]);
  }
  return m;
}

}  // namespace wavelab
