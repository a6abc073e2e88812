#pragma once

#include <cstddef>
#include <vector>

namespace wavelab {

struct HerglotzResult {
  bool pass = true;
  std::size_t first_failing_index = 0;  // only meaningful when pass is false
  double first_failing_radius = 0.0;
};

/// Check d/dr (r / c(r)) > tol at every interior sample of a radial speed
/// profile given at r_i = i * dr, using centered differences. Samples must be
/// strictly positive (c, not c^2). Throws Error on bad input.
HerglotzResult herglotz_check(const std::vector<double>& c_of_r, double dr,
                              double tol = 1e-10);

}  // namespace wavelab
