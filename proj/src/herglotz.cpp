#include "wavelab/herglotz.hpp"

#include <string>

#include "wavelab/errors.hpp"

namespace wavelab {

HerglotzResult herglotz_check(const std::vector<double>& c_of_r, double dr,
                              double tol) {
  if (c_of_r.size() < 3)
    throw Error("herglotz_check needs at least three radial samples");
  if (!(dr > 0.0)) throw Error("herglotz_check requires dr > 0");
  for (std::size_t i = 0; i < c_of_r.size(); ++i)
    if (!(c_of_r[i] > 0.0))
      throw Error("speed profile must be positive, sample " +
                  std::to_string(i) + " is not");

  HerglotzResult res;
  const double inv_2dr = 0.5 / dr;
  for (std::size_t i = 1; i + 1 < c_of_r.size(); ++i) {
    const double phi_prev = (i - 1) * dr / c_of_r[i - 1];
    const double phi_next = (i + 1) * dr / c_of_r[i + 1];
    const double slope = (phi_next - phi_prev) * inv_2dr;
    if (!(slope > tol)) {
      res.pass = false;
      res.first_failing_index = i;
      res.first_failing_radius = i * dr;
      return res;
    }
  }
  return res;
}

}  // namespace wavelab
