#pragma once

#include <array>
#include <string>

#include "wavelab/field.hpp"
#include "wavelab/grid.hpp"

namespace wavelab {

/// Squared wave speed c^2 sampled at grid nodes, with its admissibility
/// envelope: m0 <= c^2 <= m1 on the box and c^2 = 1 outside the ball of
/// radius R about the box center.
struct SpeedField {
  ScalarField values;  // c^2 per node
  double m0 = 0.0;
  double m1 = 0.0;
  double R = 0.0;

  double max_value() const { return max_abs(values); }
};

struct SpeedViolation {
  bool pass = true;
  std::string reason;
  std::size_t node = 0;
  std::array<double, 3> x{0.0, 0.0, 0.0};
  double value = 0.0;
};

/// Check the admissibility envelope node by node in flat scan order and
/// report the first violation. Throws FieldShapeError on a size mismatch and
/// GridError if the envelope itself is inconsistent (m0 <= 0, m1 < m0,
/// R <= 0, or 1 outside [m0, m1] while the ball does not cover the box).
SpeedViolation validate_speed(const SpeedField& c, const GridSpec& g);

/// One squared speed per component of the coupled system.
struct SpeedSystem {
  std::array<SpeedField, 3> c;

  double max_value() const {
    double m = 0.0;
    for (const auto& f : c) m = std::max(m, f.max_value());
    return m;
  }
};

/// Smallest squared speed over the measurement box, over all components.
double min_speed_on_inner(const SpeedSystem& sys, const GridSpec& g);

}  // namespace wavelab
