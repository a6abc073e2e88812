#pragma once

#include <functional>

#include "wavelab/linear.hpp"
#include "wavelab/nonlinear.hpp"

namespace wavelab {

/// Two-term small-amplitude expansion of the coupled solve:
///   w1 solves the linear system driven by the unit-size data F1,
///   w2 solves it with zero data and forcing |w1|^2 in every component,
///   w = eps*w1 + eps^2*w2.
struct ParametrixBundle {
  WaveField w1;
  WaveField w2;
  WaveField w;
  double epsilon = 0.0;
};

/// Build the expansion for data scale epsilon. `unit_source` must carry the
/// unit-size profile (its stored fields are used as-is; epsilon in it is
/// ignored and treated as 1).
ParametrixBundle build_parametrix(const SpeedSystem& sys,
                                  const SourceData& unit_source, double epsilon,
                                  const GridSpec& g);

struct ParametrixErrorRecord {
  double epsilon = 0.0;
  double error = 0.0;        // S-norm of (coupled solve) - w
  double first_order = 0.0;  // S-norm of (coupled solve) - eps*w1
  double bound = 0.0;        // eps^3 * envelope, when an envelope is given
  double ratio = 0.0;        // error / bound (0 when no envelope)
};

/// Compare the expansion against the coupled solve at the same scale.
/// `envelope` optionally maps T to the growth constant in the eps^3 bound.
ParametrixErrorRecord parametrix_error(
    const ParametrixBundle& bundle, const SpeedSystem& sys,
    const SourceData& unit_source, const GridSpec& g,
    const std::function<double(double)>& envelope = {});

}  // namespace wavelab
