#pragma once

#include <functional>
#include <memory>

#include "wavelab/field.hpp"
#include "wavelab/grid.hpp"

namespace wavelab {

/// Right-hand side of one component as a function of (t, x, y, z).
using SpaceTimeFn = std::function<double(double, double, double, double)>;

/// Forcing term for the three-component system. Either analytic (per
/// component functions, empty meaning zero) or pre-sampled per time step.
struct VecForcing {
  std::array<SpaceTimeFn, 3> fn{};
  std::shared_ptr<const std::vector<Vec3Field>> sampled;  // [step]

  bool is_zero() const { return !sampled && !fn[0] && !fn[1] && !fn[2]; }

  /// Write component `comp` at time level `step` into `out` (resized by the
  /// caller). Boundary values are taken as sampled; solvers clamp them.
  void eval(int comp, int step, const GridSpec& g, ScalarField& out) const;

  static VecForcing zero() { return {}; }
  static VecForcing from_samples(std::vector<Vec3Field> samples);
};

/// Cauchy data and forcing for the coupled system, together with the scale
/// epsilon that multiplies the unit-size profile: the stored fields are the
/// already-scaled data F = epsilon * F1.
struct SourceData {
  Vec3Field b0;  // initial displacement
  Vec3Field b1;  // initial velocity
  VecForcing f;
  double epsilon = 1.0;
};

/// Multiply stored data by `factor` and scale epsilon accordingly.
/// Analytic forcing is wrapped; sampled forcing is rescaled eagerly.
SourceData scale_source(const SourceData& src, double factor);

/// Size of the unit profile F1 = F / epsilon in the data class norm
/// ||b0||_{H^3} + ||b1||_{H^2} + ||f||_{L^2_t H^2_x}, the time integral by
/// trapezoid rule over the grid's steps. Analytic forcing is sampled.
double base_norm(const SourceData& src, const GridSpec& g);

/// Largest boundary-node magnitude across b0 and b1, for admissibility
/// checks (data must vanish on the outer boundary).
double boundary_magnitude(const SourceData& src, const GridSpec& g);

}  // namespace wavelab
