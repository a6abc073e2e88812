#pragma once

#include <vector>

#include "wavelab/field.hpp"
#include "wavelab/grid.hpp"
#include "wavelab/source.hpp"
#include "wavelab/speed.hpp"

namespace wavelab {

/// Full trajectory of one scalar component, snapshots[n] at t = n*dt.
struct ScalarWaveField {
  std::vector<ScalarField> snapshots;
  GridSpec grid;
};

/// Full trajectory of the three-component state.
struct WaveField {
  std::vector<Vec3Field> snapshots;
  GridSpec grid;

  ScalarWaveField component(int c) const;
};

/// Scalar forcing counterpart of VecForcing.
struct ScalarForcing {
  SpaceTimeFn fn;
  std::shared_ptr<const std::vector<ScalarField>> sampled;

  bool is_zero() const { return !sampled && !fn; }
  void eval(int step, const GridSpec& g, ScalarField& out) const;
  static ScalarForcing zero() { return {}; }
};

/// Leapfrog solve of u_tt = c^2 Lap u + f with zero Dirichlet boundary,
/// u(0) = b0, u_t(0) = b1, second-order Taylor start. Throws StabilityError
/// if dt*sqrt(dim)*max c > h and BlowUpError if the state leaves the finite
/// range during stepping.
ScalarWaveField solve_scalar_linear(const SpeedField& c, const ScalarField& b0,
                                    const ScalarField& b1,
                                    const ScalarForcing& f, const GridSpec& g);

/// Same scheme applied to the decoupled three-component system with
/// per-component speeds. epsilon in `src` has no effect here beyond the
/// stored field values.
WaveField solve_system_linear(const SpeedSystem& sys, const SourceData& src,
                              const GridSpec& g);

/// CFL check used by every solver: dt * sqrt(dim) * sqrt(max c^2) <= h.
void check_cfl(double max_c2, const GridSpec& g);

/// Residual of the interior leapfrog stencil applied to a stored trajectory:
/// r^n = (u^{n+1} - 2u^n + u^{n-1})/dt^2 - c^2 Lap_h u^n - f^n for
/// n = 1..n_steps-1 (boundary rows zero). Used to verify that a trajectory
/// satisfies the scheme exactly.
std::vector<ScalarField> interior_residual(const ScalarWaveField& u,
                                           const SpeedField& c,
                                           const ScalarForcing& f);

/// Discrete time-derivative snapshot at level n: centered at interior
/// levels, one-sided at n = 0 and n = n_steps.
ScalarField time_derivative(const ScalarWaveField& u, int n);
Vec3Field time_derivative(const WaveField& u, int n);

/// Trajectory norm max_n ||u^n||_{H^1} + max_n ||D_t u^n||_{L^2}.
double s_norm(const WaveField& u);

/// Same norm of the difference of two trajectories on the same grid.
double s_norm_diff(const WaveField& a, const WaveField& b);

/// max_n ||u^n||_{L^2} and the same for a difference.
double c0_l2_norm(const WaveField& u);
double c0_l2_diff(const WaveField& a, const WaveField& b);

}  // namespace wavelab
