#pragma once

#include <vector>

#include "wavelab/linear.hpp"

namespace wavelab {

/// Coupled problem: every component is driven by the shared quadratic
/// coupling |u|^2 = u1^2 + u2^2 + u3^2 plus its own forcing.
/// coupling_scale is a knob for experiments; 0 reduces to the linear system.
struct NonlinearProblem {
  SpeedSystem sys;
  SourceData source;
  GridSpec grid;
  double coupling_scale = 1.0;
};

/// Leapfrog solve of the coupled system: the nonlinearity is evaluated at
/// the current step, so every trajectory satisfies the same explicit stencil
/// as the linear scheme with f replaced by f + |u|^2. Throws StabilityError
/// on a CFL violation and BlowUpError when the amplitude leaves the finite
/// sentinel range.
WaveField solve_coupled(const NonlinearProblem& prob);

struct PicardReport {
  int iterations = 0;
  bool converged = false;
  std::vector<double> residuals;  // S-norm of successive iterate differences
  double contraction_ratio = 0.0;  // max residual ratio after the first step
};

struct PicardSolution {
  WaveField u;
  PicardReport report;
};

/// Fixed-point iteration: W_0 solves the linear system, W_k solves it with
/// forcing f + |W_{k-1}|^2 sampled per step. Stops when the S-norm of the
/// iterate difference drops below tol or after max_iterations.
PicardSolution duhamel_picard(const NonlinearProblem& prob, double tol,
                              int max_iterations);

}  // namespace wavelab
