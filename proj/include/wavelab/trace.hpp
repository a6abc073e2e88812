#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "wavelab/linear.hpp"
#include "wavelab/nonlinear.hpp"

namespace wavelab {

/// Time series of the three-component state restricted to the nodes on the
/// measurement-box boundary. samples[n][node*3 + comp]; nodes are listed in
/// flat grid scan order, each carrying the quadrature weight h^(dim-1)
/// (corners counted once).
struct BoundaryTrace {
  std::vector<std::size_t> nodes;
  std::vector<std::array<double, 3>> coords;
  double weight = 0.0;
  double dt = 0.0;
  int n_steps = 0;
  std::vector<std::vector<double>> samples;
};

/// Flat indices of the measurement-box boundary nodes in scan order.
std::vector<std::size_t> inner_boundary_nodes(const GridSpec& g);

/// Restrict a trajectory to the measurement-box boundary.
BoundaryTrace trace(const WaveField& u, const GridSpec& g);

/// L2 norm over the boundary at one time level.
double trace_l2_at(const BoundaryTrace& tr, int step);

/// L2 in time (trapezoid) of the boundary L2 norm.
double trace_norm(const BoundaryTrace& tr);

/// Same norm of the difference of two traces on the same node set.
double trace_diff(const BoundaryTrace& a, const BoundaryTrace& b);

/// a*A + b*B sample-wise.
BoundaryTrace trace_axpby(double a, const BoundaryTrace& A, double b,
                          const BoundaryTrace& B);

/// Source-to-measurement maps: solve, then restrict. The nonlinear map takes
/// the already-scaled data F; the linear one takes the unit profile.
BoundaryTrace lambda_map(const SpeedSystem& sys, const SourceData& f,
                         const GridSpec& g, double coupling_scale = 1.0);
BoundaryTrace lambda_lin_map(const SpeedSystem& sys, const SourceData& f1,
                             const GridSpec& g);

}  // namespace wavelab
