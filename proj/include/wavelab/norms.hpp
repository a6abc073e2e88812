#pragma once

#include "wavelab/field.hpp"
#include "wavelab/grid.hpp"

namespace wavelab {

/// Sobolev order k in 0..3. Construction validates the range.
struct SobolevOrder {
  int k;
  explicit SobolevOrder(int order) : k(order) {
    if (order < 0 || order > 3)
      throw UnsupportedOrderError("Sobolev order must lie in 0..3, got " +
                                  std::to_string(order));
  }
};

/// First difference along one axis: centered second-order at interior nodes,
/// one-sided first-order at the two boundary layers.
ScalarField axis_derivative(const ScalarField& u, const GridSpec& g, int axis);

/// Trapezoid-weighted integral of u*v over the outer box.
double inner_product(const ScalarField& u, const ScalarField& v,
                     const GridSpec& g);

/// Discrete H^k norm: sqrt of the sum over all multi-indices |alpha| <= k of
/// the integral of the corresponding mixed difference squared. Order 0 is the
/// plain L2 norm.
double sobolev_norm(const ScalarField& u, const GridSpec& g, SobolevOrder k);

/// Vector version: sqrt of the sum of squared component norms.
double sobolev_norm(const Vec3Field& u, const GridSpec& g, SobolevOrder k);

double l2_norm(const ScalarField& u, const GridSpec& g);
double l2_norm(const Vec3Field& u, const GridSpec& g);

}  // namespace wavelab
