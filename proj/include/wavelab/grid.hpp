#pragma once

#include <array>
#include <cstddef>
#include <vector>

namespace wavelab {

inline constexpr int kMaxDim = 3;

/// Closed interval [lo, hi] along one axis.
struct AxisInterval {
  double lo = 0.0;
  double hi = 0.0;
  double length() const { return hi - lo; }
};

/// Uniform tensor-product grid on the extended computational box, with an
/// axis-aligned measurement box strictly inside it. Node (i,j,k) sits at
/// outer.lo + index*h on each axis; the measurement box faces are snapped to
/// grid nodes by make_grid. Immutable after construction.
struct GridSpec {
  int dim = 1;
  std::array<AxisInterval, kMaxDim> outer{};
  std::array<AxisInterval, kMaxDim> inner{};
  double h = 0.0;
  double dt = 0.0;
  double T = 0.0;
  int n_steps = 0;
  double stability_factor = 0.9;
  std::array<int, kMaxDim> n{1, 1, 1};  // nodes per axis (1 for unused axes)
  std::array<int, kMaxDim> inner_lo{0, 0, 0};
  std::array<int, kMaxDim> inner_hi{0, 0, 0};

  std::size_t node_count() const {
    return static_cast<std::size_t>(n[0]) * n[1] * n[2];
  }
  /// Flat index, axis 0 fastest.
  std::size_t index(int i, int j = 0, int k = 0) const {
    return static_cast<std::size_t>(i) +
           static_cast<std::size_t>(n[0]) *
               (static_cast<std::size_t>(j) +
                static_cast<std::size_t>(n[1]) * static_cast<std::size_t>(k));
  }
  std::array<int, 3> unpack(std::size_t flat) const {
    const int i = static_cast<int>(flat % n[0]);
    flat /= n[0];
    const int j = static_cast<int>(flat % n[1]);
    flat /= n[1];
    return {i, j, static_cast<int>(flat)};
  }
  std::array<double, 3> coords(std::size_t flat) const {
    const auto idx = unpack(flat);
    std::array<double, 3> x{0.0, 0.0, 0.0};
    for (int a = 0; a < dim; ++a) x[a] = outer[a].lo + idx[a] * h;
    return x;
  }
  std::array<double, 3> center() const {
    std::array<double, 3> c{0.0, 0.0, 0.0};
    for (int a = 0; a < dim; ++a) c[a] = 0.5 * (outer[a].lo + outer[a].hi);
    return c;
  }
  bool on_outer_boundary(int i, int j = 0, int k = 0) const {
    const std::array<int, 3> idx{i, j, k};
    for (int a = 0; a < dim; ++a)
      if (idx[a] == 0 || idx[a] == n[a] - 1) return true;
    return false;
  }
  double time(int step) const { return dt * step; }
  /// Euclidean diameter of the measurement box.
  double inner_diameter() const;
};

/// Build a grid. Node counts come from rounding length/h (each outer extent
/// must be an integer number of cells to relative precision 1e-6); the time
/// step is T/n_steps with n_steps = ceil(T / (stability_factor*h/sqrt(dim))),
/// sized for unit wave speed. Throws GridError on bad geometry.
GridSpec make_grid(int dim, const std::vector<AxisInterval>& outer_extent,
                   const std::vector<AxisInterval>& inner_extent, double h,
                   double T, double stability_factor = 0.9);

}  // namespace wavelab
