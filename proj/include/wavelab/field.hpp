#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <vector>

#include "wavelab/errors.hpp"
#include "wavelab/grid.hpp"

namespace wavelab {

/// Nodal values on a GridSpec, flat storage, axis 0 fastest.
using ScalarField = std::vector<double>;

/// One time level of a scalar field together with its step index.
struct ScalarFieldSnapshot {
  ScalarField values;
  int time_index = 0;
};

/// One time level of the three-component state.
struct Vec3Field {
  std::array<ScalarField, 3> comp;

  void resize(std::size_t nodes, double fill = 0.0) {
    for (auto& c : comp) c.assign(nodes, fill);
  }
  std::size_t nodes() const { return comp[0].size(); }
};

inline void check_shape(const ScalarField& u, const GridSpec& g,
                        const char* what) {
  if (u.size() != g.node_count())
    throw FieldShapeError(std::string(what) + ": field has " +
                          std::to_string(u.size()) + " values, grid has " +
                          std::to_string(g.node_count()) + " nodes");
}

inline void check_shape(const Vec3Field& u, const GridSpec& g,
                        const char* what) {
  for (const auto& c : u.comp) check_shape(c, g, what);
}

/// Evaluate f(x) at every node. f receives padded coordinates (unused axes 0).
ScalarField sample_on_grid(const GridSpec& g,
                           const std::function<double(double, double, double)>& f);

/// Zero out every node on the outer boundary.
void clamp_boundary(ScalarField& u, const GridSpec& g);
void clamp_boundary(Vec3Field& u, const GridSpec& g);

double max_abs(const ScalarField& u);
double max_abs(const Vec3Field& u);

}  // namespace wavelab
