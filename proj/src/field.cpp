#include "wavelab/field.hpp"

#include <cmath>

namespace wavelab {

ScalarField sample_on_grid(
    const GridSpec& g, const std::function<double(double, double, double)>& f) {
  ScalarField u(g.node_count());
  std::size_t p = 0;
  for (int k = 0; k < g.n[2]; ++k)
    for (int j = 0; j < g.n[1]; ++j)
      for (int i = 0; i < g.n[0]; ++i) {
        const double x = g.outer[0].lo + i * g.h;
        const double y = g.dim > 1 ? g.outer[1].lo + j * g.h : 0.0;
        const double z = g.dim > 2 ? g.outer[2].lo + k * g.h : 0.0;
        u[p++] = f(x, y, z);
      }
  return u;
}

void clamp_boundary(ScalarField& u, const GridSpec& g) {
  check_shape(u, g, "clamp_boundary");
  std::size_t p = 0;
  for (int k = 0; k < g.n[2]; ++k)
    for (int j = 0; j < g.n[1]; ++j)
      for (int i = 0; i < g.n[0]; ++i, ++p)
        if (g.on_outer_boundary(i, j, k)) u[p] = 0.0;
}

void clamp_boundary(Vec3Field& u, const GridSpec& g) {
  for (auto& c : u.comp) clamp_boundary(c, g);
}

double max_abs(const ScalarField& u) {
  double m = 0.0;
  for (double v : u) m = std::max(m, std::abs(v));
  return m;
}

double max_abs(const Vec3Field& u) {
  double m = 0.0;
  for (const auto& c : u.comp) m = std::max(m, max_abs(c));
  return m;
}

}  // namespace wavelab
