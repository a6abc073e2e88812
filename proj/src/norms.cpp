#include "wavelab/norms.hpp"

#include <cmath>

namespace wavelab {

ScalarField axis_derivative(const ScalarField& u, const GridSpec& g,
                            int axis) {
  check_shape(u, g, "axis_derivative");
  if (axis < 0 || axis >= g.dim)
    throw GridError("axis " + std::to_string(axis) + " out of range for dim " +
                    std::to_string(g.dim));
  ScalarField d(u.size());
  const double inv_h = 1.0 / g.h;
  const double inv_2h = 0.5 * inv_h;
  std::size_t stride = 1;
  for (int a = 0; a < axis; ++a) stride *= g.n[a];
  const int na = g.n[axis];

  std::size_t p = 0;
  std::array<int, 3> idx{};
  for (idx[2] = 0; idx[2] < g.n[2]; ++idx[2])
    for (idx[1] = 0; idx[1] < g.n[1]; ++idx[1])
      for (idx[0] = 0; idx[0] < g.n[0]; ++idx[0], ++p) {
        const int ia = idx[axis];
        if (ia == 0)
          d[p] = (u[p + stride] - u[p]) * inv_h;
        else if (ia == na - 1)
          d[p] = (u[p] - u[p - stride]) * inv_h;
        else
          d[p] = (u[p + stride] - u[p - stride]) * inv_2h;
      }
  return d;
}

namespace {

double axis_weight(int i, int n) { return (i == 0 || i == n - 1) ? 0.5 : 1.0; }

double weighted_square_sum(const ScalarField& u, const GridSpec& g) {
  double s = 0.0;
  std::size_t p = 0;
  for (int k = 0; k < g.n[2]; ++k) {
    const double wk = g.dim > 2 ? axis_weight(k, g.n[2]) : 1.0;
    for (int j = 0; j < g.n[1]; ++j) {
      const double wjk = wk * (g.dim > 1 ? axis_weight(j, g.n[1]) : 1.0);
      for (int i = 0; i < g.n[0]; ++i, ++p)
        s += wjk * axis_weight(i, g.n[0]) * u[p] * u[p];
    }
  }
  double cell = 1.0;
  for (int a = 0; a < g.dim; ++a) cell *= g.h;
  return s * cell;
}

// Accumulate the squared seminorms of all mixed differences reachable from
// `u` with `budget` more derivatives, taking axes in nondecreasing order so
// each multi-index is visited exactly once.
double accumulate_orders(const ScalarField& u, const GridSpec& g, int budget,
                         int min_axis) {
  double s = weighted_square_sum(u, g);
  if (budget == 0) return s;
  for (int a = min_axis; a < g.dim; ++a)
    s += accumulate_orders(axis_derivative(u, g, a), g, budget - 1, a);
  return s;
}

}  // namespace

double inner_product(const ScalarField& u, const ScalarField& v,
                     const GridSpec& g) {
  check_shape(u, g, "inner_product");
  check_shape(v, g, "inner_product");
  double s = 0.0;
  std::size_t p = 0;
  for (int k = 0; k < g.n[2]; ++k) {
    const double wk = g.dim > 2 ? axis_weight(k, g.n[2]) : 1.0;
    for (int j = 0; j < g.n[1]; ++j) {
      const double wjk = wk * (g.dim > 1 ? axis_weight(j, g.n[1]) : 1.0);
      for (int i = 0; i < g.n[0]; ++i, ++p)
        s += wjk * axis_weight(i, g.n[0]) * u[p] * v[p];
    }
  }
  double cell = 1.0;
  for (int a = 0; a < g.dim; ++a) cell *= g.h;
  return s * cell;
}

double sobolev_norm(const ScalarField& u, const GridSpec& g, SobolevOrder k) {
  check_shape(u, g, "sobolev_norm");
  return std::sqrt(accumulate_orders(u, g, k.k, 0));
}

double sobolev_norm(const Vec3Field& u, const GridSpec& g, SobolevOrder k) {
  double s = 0.0;
  for (const auto& c : u.comp) {
    const double n = sobolev_norm(c, g, k);
    s += n * n;
  }
  return std::sqrt(s);
}

double l2_norm(const ScalarField& u, const GridSpec& g) {
  return sobolev_norm(u, g, SobolevOrder(0));
}

double l2_norm(const Vec3Field& u, const GridSpec& g) {
  return sobolev_norm(u, g, SobolevOrder(0));
}

}  // namespace wavelab
