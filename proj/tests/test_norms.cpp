#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "wavelab/field.hpp"
#include "wavelab/grid.hpp"
#include "wavelab/norms.hpp"

using namespace wavelab;

namespace {

GridSpec unit_1d(double h) {
  return make_grid(1, {{0.0, 1.0}}, {{0.25, 0.75}}, h, 1.0, 0.9);
}

GridSpec unit_2d(double h) {
  return make_grid(2, {{0.0, 1.0}, {0.0, 1.0}}, {{0.25, 0.75}, {0.25, 0.75}},
                   h, 1.0, 0.9);
}

}  // namespace

TEST_SUITE("norms") {

TEST_CASE("constant field on the unit interval has unit L2 norm") {
  const GridSpec g = unit_1d(1.0 / 256);
  const ScalarField u(g.node_count(), 1.0);
  CHECK(sobolev_norm(u, g, SobolevOrder(0)) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("constant field on the unit square has unit L2 norm") {
  const GridSpec g = unit_2d(1.0 / 64);
  const ScalarField u(g.node_count(), 1.0);
  CHECK(sobolev_norm(u, g, SobolevOrder(0)) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("sine mode matches the closed-form H1 norm") {
  // ||sin(pi x)||_{H1}^2 = 1/2 + pi^2/2 on [0, 1].
  const GridSpec g = unit_1d(1.0 / 256);
  const ScalarField u = sample_on_grid(
      g, [](double x, double, double) { return std::sin(std::numbers::pi * x); });
  const double expect = std::sqrt(0.5 + std::numbers::pi * std::numbers::pi / 2.0);
  CHECK(sobolev_norm(u, g, SobolevOrder(1)) ==
        doctest::Approx(expect).epsilon(1e-2 / expect));
}

TEST_CASE("quadrature oracle: order 2 norm of a sine in 1d") {
  // Every derivative of sin(pi x) is a sine or cosine scaled by pi^k, so
  // ||u||_{H2}^2 = 1/2 (1 + pi^2 + pi^4).
  const GridSpec g = unit_1d(1.0 / 256);
  const ScalarField u = sample_on_grid(
      g, [](double x, double, double) { return std::sin(std::numbers::pi * x); });
  const double pi2 = std::numbers::pi * std::numbers::pi;
  const double expect = std::sqrt(0.5 * (1.0 + pi2 + pi2 * pi2));
  CHECK(sobolev_norm(u, g, SobolevOrder(2)) ==
        doctest::Approx(expect).epsilon(2e-3));
}

TEST_CASE("two dimensional mixed derivatives enter the order 2 norm") {
  // u = sin(pi x) sin(pi y): |alpha| <= 2 collects 1, 2 pi^2, pi^4 (xx, yy)
  // and pi^4 (xy), each times ||u||^2 = 1/4 in its own mode shape.
  const GridSpec g = unit_2d(1.0 / 64);
  const ScalarField u = sample_on_grid(g, [](double x, double y, double) {
    return std::sin(std::numbers::pi * x) * std::sin(std::numbers::pi * y);
  });
  const double pi2 = std::numbers::pi * std::numbers::pi;
  const double expect = std::sqrt(0.25 * (1.0 + 2.0 * pi2 + 3.0 * pi2 * pi2));
  CHECK(sobolev_norm(u, g, SobolevOrder(2)) ==
        doctest::Approx(expect).epsilon(5e-3));
}

TEST_CASE("orders are monotone and homogeneous") {
  const GridSpec g = unit_1d(1.0 / 128);
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  ScalarField u(g.node_count());
  for (auto& v : u) v = dist(rng);
  clamp_boundary(u, g);

  double prev = 0.0;
  for (int k = 0; k <= 3; ++k) {
    const double n = sobolev_norm(u, g, SobolevOrder(k));
    CHECK(n >= prev);
    prev = n;
  }
  const double n1 = sobolev_norm(u, g, SobolevOrder(1));
  ScalarField su = u;
  for (auto& v : su) v *= -2.5;
  CHECK(sobolev_norm(su, g, SobolevOrder(1)) ==
        doctest::Approx(0.0 + 2.5 * n1).epsilon(1e-13));
}

TEST_CASE("triangle inequality holds for random fields") {
  const GridSpec g = unit_1d(1.0 / 64);
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    ScalarField u(g.node_count()), v(g.node_count()), w(g.node_count());
    for (std::size_t p = 0; p < u.size(); ++p) {
      u[p] = dist(rng);
      v[p] = dist(rng);
      w[p] = u[p] + v[p];
    }
    for (int k = 0; k <= 3; ++k) {
      const SobolevOrder ord(k);
      CHECK(sobolev_norm(w, g, ord) <=
            sobolev_norm(u, g, ord) + sobolev_norm(v, g, ord) + 1e-12);
    }
  }
}

TEST_CASE("axis derivative reproduces polynomial slopes exactly") {
  // Centered and one-sided first differences are exact on affine functions.
  const GridSpec g = unit_2d(1.0 / 32);
  const ScalarField u =
      sample_on_grid(g, [](double x, double y, double) { return 3.0 * x - 2.0 * y + 1.0; });
  const ScalarField dx = axis_derivative(u, g, 0);
  const ScalarField dy = axis_derivative(u, g, 1);
  for (std::size_t p = 0; p < u.size(); ++p) {
    CHECK(dx[p] == doctest::Approx(3.0).epsilon(1e-11));
    CHECK(dy[p] == doctest::Approx(-2.0).epsilon(1e-11));
  }
}

TEST_CASE("vector norm adds components in quadrature") {
  const GridSpec g = unit_1d(1.0 / 64);
  Vec3Field u;
  u.resize(g.node_count());
  const ScalarField s = sample_on_grid(
      g, [](double x, double, double) { return std::sin(std::numbers::pi * x); });
  u.comp[0] = s;
  u.comp[1] = s;
  u.comp[2] = s;
  const double single = sobolev_norm(s, g, SobolevOrder(1));
  CHECK(sobolev_norm(u, g, SobolevOrder(1)) ==
        doctest::Approx(std::sqrt(3.0) * single).epsilon(1e-13));
}

TEST_CASE("order outside 0..3 is rejected") {
  CHECK_THROWS_AS(SobolevOrder(-1), UnsupportedOrderError);
  CHECK_THROWS_AS(SobolevOrder(4), UnsupportedOrderError);
}

TEST_CASE("shape mismatch is rejected") {
  const GridSpec g = unit_1d(1.0 / 64);
  const ScalarField u(17, 1.0);
  CHECK_THROWS_AS(sobolev_norm(u, g, SobolevOrder(0)), FieldShapeError);
}

}  // TEST_SUITE
