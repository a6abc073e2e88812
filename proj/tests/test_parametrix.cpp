#include <cmath>
#include <memory>
#include <vector>

#include "doctest.h"
#include "wavelab/convergence.hpp"
#include "wavelab/grid.hpp"
#include "wavelab/parametrix.hpp"
#include "wavelab/profiles.hpp"

using namespace wavelab;

namespace {

GridSpec line(double h, double T) {
  return make_grid(1, {{0.0, 1.0}}, {{0.25, 0.75}}, h, T, 0.9);
}

SpeedSystem unit_system(const GridSpec& g) {
  SpeedSystem sys;
  for (int i = 0; i < 3; ++i) sys.c[i] = make_constant_speed(g, 1.0);
  return sys;
}

}  // namespace

TEST_SUITE("parametrix") {

TEST_CASE("expansion is the stated combination of its terms") {
  const GridSpec g = line(1.0 / 32, 0.3);
  const SpeedSystem sys = unit_system(g);
  const SourceData unit = make_standing_mode_source(g, 1.0, {1, 1, 1});
  const double eps = 0.05;
  const ParametrixBundle b = build_parametrix(sys, unit, eps, g);

  CHECK(b.epsilon == eps);
  REQUIRE(b.w.snapshots.size() == b.w1.snapshots.size());
  for (std::size_t n = 0; n < b.w.snapshots.size(); ++n)
    for (int c = 0; c < 3; ++c)
      for (std::size_t p = 0; p < b.w.snapshots[n].comp[c].size(); ++p)
        CHECK(b.w.snapshots[n].comp[c][p] ==
              eps * b.w1.snapshots[n].comp[c][p] +
                  eps * eps * b.w2.snapshots[n].comp[c][p]);

  // w2 starts from rest and is seeded by |w1(0)|^2.
  for (int c = 0; c < 3; ++c)
    for (double v : b.w2.snapshots[0].comp[c]) CHECK(v == 0.0);
  const double half_dt2 = 0.5 * g.dt * g.dt;
  std::size_t mid = g.index(g.n[0] / 2);
  double q0 = 0.0;
  for (int c = 0; c < 3; ++c) {
    const double v = b.w1.snapshots[0].comp[c][mid];
    q0 += v * v;
  }
  for (int c = 0; c < 3; ++c)
    CHECK(b.w2.snapshots[1].comp[c][mid] ==
          doctest::Approx(half_dt2 * q0).epsilon(1e-13));
}

TEST_CASE("defect of the expansion is exactly the cross terms") {
  // w = eps w1 + eps^2 w2 satisfies the coupled stencil up to
  // -(2 eps^3 w1.w2 + eps^4 |w2|^2): verify the identity nodewise.
  const GridSpec g = line(1.0 / 32, 0.4);
  const SpeedSystem sys = unit_system(g);
  const SourceData unit = make_standing_mode_source(g, 1.0, {1, 1, 1});
  const double eps = 0.1;
  const ParametrixBundle b = build_parametrix(sys, unit, eps, g);

  // Coupling |w|^2 sampled from the expansion itself, fed back as forcing.
  auto coupling = std::make_shared<std::vector<ScalarField>>(g.n_steps + 1);
  for (int n = 0; n <= g.n_steps; ++n) {
    (*coupling)[n].assign(g.node_count(), 0.0);
    for (int c = 0; c < 3; ++c)
      for (std::size_t p = 0; p < (*coupling)[n].size(); ++p) {
        const double v = b.w.snapshots[n].comp[c][p];
        (*coupling)[n][p] += v * v;
      }
  }

  const double e3 = eps * eps * eps;
  const double e4 = e3 * eps;
  double worst = 0.0;
  double defect_peak = 0.0;
  for (int c = 0; c < 3; ++c) {
    ScalarForcing f;
    f.sampled = coupling;
    const auto r = interior_residual(b.w.component(c), sys.c[c], f);
    for (int n = 1; n < g.n_steps; ++n)
      for (std::size_t p = 0; p < r[n].size(); ++p) {
        double dot12 = 0.0, sq2 = 0.0;
        for (int d = 0; d < 3; ++d) {
          const double a1 = b.w1.snapshots[n].comp[d][p];
          const double a2 = b.w2.snapshots[n].comp[d][p];
          dot12 += a1 * a2;
          sq2 += a2 * a2;
        }
        const double defect = -(2.0 * e3 * dot12 + e4 * sq2);
        worst = std::max(worst, std::abs(r[n][p] - defect));
        defect_peak = std::max(defect_peak, std::abs(defect));
      }
  }
  CHECK(defect_peak > 1e-6);  // the identity is not vacuous at this scale
  CHECK(worst <= 1e-9);
}

TEST_CASE("third and second order error scalings") {
  const GridSpec g = line(1.0 / 64, 0.5);
  const SpeedSystem sys = unit_system(g);
  const SourceData unit = make_standing_mode_source(g, 1.0, {1, 1, 1});

  const std::vector<double> eps{0.04, 0.02, 0.01};
  std::vector<double> full, first;
  for (double e : eps) {
    const ParametrixBundle b = build_parametrix(sys, unit, e, g);
    const ParametrixErrorRecord rec = parametrix_error(b, sys, unit, g);
    CHECK(rec.epsilon == e);
    CHECK(rec.error > 0.0);
    CHECK(rec.error < rec.first_order);
    CHECK(rec.bound == 0.0);
    CHECK(rec.ratio == 0.0);
    full.push_back(rec.error);
    first.push_back(rec.first_order);
  }
  const double slope_full = convergence_order(eps, full).order;
  const double slope_first = convergence_order(eps, first).order;
  CHECK(slope_full > 2.6);
  CHECK(slope_full < 3.4);
  CHECK(slope_first > 1.7);
  CHECK(slope_first < 2.3);
}

TEST_CASE("envelope turns into an eps^3 bound") {
  const GridSpec g = line(1.0 / 32, 0.3);
  const SpeedSystem sys = unit_system(g);
  const SourceData unit = make_standing_mode_source(g, 1.0, {1, 1, 1});
  const double eps = 0.02;
  const ParametrixBundle b = build_parametrix(sys, unit, eps, g);
  const auto envelope = [](double T) { return 40.0 * std::exp(T); };
  const ParametrixErrorRecord rec = parametrix_error(b, sys, unit, g, envelope);
  CHECK(rec.bound == doctest::Approx(eps * eps * eps * envelope(g.T))
                         .epsilon(1e-14));
  CHECK(rec.ratio == doctest::Approx(rec.error / rec.bound).epsilon(1e-14));
}

TEST_CASE("nonpositive scale is rejected") {
  const GridSpec g = line(1.0 / 32, 0.2);
  const SpeedSystem sys = unit_system(g);
  const SourceData unit = make_standing_mode_source(g, 1.0, {1, 1, 1});
  CHECK_THROWS_AS(build_parametrix(sys, unit, 0.0, g), Error);
  CHECK_THROWS_AS(build_parametrix(sys, unit, -0.1, g), Error);
}

}  // TEST_SUITE
