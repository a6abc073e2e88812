#include <cmath>
#include <numbers>

#include "doctest.h"
#include "wavelab/grid.hpp"
#include "wavelab/nonlinear.hpp"
#include "wavelab/norms.hpp"
#include "wavelab/profiles.hpp"

using namespace wavelab;

namespace {

constexpr double kPi = std::numbers::pi;

GridSpec line(double h, double T, double factor = 0.9) {
  return make_grid(1, {{0.0, 1.0}}, {{0.25, 0.75}}, h, T, factor);
}

SpeedSystem unit_system(const GridSpec& g) {
  SpeedSystem sys;
  for (int i = 0; i < 3; ++i) sys.c[i] = make_constant_speed(g, 1.0);
  return sys;
}

NonlinearProblem small_problem(double amplitude) {
  NonlinearProblem prob;
  prob.grid = line(1.0 / 64, 0.5);
  prob.sys = unit_system(prob.grid);
  prob.source = scale_source(
      make_standing_mode_source(prob.grid, 1.0, {1, 1, 1}), amplitude);
  return prob;
}

}  // namespace

TEST_SUITE("nonlinear") {

TEST_CASE("zero coupling reproduces the linear system") {
  NonlinearProblem prob = small_problem(0.3);
  prob.coupling_scale = 0.0;
  const WaveField nl = solve_coupled(prob);
  const WaveField lin = solve_system_linear(prob.sys, prob.source, prob.grid);
  REQUIRE(nl.snapshots.size() == lin.snapshots.size());
  for (std::size_t n = 0; n < nl.snapshots.size(); ++n)
    for (int c = 0; c < 3; ++c)
      for (std::size_t p = 0; p < nl.snapshots[n].comp[c].size(); ++p)
        CHECK(nl.snapshots[n].comp[c][p] == lin.snapshots[n].comp[c][p]);
}

TEST_CASE("identical components stay identical") {
  const NonlinearProblem prob = small_problem(0.2);
  const WaveField u = solve_coupled(prob);
  for (const auto& snap : u.snapshots)
    for (std::size_t p = 0; p < snap.comp[0].size(); ++p) {
      CHECK(snap.comp[0][p] == snap.comp[1][p]);
      CHECK(snap.comp[0][p] == snap.comp[2][p]);
    }
}

TEST_CASE("manufactured coupled solution is reproduced exactly") {
  // Target u^n = a_n v in every component with v a discrete sine eigenmode.
  // The interior stencil then needs per-component forcing
  //   f^n = [(a_{n+1} - 2 a_n + a_{n-1})/dt^2 + c^2 lambda_h a_n] v
  //         - 3 a_n^2 v^2,
  // and the Taylor start is matched by f^0 = c^2 lambda_h a_0 v - 3 a_0^2 v^2
  // with b1 = (a_1 - a_0)/dt v.
  const GridSpec g = line(1.0 / 32, 0.4);
  const SpeedSystem sys = unit_system(g);
  const ScalarField v = sample_on_grid(
      g, [](double x, double, double) { return std::sin(2 * kPi * x); });
  const double s = std::sin(kPi * g.h);
  const double lambda_h = 4.0 * s * s / (g.h * g.h);

  auto a = [](double t) { return 0.1 / (1.0 + t); };
  std::vector<double> an(g.n_steps + 2);
  for (int n = 0; n <= g.n_steps + 1; ++n) an[n] = a(g.time(n));

  std::vector<Vec3Field> samples(g.n_steps + 1);
  for (int n = 0; n <= g.n_steps; ++n) {
    samples[n].resize(g.node_count());
    for (int c = 0; c < 3; ++c)
      for (std::size_t p = 0; p < v.size(); ++p) {
        double lead;
        if (n == 0) {
          lead = lambda_h * an[0] * v[p];
        } else {
          const double dd =
              (an[n + 1] - 2.0 * an[n] + an[n - 1]) / (g.dt * g.dt);
          lead = (dd + lambda_h * an[n]) * v[p];
        }
        samples[n].comp[c][p] = lead - 3.0 * an[n] * an[n] * v[p] * v[p];
      }
  }

  NonlinearProblem prob;
  prob.grid = g;
  prob.sys = sys;
  prob.source.b0.resize(g.node_count());
  prob.source.b1.resize(g.node_count());
  for (int c = 0; c < 3; ++c)
    for (std::size_t p = 0; p < v.size(); ++p) {
      prob.source.b0.comp[c][p] = an[0] * v[p];
      prob.source.b1.comp[c][p] = (an[1] - an[0]) / g.dt * v[p];
    }
  prob.source.f = VecForcing::from_samples(std::move(samples));

  const WaveField u = solve_coupled(prob);
  for (int n = 0; n <= g.n_steps; ++n)
    for (int c = 0; c < 3; ++c)
      for (std::size_t p = 0; p < v.size(); ++p)
        CHECK(u.snapshots[n].comp[c][p] ==
              doctest::Approx(an[n] * v[p]).epsilon(1e-10).scale(1e-3));
}

TEST_CASE("coupling scale two equals doubled data halved") {
  // Floating point scales exactly by powers of two, so the identity
  // u(scale=2, data) = u(scale=1, 2*data)/2 holds bitwise.
  NonlinearProblem a = small_problem(0.125);
  a.coupling_scale = 2.0;
  NonlinearProblem b = small_problem(0.125);
  b.source = scale_source(b.source, 2.0);
  b.coupling_scale = 1.0;

  const WaveField ua = solve_coupled(a);
  const WaveField ub = solve_coupled(b);
  for (std::size_t n = 0; n < ua.snapshots.size(); ++n)
    for (int c = 0; c < 3; ++c)
      for (std::size_t p = 0; p < ua.snapshots[n].comp[c].size(); ++p)
        CHECK(ua.snapshots[n].comp[c][p] ==
              0.5 * ub.snapshots[n].comp[c][p]);
}

TEST_CASE("picard iteration converges to the direct solve") {
  const NonlinearProblem prob = small_problem(0.01);
  const double tol = 1e-12;
  const PicardSolution sol = duhamel_picard(prob, tol, 50);

  CHECK(sol.report.converged);
  CHECK(sol.report.iterations >= 2);
  CHECK(sol.report.iterations <= 20);
  CHECK(sol.report.residuals.size() ==
        static_cast<std::size_t>(sol.report.iterations));
  CHECK(sol.report.residuals.back() <= tol);
  CHECK(sol.report.contraction_ratio < 0.1);
  for (std::size_t k = 1; k < sol.report.residuals.size(); ++k)
    CHECK(sol.report.residuals[k] < sol.report.residuals[k - 1]);

  const WaveField direct = solve_coupled(prob);
  CHECK(s_norm_diff(sol.u, direct) <= 1e-9);
  CHECK(c0_l2_diff(sol.u, direct) <= 1e-10);
}

TEST_CASE("picard reports non-convergence when starved of iterations") {
  const NonlinearProblem prob = small_problem(0.01);
  const PicardSolution sol = duhamel_picard(prob, 1e-300, 2);
  CHECK_FALSE(sol.report.converged);
  CHECK(sol.report.iterations == 2);
}

TEST_CASE("large data blows up with a diagnosed step") {
  NonlinearProblem prob = small_problem(1e4);
  prob.grid = line(1.0 / 32, 1.0);
  prob.sys = unit_system(prob.grid);
  prob.source = scale_source(
      make_standing_mode_source(prob.grid, 1.0, {1, 1, 1}), 1e4);
  bool thrown = false;
  try {
    solve_coupled(prob);
  } catch (const BlowUpError& e) {
    thrown = true;
    CHECK(e.step >= 1);
    CHECK(e.amplitude >= 1e12);
  }
  CHECK(thrown);
}

TEST_CASE("coupled solve enforces the stability limit") {
  NonlinearProblem prob;
  prob.grid = line(1.0 / 32, 0.5, 1.0);
  prob.sys.c[0] = make_constant_speed(prob.grid, 1.21);
  prob.sys.c[1] = make_constant_speed(prob.grid, 1.0);
  prob.sys.c[2] = make_constant_speed(prob.grid, 1.0);
  prob.source = make_standing_mode_source(prob.grid, 0.1, {1, 1, 1});
  CHECK_THROWS_AS(solve_coupled(prob), StabilityError);
}

}  // TEST_SUITE
