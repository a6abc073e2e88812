#include "wavelab/nonlinear.hpp"

#include <cmath>

namespace wavelab {

namespace {

constexpr double kAmplitudeSentinel = 1e12;

struct Strides {
  std::size_t s[3];
  explicit Strides(const GridSpec& g) {
    s[0] = 1;
    s[1] = static_cast<std::size_t>(g.n[0]);
    s[2] = static_cast<std::size_t>(g.n[0]) * g.n[1];
  }
};

template <typename F>
void for_each_interior(const GridSpec& g, F&& fn) {
  const int k_lo = g.dim > 2 ? 1 : 0, k_hi = g.dim > 2 ? g.n[2] - 2 : 0;
  const int j_lo = g.dim > 1 ? 1 : 0, j_hi = g.dim > 1 ? g.n[1] - 2 : 0;
  for (int k = k_lo; k <= k_hi; ++k)
    for (int j = j_lo; j <= j_hi; ++j) {
      std::size_t p = g.index(1, j, k);
      for (int i = 1; i <= g.n[0] - 2; ++i, ++p) fn(p);
    }
}

double laplacian_at(const double* u, std::size_t p, const Strides& st, int dim,
                    double inv_h2) {
  double acc = u[p + st.s[0]] + u[p - st.s[0]] - 2.0 * u[p];
  if (dim > 1) acc += u[p + st.s[1]] + u[p - st.s[1]] - 2.0 * u[p];
  if (dim > 2) acc += u[p + st.s[2]] + u[p - st.s[2]] - 2.0 * u[p];
  return acc * inv_h2;
}

// Combined per-component source at one time level: f_c + scale * |u|^2.
void combined_source(const Vec3Field& state, const VecForcing& f, int comp,
                     int step, double scale, const GridSpec& g,
                     ScalarField& fbuf, ScalarField& out) {
  f.eval(comp, step, g, fbuf);
  const std::size_t nodes = g.node_count();
  out.resize(nodes);
  const double* u1 = state.comp[0].data();
  const double* u2 = state.comp[1].data();
  const double* u3 = state.comp[2].data();
  for (std::size_t p = 0; p < nodes; ++p)
    out[p] = fbuf[p] + scale * (u1[p] * u1[p] + u2[p] * u2[p] + u3[p] * u3[p]);
}

}  // namespace

WaveField solve_coupled(const NonlinearProblem& prob) {
  const GridSpec& g = prob.grid;
  check_shape(prob.source.b0, g, "solve_coupled b0");
  check_shape(prob.source.b1, g, "solve_coupled b1");
  check_cfl(prob.sys.max_value(), g);

  const Strides st(g);
  const double inv_h2 = 1.0 / (g.h * g.h);
  const double dt = g.dt;
  const double dt2 = dt * dt;
  const double scale = prob.coupling_scale;

  WaveField u;
  u.grid = g;
  u.snapshots.reserve(g.n_steps + 1);
  u.snapshots.push_back(prob.source.b0);
  clamp_boundary(u.snapshots[0], g);

  ScalarField fbuf, src;
  if (g.n_steps >= 1) {
    Vec3Field next;
    next.resize(g.node_count());
    double amp = 0.0;
    for (int c = 0; c < 3; ++c) {
      combined_source(u.snapshots[0], prob.source.f, c, 0, scale, g, fbuf, src);
      const double* v0 = u.snapshots[0].comp[c].data();
      const double* b1 = prob.source.b1.comp[c].data();
      const double* c2 = prob.sys.c[c].values.data();
      ScalarField& out = next.comp[c];
      for_each_interior(g, [&](std::size_t p) {
        const double lap = laplacian_at(v0, p, st, g.dim, inv_h2);
        out[p] = v0[p] + dt * b1[p] + 0.5 * dt2 * (c2[p] * lap + src[p]);
        amp = std::max(amp, std::abs(out[p]));
      });
    }
    if (!(amp < kAmplitudeSentinel))
      throw BlowUpError("coupled solve left the finite range at step 1", 1,
                        amp);
    u.snapshots.push_back(std::move(next));
  }

  for (int n = 1; n < g.n_steps; ++n) {
    Vec3Field next;
    next.resize(g.node_count());
    double amp = 0.0;
    for (int c = 0; c < 3; ++c) {
      combined_source(u.snapshots[n], prob.source.f, c, n, scale, g, fbuf, src);
      const double* cur = u.snapshots[n].comp[c].data();
      const double* prev = u.snapshots[n - 1].comp[c].data();
      const double* c2 = prob.sys.c[c].values.data();
      ScalarField& out = next.comp[c];
      for_each_interior(g, [&](std::size_t p) {
        const double lap = laplacian_at(cur, p, st, g.dim, inv_h2);
        out[p] = 2.0 * cur[p] - prev[p] + dt2 * (c2[p] * lap + src[p]);
        amp = std::max(amp, std::abs(out[p]));
      });
    }
    if (!(amp < kAmplitudeSentinel))
      throw BlowUpError("coupled solve left the finite range at step " +
                            std::to_string(n + 1),
                        n + 1, amp);
    u.snapshots.push_back(std::move(next));
  }
  return u;
}

PicardSolution duhamel_picard(const NonlinearProblem& prob, double tol,
                              int max_iterations) {
  const GridSpec& g = prob.grid;
  if (max_iterations < 1) throw Error("duhamel_picard needs max_iterations >= 1");

  PicardSolution sol;
  sol.u = solve_system_linear(prob.sys, prob.source, g);

  ScalarField fbuf, src;
  for (int it = 1; it <= max_iterations; ++it) {
    // Forcing for the next iterate: f + scale * |W|^2 sampled per step.
    std::vector<Vec3Field> samples(g.n_steps + 1);
    for (int n = 0; n <= g.n_steps; ++n) {
      samples[n].resize(g.node_count());
      for (int c = 0; c < 3; ++c) {
        combined_source(sol.u.snapshots[n], prob.source.f, c, n,
                        prob.coupling_scale, g, fbuf, src);
        samples[n].comp[c] = src;
      }
    }
    SourceData forced = prob.source;
    forced.f = VecForcing::from_samples(std::move(samples));
    WaveField next = solve_system_linear(prob.sys, forced, g);

    const double resid = s_norm_diff(next, sol.u);
    sol.report.residuals.push_back(resid);
    sol.report.iterations = it;
    sol.u = std::move(next);
    if (resid < tol) {
      sol.report.converged = true;
      break;
    }
  }

  const auto& r = sol.report.residuals;
  for (std::size_t i = 0; i + 1 < r.size(); ++i)
    if (r[i] > 0.0)
      sol.report.contraction_ratio =
          std::max(sol.report.contraction_ratio, r[i + 1] / r[i]);
  return sol;
}

}  // namespace wavelab
