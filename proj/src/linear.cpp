#include "wavelab/linear.hpp"

#include <algorithm>
#include <cmath>

#include "wavelab/norms.hpp"

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

// Visit every interior node (all solve updates leave the boundary at zero).
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

void check_finite(double amplitude, int step) {
  if (!(amplitude < kAmplitudeSentinel))
    throw BlowUpError("solution amplitude " + std::to_string(amplitude) +
                          " exceeded the finite-range sentinel at step " +
                          std::to_string(step),
                      step, amplitude);
}

}  // namespace

void check_cfl(double max_c2, const GridSpec& g) {
  const double cmax = std::sqrt(std::max(max_c2, 0.0));
  const double limit =
      g.h / (std::sqrt(static_cast<double>(g.dim)) * std::max(cmax, 1e-300));
  if (g.dt > limit * (1.0 + 1e-9))
    throw StabilityError("time step " + std::to_string(g.dt) +
                             " exceeds the CFL limit " + std::to_string(limit),
                         g.dt, limit);
}

void ScalarForcing::eval(int step, const GridSpec& g, ScalarField& out) const {
  out.assign(g.node_count(), 0.0);
  if (sampled) {
    if (step < 0 || static_cast<std::size_t>(step) >= sampled->size())
      throw Error("sampled forcing has no step " + std::to_string(step));
    out = (*sampled)[step];
    check_shape(out, g, "sampled forcing");
    return;
  }
  if (!fn) return;
  const double t = g.time(step);
  std::size_t p = 0;
  for (int k = 0; k < g.n[2]; ++k)
    for (int j = 0; j < g.n[1]; ++j)
      for (int i = 0; i < g.n[0]; ++i) {
        const double x = g.outer[0].lo + i * g.h;
        const double y = g.dim > 1 ? g.outer[1].lo + j * g.h : 0.0;
        const double z = g.dim > 2 ? g.outer[2].lo + k * g.h : 0.0;
        out[p++] = fn(t, x, y, z);
      }
}

ScalarWaveField WaveField::component(int c) const {
  ScalarWaveField out;
  out.grid = grid;
  out.snapshots.reserve(snapshots.size());
  for (const auto& s : snapshots) out.snapshots.push_back(s.comp[c]);
  return out;
}

ScalarWaveField solve_scalar_linear(const SpeedField& c, const ScalarField& b0,
                                    const ScalarField& b1,
                                    const ScalarForcing& f, const GridSpec& g) {
  check_shape(c.values, g, "solve_scalar_linear speed");
  check_shape(b0, g, "solve_scalar_linear b0");
  check_shape(b1, g, "solve_scalar_linear b1");
  check_cfl(c.max_value(), g);

  const Strides st(g);
  const double inv_h2 = 1.0 / (g.h * g.h);
  const double dt = g.dt;
  const double dt2 = dt * dt;
  const bool forced = !f.is_zero();

  ScalarWaveField u;
  u.grid = g;
  u.snapshots.reserve(g.n_steps + 1);
  u.snapshots.push_back(b0);
  clamp_boundary(u.snapshots[0], g);

  ScalarField src;
  if (g.n_steps >= 1) {
    if (forced) f.eval(0, g, src);
    ScalarField next(g.node_count(), 0.0);
    const double* v0 = u.snapshots[0].data();
    double amp = 0.0;
    for_each_interior(g, [&](std::size_t p) {
      const double lap = laplacian_at(v0, p, st, g.dim, inv_h2);
      const double acc = c.values[p] * lap + (forced ? src[p] : 0.0);
      next[p] = v0[p] + dt * b1[p] + 0.5 * dt2 * acc;
      amp = std::max(amp, std::abs(next[p]));
    });
    check_finite(amp, 1);
    u.snapshots.push_back(std::move(next));
  }

  for (int n = 1; n < g.n_steps; ++n) {
    if (forced) f.eval(n, g, src);
    ScalarField next(g.node_count(), 0.0);
    const double* cur = u.snapshots[n].data();
    const double* prev = u.snapshots[n - 1].data();
    double amp = 0.0;
    for_each_interior(g, [&](std::size_t p) {
      const double lap = laplacian_at(cur, p, st, g.dim, inv_h2);
      const double acc = c.values[p] * lap + (forced ? src[p] : 0.0);
      next[p] = 2.0 * cur[p] - prev[p] + dt2 * acc;
      amp = std::max(amp, std::abs(next[p]));
    });
    check_finite(amp, n + 1);
    u.snapshots.push_back(std::move(next));
  }
  return u;
}

WaveField solve_system_linear(const SpeedSystem& sys, const SourceData& src,
                              const GridSpec& g) {
  check_shape(src.b0, g, "solve_system_linear b0");
  check_shape(src.b1, g, "solve_system_linear b1");
  check_cfl(sys.max_value(), g);

  WaveField u;
  u.grid = g;
  u.snapshots.resize(g.n_steps + 1);
  for (auto& s : u.snapshots) s.resize(g.node_count());

  for (int c = 0; c < 3; ++c) {
    ScalarForcing fc;
    if (!src.f.is_zero()) {
      if (src.f.sampled) {
        std::vector<ScalarField> comp_samples;
        comp_samples.reserve(src.f.sampled->size());
        for (const auto& s : *src.f.sampled) comp_samples.push_back(s.comp[c]);
        fc.sampled = std::make_shared<const std::vector<ScalarField>>(
            std::move(comp_samples));
      } else if (src.f.fn[c]) {
        fc.fn = src.f.fn[c];
      }
    }
    ScalarWaveField uc =
        solve_scalar_linear(sys.c[c], src.b0.comp[c], src.b1.comp[c], fc, g);
    for (int n = 0; n <= g.n_steps; ++n)
      u.snapshots[n].comp[c] = std::move(uc.snapshots[n]);
  }
  return u;
}

std::vector<ScalarField> interior_residual(const ScalarWaveField& u,
                                           const SpeedField& c,
                                           const ScalarForcing& f) {
  const GridSpec& g = u.grid;
  check_shape(c.values, g, "interior_residual");
  const Strides st(g);
  const double inv_h2 = 1.0 / (g.h * g.h);
  const double inv_dt2 = 1.0 / (g.dt * g.dt);
  const bool forced = !f.is_zero();

  std::vector<ScalarField> r(u.snapshots.size(),
                             ScalarField(g.node_count(), 0.0));
  ScalarField src;
  for (std::size_t n = 1; n + 1 < u.snapshots.size(); ++n) {
    if (forced) f.eval(static_cast<int>(n), g, src);
    const double* cur = u.snapshots[n].data();
    const double* prev = u.snapshots[n - 1].data();
    const double* next = u.snapshots[n + 1].data();
    for_each_interior(g, [&](std::size_t p) {
      const double dtt = (next[p] - 2.0 * cur[p] + prev[p]) * inv_dt2;
      r[n][p] = dtt - c.values[p] * laplacian_at(cur, p, st, g.dim, inv_h2) -
                (forced ? src[p] : 0.0);
    });
  }
  return r;
}

ScalarField time_derivative(const ScalarWaveField& u, int n) {
  const int last = static_cast<int>(u.snapshots.size()) - 1;
  if (n < 0 || n > last) throw Error("time level out of range");
  if (last == 0) return ScalarField(u.snapshots[0].size(), 0.0);
  const double dt = u.grid.dt;
  ScalarField d(u.snapshots[0].size());
  if (n == 0) {
    for (std::size_t p = 0; p < d.size(); ++p)
      d[p] = (u.snapshots[1][p] - u.snapshots[0][p]) / dt;
  } else if (n == last) {
    for (std::size_t p = 0; p < d.size(); ++p)
      d[p] = (u.snapshots[last][p] - u.snapshots[last - 1][p]) / dt;
  } else {
    for (std::size_t p = 0; p < d.size(); ++p)
      d[p] = (u.snapshots[n + 1][p] - u.snapshots[n - 1][p]) / (2.0 * dt);
  }
  return d;
}

Vec3Field time_derivative(const WaveField& u, int n) {
  Vec3Field d;
  const int last = static_cast<int>(u.snapshots.size()) - 1;
  if (n < 0 || n > last) throw Error("time level out of range");
  const double dt = u.grid.dt;
  for (int c = 0; c < 3; ++c) {
    const auto& comp = [&](int m) -> const ScalarField& {
      return u.snapshots[m].comp[c];
    };
    ScalarField& out = d.comp[c];
    out.resize(comp(0).size());
    if (last == 0) {
      std::fill(out.begin(), out.end(), 0.0);
    } else if (n == 0) {
      for (std::size_t p = 0; p < out.size(); ++p)
        out[p] = (comp(1)[p] - comp(0)[p]) / dt;
    } else if (n == last) {
      for (std::size_t p = 0; p < out.size(); ++p)
        out[p] = (comp(last)[p] - comp(last - 1)[p]) / dt;
    } else {
      for (std::size_t p = 0; p < out.size(); ++p)
        out[p] = (comp(n + 1)[p] - comp(n - 1)[p]) / (2.0 * dt);
    }
  }
  return d;
}

double s_norm(const WaveField& u) {
  const GridSpec& g = u.grid;
  double max_h1 = 0.0, max_dt = 0.0;
  for (int n = 0; n < static_cast<int>(u.snapshots.size()); ++n) {
    max_h1 = std::max(max_h1, sobolev_norm(u.snapshots[n], g, SobolevOrder(1)));
    max_dt = std::max(max_dt, l2_norm(time_derivative(u, n), g));
  }
  return max_h1 + max_dt;
}

namespace {

WaveField wavefield_diff(const WaveField& a, const WaveField& b) {
  if (a.snapshots.size() != b.snapshots.size())
    throw Error("trajectories have different step counts");
  WaveField d;
  d.grid = a.grid;
  d.snapshots.resize(a.snapshots.size());
  for (std::size_t n = 0; n < a.snapshots.size(); ++n)
    for (int c = 0; c < 3; ++c) {
      const auto& ac = a.snapshots[n].comp[c];
      const auto& bc = b.snapshots[n].comp[c];
      if (ac.size() != bc.size()) throw Error("trajectory shape mismatch");
      auto& dc = d.snapshots[n].comp[c];
      dc.resize(ac.size());
      for (std::size_t p = 0; p < ac.size(); ++p) dc[p] = ac[p] - bc[p];
    }
  return d;
}

}  // namespace

double s_norm_diff(const WaveField& a, const WaveField& b) {
  return s_norm(wavefield_diff(a, b));
}

double c0_l2_norm(const WaveField& u) {
  double m = 0.0;
  for (const auto& s : u.snapshots) m = std::max(m, l2_norm(s, u.grid));
  return m;
}

double c0_l2_diff(const WaveField& a, const WaveField& b) {
  return c0_l2_norm(wavefield_diff(a, b));
}

}  // namespace wavelab
