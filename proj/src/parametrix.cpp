#include "wavelab/parametrix.hpp"

#include <cmath>

namespace wavelab {

ParametrixBundle build_parametrix(const SpeedSystem& sys,
                                  const SourceData& unit_source, double epsilon,
                                  const GridSpec& g) {
  if (!(epsilon > 0.0)) throw Error("build_parametrix requires epsilon > 0");

  ParametrixBundle b;
  b.epsilon = epsilon;
  b.w1 = solve_system_linear(sys, unit_source, g);

  // Second term: zero Cauchy data, forcing |w1|^2 in every component,
  // sampled at the solver's own time levels.
  std::vector<Vec3Field> samples(g.n_steps + 1);
  for (int n = 0; n <= g.n_steps; ++n) {
    samples[n].resize(g.node_count());
    const auto& s = b.w1.snapshots[n];
    ScalarField& sq = samples[n].comp[0];
    for (std::size_t p = 0; p < sq.size(); ++p)
      sq[p] = s.comp[0][p] * s.comp[0][p] + s.comp[1][p] * s.comp[1][p] +
              s.comp[2][p] * s.comp[2][p];
    samples[n].comp[1] = sq;
    samples[n].comp[2] = sq;
  }
  SourceData quad;
  quad.b0.resize(g.node_count());
  quad.b1.resize(g.node_count());
  quad.f = VecForcing::from_samples(std::move(samples));
  b.w2 = solve_system_linear(sys, quad, g);

  b.w.grid = g;
  b.w.snapshots.resize(g.n_steps + 1);
  const double e2 = epsilon * epsilon;
  for (int n = 0; n <= g.n_steps; ++n)
    for (int c = 0; c < 3; ++c) {
      const auto& w1c = b.w1.snapshots[n].comp[c];
      const auto& w2c = b.w2.snapshots[n].comp[c];
      auto& wc = b.w.snapshots[n].comp[c];
      wc.resize(w1c.size());
      for (std::size_t p = 0; p < wc.size(); ++p)
        wc[p] = epsilon * w1c[p] + e2 * w2c[p];
    }
  return b;
}

ParametrixErrorRecord parametrix_error(
    const ParametrixBundle& bundle, const SpeedSystem& sys,
    const SourceData& unit_source, const GridSpec& g,
    const std::function<double(double)>& envelope) {
  ParametrixErrorRecord rec;
  rec.epsilon = bundle.epsilon;

  NonlinearProblem prob;
  prob.sys = sys;
  prob.source = scale_source(unit_source, bundle.epsilon);
  prob.grid = g;
  const WaveField u = solve_coupled(prob);

  rec.error = s_norm_diff(u, bundle.w);

  WaveField first;
  first.grid = g;
  first.snapshots.resize(u.snapshots.size());
  for (std::size_t n = 0; n < u.snapshots.size(); ++n)
    for (int c = 0; c < 3; ++c) {
      const auto& w1c = bundle.w1.snapshots[n].comp[c];
      auto& fc = first.snapshots[n].comp[c];
      fc.resize(w1c.size());
      for (std::size_t p = 0; p < fc.size(); ++p)
        fc[p] = bundle.epsilon * w1c[p];
    }
  rec.first_order = s_norm_diff(u, first);

  if (envelope) {
    const double e = bundle.epsilon;
    rec.bound = e * e * e * envelope(g.T);
    rec.ratio = rec.bound > 0.0 ? rec.error / rec.bound : 0.0;
  }
  return rec;
}

}  // namespace wavelab
