#include "wavelab/source.hpp"

#include <cmath>

#include "wavelab/norms.hpp"

namespace wavelab {

void VecForcing::eval(int comp, int step, const GridSpec& g,
                      ScalarField& out) const {
  out.assign(g.node_count(), 0.0);
  if (sampled) {
    if (step < 0 || static_cast<std::size_t>(step) >= sampled->size())
      throw Error("sampled forcing has no step " + std::to_string(step));
    const ScalarField& s = (*sampled)[step].comp[comp];
    check_shape(s, g, "sampled forcing");
    out = s;
    return;
  }
  if (!fn[comp]) return;
  const double t = g.time(step);
  const auto& fc = fn[comp];
  std::size_t p = 0;
  for (int k = 0; k < g.n[2]; ++k)
    for (int j = 0; j < g.n[1]; ++j)
      for (int i = 0; i < g.n[0]; ++i) {
        const double x = g.outer[0].lo + i * g.h;
        const double y = g.dim > 1 ? g.outer[1].lo + j * g.h : 0.0;
        const double z = g.dim > 2 ? g.outer[2].lo + k * g.h : 0.0;
        out[p++] = fc(t, x, y, z);
      }
}

VecForcing VecForcing::from_samples(std::vector<Vec3Field> samples) {
  VecForcing f;
  f.sampled = std::make_shared<const std::vector<Vec3Field>>(std::move(samples));
  return f;
}

SourceData scale_source(const SourceData& src, double factor) {
  SourceData out;
  out.epsilon = src.epsilon * factor;
  out.b0 = src.b0;
  out.b1 = src.b1;
  for (int c = 0; c < 3; ++c) {
    for (auto& v : out.b0.comp[c]) v *= factor;
    for (auto& v : out.b1.comp[c]) v *= factor;
  }
  if (src.f.sampled) {
    std::vector<Vec3Field> scaled = *src.f.sampled;
    for (auto& snap : scaled)
      for (auto& comp : snap.comp)
        for (auto& v : comp) v *= factor;
    out.f = VecForcing::from_samples(std::move(scaled));
  } else {
    for (int c = 0; c < 3; ++c) {
      if (!src.f.fn[c]) continue;
      const SpaceTimeFn base = src.f.fn[c];
      out.f.fn[c] = [base, factor](double t, double x, double y, double z) {
        return factor * base(t, x, y, z);
      };
    }
  }
  return out;
}

double base_norm(const SourceData& src, const GridSpec& g) {
  check_shape(src.b0, g, "base_norm");
  check_shape(src.b1, g, "base_norm");
  const double n0 = sobolev_norm(src.b0, g, SobolevOrder(3));
  const double n1 = sobolev_norm(src.b1, g, SobolevOrder(2));

  double nf = 0.0;
  if (!src.f.is_zero()) {
    ScalarField buf;
    double acc = 0.0;
    for (int n = 0; n <= g.n_steps; ++n) {
      double sq = 0.0;
      for (int c = 0; c < 3; ++c) {
        src.f.eval(c, n, g, buf);
        const double norm = sobolev_norm(buf, g, SobolevOrder(2));
        sq += norm * norm;
      }
      const double w = (n == 0 || n == g.n_steps) ? 0.5 : 1.0;
      acc += w * sq;
    }
    nf = std::sqrt(acc * g.dt);
  }
  return (n0 + n1 + nf) / std::abs(src.epsilon);
}

double boundary_magnitude(const SourceData& src, const GridSpec& g) {
  check_shape(src.b0, g, "boundary_magnitude");
  check_shape(src.b1, g, "boundary_magnitude");
  double m = 0.0;
  std::size_t p = 0;
  for (int k = 0; k < g.n[2]; ++k)
    for (int j = 0; j < g.n[1]; ++j)
      for (int i = 0; i < g.n[0]; ++i, ++p)
        if (g.on_outer_boundary(i, j, k))
          for (int c = 0; c < 3; ++c)
            m = std::max({m, std::abs(src.b0.comp[c][p]),
                          std::abs(src.b1.comp[c][p])});
  return m;
}

}  // namespace wavelab
