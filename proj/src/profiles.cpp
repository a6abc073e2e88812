#include "wavelab/profiles.hpp"

#include <cmath>
#include <numbers>

#include "wavelab/io.hpp"
#include "wavelab/norms.hpp"

namespace wavelab {

double smooth_bump(double s) {
  const double s2 = s * s;
  if (s2 >= 1.0) return 0.0;
  return std::exp(1.0 - 1.0 / (1.0 - s2));
}

namespace {

double circumradius(const GridSpec& g) {
  double r2 = 0.0;
  for (int a = 0; a < g.dim; ++a) {
    const double half = 0.5 * g.outer[a].length();
    r2 += half * half;
  }
  return std::sqrt(r2);
}

double dist_to(const GridSpec& g, std::size_t p,
               const std::array<double, 3>& center) {
  const auto x = g.coords(p);
  double d2 = 0.0;
  for (int a = 0; a < g.dim; ++a) {
    const double dx = x[a] - center[a];
    d2 += dx * dx;
  }
  return std::sqrt(d2);
}

}  // namespace

SpeedField make_constant_speed(const GridSpec& g, double value) {
  if (!(value > 0.0)) throw Error("constant speed profile needs value > 0");
  SpeedField c;
  c.values.assign(g.node_count(), value);
  c.m0 = value;
  c.m1 = value;
  c.R = circumradius(g) + g.h;
  return c;
}

SpeedField make_bump_speed(const GridSpec& g, double amplitude,
                           const std::array<double, 3>& center, double width) {
  if (!(width > 0.0)) throw Error("bump speed profile needs width > 0");
  if (!(1.0 + amplitude > 0.0))
    throw Error("bump speed amplitude drives c^2 nonpositive");
  SpeedField c;
  c.values.resize(g.node_count());
  for (std::size_t p = 0; p < c.values.size(); ++p)
    c.values[p] = 1.0 + amplitude * smooth_bump(dist_to(g, p, center) / width);
  c.m0 = std::min(1.0, 1.0 + amplitude);
  c.m1 = std::max(1.0, 1.0 + amplitude);
  const auto gc = g.center();
  double off = 0.0;
  for (int a = 0; a < g.dim; ++a) {
    const double d = center[a] - gc[a];
    off += d * d;
  }
  c.R = std::sqrt(off) + width;
  return c;
}

SpeedField make_radial_decay_speed(const GridSpec& g, double amplitude,
                                   double radius) {
  if (!(amplitude > 0.0) || !(amplitude < 1.0))
    throw Error("radial decay amplitude must lie in (0, 1)");
  if (!(radius > 0.0)) throw Error("radial decay needs radius > 0");
  SpeedField c;
  c.values.resize(g.node_count());
  const auto gc = g.center();
  for (std::size_t p = 0; p < c.values.size(); ++p) {
    const double s = dist_to(g, p, gc) / radius;
    if (s >= 1.0) {
      c.values[p] = 1.0;
    } else {
      const double q = 1.0 - s * s;
      c.values[p] = 1.0 - amplitude * q * q * q * q;
    }
  }
  c.m0 = 1.0 - amplitude;
  c.m1 = 1.0;
  c.R = radius;
  return c;
}

SpeedField speed_from_file(const GridSpec& g, const std::string& path,
                           double m0, double m1, double R) {
  const RawField raw = read_field_binary(path);
  if (raw.dim != g.dim) throw IoError("speed file dim mismatch: " + path);
  for (int a = 0; a < g.dim; ++a)
    if (raw.n[a] != g.n[a])
      throw IoError("speed file node count mismatch: " + path);
  if (std::abs(raw.h - g.h) > 1e-12 * g.h)
    throw IoError("speed file spacing mismatch: " + path);
  SpeedField c;
  c.values = raw.values;
  c.m0 = m0;
  c.m1 = m1;
  c.R = R;
  return c;
}

SourceData make_standing_mode_source(const GridSpec& g, double amplitude,
                                     const std::array<int, 3>& mode) {
  for (int a = 0; a < g.dim; ++a)
    if (mode[a] < 1) throw Error("standing mode numbers must be >= 1");
  SourceData src;
  src.b0.resize(g.node_count());
  src.b1.resize(g.node_count());
  ScalarField profile(g.node_count());
  for (std::size_t p = 0; p < profile.size(); ++p) {
    const auto x = g.coords(p);
    double v = amplitude;
    for (int a = 0; a < g.dim; ++a)
      v *= std::sin(mode[a] * std::numbers::pi * (x[a] - g.outer[a].lo) /
                    g.outer[a].length());
    profile[p] = v;
  }
  for (int c = 0; c < 3; ++c) src.b0.comp[c] = profile;
  return src;
}

SourceData make_pulse_source(const GridSpec& g, double amplitude,
                             const std::array<double, 3>& center,
                             double width) {
  if (!(width > 0.0)) throw Error("pulse source needs width > 0");
  SourceData src;
  src.b0.resize(g.node_count());
  src.b1.resize(g.node_count());
  for (std::size_t p = 0; p < g.node_count(); ++p) {
    const double v = amplitude * smooth_bump(dist_to(g, p, center) / width);
    for (int c = 0; c < 3; ++c) src.b0.comp[c][p] = v;
  }
  return src;
}

SourceData normalize_source(const SourceData& src, const GridSpec& g,
                            double target) {
  if (!(target > 0.0)) throw Error("normalize_source needs target > 0");
  const double n = base_norm(src, g);
  if (!(n > 0.0)) throw Error("normalize_source: data is identically zero");
  SourceData out = scale_source(src, target / n);
  out.epsilon = src.epsilon;  // rescaling the profile, not the data scale
  return out;
}

}  // namespace wavelab
