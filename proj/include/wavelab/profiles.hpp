#pragma once

#include <array>
#include <string>

#include "wavelab/grid.hpp"
#include "wavelab/source.hpp"
#include "wavelab/speed.hpp"

namespace wavelab {

/// C-infinity bump: exp(1 - 1/(1 - s^2)) for |s| < 1, zero outside.
/// Peaks at 1 for s = 0; every derivative vanishes at |s| = 1.
double smooth_bump(double s);

/// Uniform squared speed. The support radius is pushed past the box corners
/// so the unit-exterior requirement is vacuous for non-unit values.
SpeedField make_constant_speed(const GridSpec& g, double value);

/// c^2 = 1 + amplitude * bump(|x - center| / width). Compactly supported
/// perturbation; admissible envelope derived from the amplitude.
SpeedField make_bump_speed(const GridSpec& g, double amplitude,
                           const std::array<double, 3>& center, double width);

/// c^2 dips from 1 toward the grid center: 1 - amplitude*(1-(r/radius)^2)^4
/// inside the radius, exactly 1 outside. amplitude in (0, 1).
SpeedField make_radial_decay_speed(const GridSpec& g, double amplitude,
                                   double radius);

/// Load c^2 from a raw field file; the grid in the header must match.
SpeedField speed_from_file(const GridSpec& g, const std::string& path,
                           double m0, double m1, double R);

/// Product of axis sine modes on the outer box in every component, zero
/// velocity, no forcing.
SourceData make_standing_mode_source(const GridSpec& g, double amplitude,
                                     const std::array<int, 3>& mode);

/// Compact radial pulse in every component, zero velocity, no forcing.
SourceData make_pulse_source(const GridSpec& g, double amplitude,
                             const std::array<double, 3>& center, double width);

/// Rescale so that base_norm(source) == target. Throws on zero data.
SourceData normalize_source(const SourceData& src, const GridSpec& g,
                            double target);

}  // namespace wavelab
