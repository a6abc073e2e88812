#pragma once

#include <functional>

#include "wavelab/grid.hpp"
#include "wavelab/speed.hpp"

namespace wavelab {

/// Growth model behind the guaranteed-existence time: constants of the
/// small-data energy estimate, plus an optional explicit growth envelope
/// D1(T) for the linear evolution (used when a sharper bound is available).
struct LifespanModel {
  double C_s = 1.0;
  double C_s_prime = 0.0;
  std::function<double(double)> D1;  // optional, positive nondecreasing
};

struct LifespanEstimate {
  double t_max = 0.0;          // the guaranteed time, min of the two below
  double t_closed_form = 0.0;  // (log(1/(3 eps)) - C_s') / C_s, clipped at 0
  double t_envelope = 0.0;     // root of T * D1(T) = 1/(3 eps); t_closed_form
                               // again when no envelope is supplied
  bool positive = false;
};

/// Guaranteed existence time for data scale epsilon > 0.
LifespanEstimate lifespan_estimate(const LifespanModel& model, double epsilon);

/// Model constants read off a speed system: C_s is the largest of the sup of
/// c^2 and the sup of its discrete gradient magnitude over components;
/// C_s' = log 2.
LifespanModel default_lifespan_model(const SpeedSystem& sys, const GridSpec& g);

struct DiameterCheck {
  bool pass = false;
  double crossing_time = 0.0;  // inner-box diameter / slowest speed inside
  double t_max = 0.0;
};

/// Does a wave crossing the measurement box at the slowest admissible speed
/// fit inside the guaranteed lifespan?
DiameterCheck diameter_condition(const GridSpec& g, const SpeedSystem& sys,
                                 const LifespanModel& model, double epsilon);

struct EpsilonThreshold {
  bool found = false;
  double epsilon1 = 0.0;  // largest scale whose lifespan covers t_needed
};

/// Bisect for the largest epsilon whose guaranteed lifespan still reaches
/// t_needed. Relative precision 1e-12.
EpsilonThreshold lifespan_epsilon_threshold(const LifespanModel& model,
                                            double t_needed);

}  // namespace wavelab
