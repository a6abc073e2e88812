#include "wavelab/lifespan.hpp"

#include <cmath>

#include "wavelab/errors.hpp"
#include "wavelab/norms.hpp"

namespace wavelab {

LifespanEstimate lifespan_estimate(const LifespanModel& model, double epsilon) {
  if (!(epsilon > 0.0)) throw Error("lifespan_estimate requires epsilon > 0");
  if (!(model.C_s > 0.0)) throw Error("lifespan model requires C_s > 0");

  LifespanEstimate est;
  const double target = 1.0 / (3.0 * epsilon);
  est.t_closed_form =
      std::max(0.0, (std::log(target) - model.C_s_prime) / model.C_s);

  if (model.D1) {
    // T * D1(T) is increasing for a positive nondecreasing envelope; expand a
    // bracket, then bisect to fixed depth for determinism.
    auto grow = [&](double t) { return t * model.D1(t) - target; };
    double lo = 0.0, hi = 1.0;
    int guard = 0;
    while (grow(hi) < 0.0 && guard++ < 2048) hi *= 2.0;
    if (grow(hi) < 0.0) {
      est.t_envelope = hi;  // envelope never reaches the target
    } else {
      for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (grow(mid) < 0.0)
          lo = mid;
        else
          hi = mid;
      }
      est.t_envelope = 0.5 * (lo + hi);
    }
  } else {
    est.t_envelope = est.t_closed_form;
  }
  est.t_max = std::min(est.t_closed_form, est.t_envelope);
  est.positive = est.t_max > 0.0;
  return est;
}

LifespanModel default_lifespan_model(const SpeedSystem& sys,
                                     const GridSpec& g) {
  double c_s = 0.0;
  for (const auto& f : sys.c) {
    check_shape(f.values, g, "default_lifespan_model");
    c_s = std::max(c_s, max_abs(f.values));
    std::array<ScalarField, 3> grad;
    for (int a = 0; a < g.dim; ++a) grad[a] = axis_derivative(f.values, g, a);
    for (std::size_t p = 0; p < f.values.size(); ++p) {
      double m2 = 0.0;
      for (int a = 0; a < g.dim; ++a) m2 += grad[a][p] * grad[a][p];
      c_s = std::max(c_s, std::sqrt(m2));
    }
  }
  LifespanModel model;
  model.C_s = c_s;
  model.C_s_prime = std::log(2.0);
  return model;
}

DiameterCheck diameter_condition(const GridSpec& g, const SpeedSystem& sys,
                                 const LifespanModel& model, double epsilon) {
  DiameterCheck chk;
  const double slowest = std::sqrt(min_speed_on_inner(sys, g));
  if (!(slowest > 0.0)) throw Error("diameter_condition: nonpositive speed");
  chk.crossing_time = g.inner_diameter() / slowest;
  chk.t_max = lifespan_estimate(model, epsilon).t_max;
  chk.pass = chk.crossing_time < chk.t_max;
  return chk;
}

EpsilonThreshold lifespan_epsilon_threshold(const LifespanModel& model,
                                            double t_needed) {
  if (!(t_needed > 0.0))
    throw Error("lifespan_epsilon_threshold requires t_needed > 0");
  EpsilonThreshold th;

  auto covers = [&](double eps) {
    return lifespan_estimate(model, eps).t_max >= t_needed;
  };

  double lo = 1e-300;
  if (!covers(lo)) return th;  // even vanishing data does not reach t_needed
  double hi = 1.0;
  int guard = 0;
  while (covers(hi) && guard++ < 2048) hi *= 2.0;

  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (covers(mid))
      lo = mid;
    else
      hi = mid;
  }
  th.found = true;
  th.epsilon1 = lo;
  return th;
}

}  // namespace wavelab
