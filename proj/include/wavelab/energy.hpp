#pragma once

#include <vector>

#include "wavelab/linear.hpp"

namespace wavelab {

/// Per-step energy accounting for one scalar trajectory. Gradients are taken
/// on cell links (staggered first differences), the weighted series averages
/// c^2 to the link midpoints, and the kinetic term uses the discrete time
/// derivative (centered inside, one-sided at the ends).
struct EnergyLedger {
  std::vector<double> times;
  std::vector<double> kinetic;         // 1/2 ||D_t u||^2
  std::vector<double> grad_plain;      // 1/2 ||grad u||^2
  std::vector<double> grad_weighted;   // 1/2 ||c grad u||^2

  std::vector<double> total_plain() const;
  std::vector<double> total_weighted() const;
};

EnergyLedger energy_ledger(const ScalarWaveField& u, const SpeedField& c);

/// Relative peak-to-peak variation of the plain energy over the centered
/// time levels 1..n_steps-1.
double energy_drift(const EnergyLedger& ledger);

struct GronwallConstants {
  double C = 1.0;
  double A_tilde = 1.0;
};

struct GronwallResult {
  bool pass = false;
  double max_ratio = 0.0;  // max_t sqrt(2 E_plain(t)) / (C * data * e^(A t))
  std::vector<double> bound;
  std::vector<double> observed;  // sqrt(2 E_plain(t))
};

/// Check sqrt(2 E_plain(t)) <= C * data_norm * exp(A_tilde * t) at every
/// recorded level. data_norm is ||u0||_{H1} + ||u1||_{L2} + ||f||_{L2 L2}.
GronwallResult gronwall_check(const EnergyLedger& ledger, double data_norm,
                              const GronwallConstants& k);

/// Smallest C that makes gronwall_check pass for this run, times a 1.1
/// safety margin.
double calibrate_gronwall_constant(const EnergyLedger& ledger,
                                   double data_norm, double a_tilde);

/// Growth-rate constant read off the speed field: the larger of sup c^2 and
/// the sup of its discrete gradient magnitude.
double gronwall_rate(const SpeedField& c, const GridSpec& g);

}  // namespace wavelab
