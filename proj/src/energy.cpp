#include "wavelab/energy.hpp"

#include <cmath>

#include "wavelab/norms.hpp"

namespace wavelab {

std::vector<double> EnergyLedger::total_plain() const {
  std::vector<double> e(times.size());
  for (std::size_t n = 0; n < e.size(); ++n)
    e[n] = kinetic[n] + grad_plain[n];
  return e;
}

std::vector<double> EnergyLedger::total_weighted() const {
  std::vector<double> e(times.size());
  for (std::size_t n = 0; n < e.size(); ++n)
    e[n] = kinetic[n] + grad_weighted[n];
  return e;
}

namespace {

// 1/2 sum over links of w_link * ((u_r - u_l)/h)^2 * h^dim, with w_link
// either 1 or the link-midpoint average of c^2.
void link_gradient_energy(const ScalarField& u, const ScalarField& c2,
                          const GridSpec& g, double& plain, double& weighted) {
  plain = 0.0;
  weighted = 0.0;
  double cell = 1.0;
  for (int a = 0; a < g.dim; ++a) cell *= g.h;
  const double inv_h2 = 1.0 / (g.h * g.h);
  std::size_t stride = 1;
  for (int axis = 0; axis < g.dim; ++axis) {
    std::array<int, 3> n = g.n;
    n[axis] -= 1;  // links along this axis
    for (int k = 0; k < (g.dim > 2 ? n[2] : 1); ++k)
      for (int j = 0; j < (g.dim > 1 ? n[1] : 1); ++j)
        for (int i = 0; i < n[0]; ++i) {
          const std::size_t p = g.index(i, j, k);
          const double d = u[p + stride] - u[p];
          const double g2 = d * d * inv_h2;
          plain += g2;
          weighted += 0.5 * (c2[p] + c2[p + stride]) * g2;
        }
    stride *= g.n[axis];
  }
  plain *= 0.5 * cell;
  weighted *= 0.5 * cell;
}

}  // namespace

EnergyLedger energy_ledger(const ScalarWaveField& u, const SpeedField& c) {
  const GridSpec& g = u.grid;
  check_shape(c.values, g, "energy_ledger");
  EnergyLedger led;
  const int last = static_cast<int>(u.snapshots.size()) - 1;
  for (int n = 0; n <= last; ++n) {
    led.times.push_back(g.time(n));
    const ScalarField dtu = time_derivative(u, n);
    const double kn = l2_norm(dtu, g);
    led.kinetic.push_back(0.5 * kn * kn);
    double plain, weighted;
    link_gradient_energy(u.snapshots[n], c.values, g, plain, weighted);
    led.grad_plain.push_back(plain);
    led.grad_weighted.push_back(weighted);
  }
  return led;
}

double energy_drift(const EnergyLedger& ledger) {
  const auto e = ledger.total_plain();
  if (e.size() < 4) throw Error("energy_drift needs at least four levels");
  double lo = e[1], hi = e[1];
  for (std::size_t n = 1; n + 1 < e.size(); ++n) {
    lo = std::min(lo, e[n]);
    hi = std::max(hi, e[n]);
  }
  if (!(hi > 0.0)) return 0.0;
  return (hi - lo) / hi;
}

GronwallResult gronwall_check(const EnergyLedger& ledger, double data_norm,
                              const GronwallConstants& k) {
  if (!(data_norm > 0.0)) throw Error("gronwall_check needs data_norm > 0");
  GronwallResult res;
  const auto e = ledger.total_plain();
  res.bound.resize(e.size());
  res.observed.resize(e.size());
  for (std::size_t n = 0; n < e.size(); ++n) {
    res.observed[n] = std::sqrt(2.0 * e[n]);
    res.bound[n] = k.C * data_norm * std::exp(k.A_tilde * ledger.times[n]);
    if (res.bound[n] > 0.0)
      res.max_ratio = std::max(res.max_ratio, res.observed[n] / res.bound[n]);
  }
  res.pass = res.max_ratio <= 1.0;
  return res;
}

double calibrate_gronwall_constant(const EnergyLedger& ledger,
                                   double data_norm, double a_tilde) {
  GronwallConstants unit{1.0, a_tilde};
  const GronwallResult raw = gronwall_check(ledger, data_norm, unit);
  return 1.1 * raw.max_ratio;
}

double gronwall_rate(const SpeedField& c, const GridSpec& g) {
  check_shape(c.values, g, "gronwall_rate");
  double rate = max_abs(c.values);
  std::array<ScalarField, 3> grad;
  for (int a = 0; a < g.dim; ++a) grad[a] = axis_derivative(c.values, g, a);
  for (std::size_t p = 0; p < c.values.size(); ++p) {
    double m2 = 0.0;
    for (int a = 0; a < g.dim; ++a) m2 += grad[a][p] * grad[a][p];
    rate = std::max(rate, std::sqrt(m2));
  }
  return rate;
}

}  // namespace wavelab
