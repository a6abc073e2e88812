#include "wavelab/experiments.hpp"

#include <cmath>
#include <filesystem>
#include <limits>
#include <mutex>
#include <numbers>
#include <sstream>
#include <thread>

#include "wavelab/convergence.hpp"
#include "wavelab/energy.hpp"
#include "wavelab/herglotz.hpp"
#include "wavelab/io.hpp"
#include "wavelab/lifespan.hpp"
#include "wavelab/linear.hpp"
#include "wavelab/nonlinear.hpp"
#include "wavelab/norms.hpp"
#include "wavelab/parametrix.hpp"
#include "wavelab/profiles.hpp"
#include "wavelab/recovery.hpp"
#include "wavelab/trace.hpp"

namespace wavelab {

namespace {

namespace fs = std::filesystem;

std::string out_path(const ExperimentConfig& c, const std::string& name) {
  return (fs::path(c.output_dir) / name).string();
}

void add_line(ExperimentOutcome& o, const std::string& name, double value,
              double threshold, bool pass) {
  o.criteria.push_back({name, value, threshold, pass});
  o.all_pass = o.all_pass && pass;
}

// Static-stride worker pool; each index writes only its own output slot, so
// results do not depend on the thread count.
template <typename Fn>
void parallel_for(int count, int threads, Fn&& fn) {
  threads = std::max(1, std::min(threads, count));
  if (threads == 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::mutex mu;
  std::exception_ptr first;
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int t = 0; t < threads; ++t)
    pool.emplace_back([&, t]() {
      for (int i = t; i < count; i += threads) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(mu);
          if (!first) first = std::current_exception();
        }
      }
    });
  for (auto& th : pool) th.join();
  if (first) std::rethrow_exception(first);
}

void write_trace_csv(const std::string& path, const BoundaryTrace& tr) {
  std::ostringstream out;
  out << "step,t,x,y,z,component,value\n";
  for (std::size_t n = 0; n < tr.samples.size(); ++n)
    for (std::size_t q = 0; q < tr.nodes.size(); ++q)
      for (int c = 0; c < 3; ++c) {
        out << n << ',' << format_double(tr.dt * n) << ','
            << format_double(tr.coords[q][0]) << ','
            << format_double(tr.coords[q][1]) << ','
            << format_double(tr.coords[q][2]) << ',' << (c + 1) << ','
            << format_double(tr.samples[n][q * 3 + c]) << '\n';
      }
  write_text(path, out.str());
}

void apply_envelope_overrides(SpeedField& f, const SpeedConfig& sc) {
  if (sc.m0 > 0.0) f.m0 = sc.m0;
  if (sc.m1 > 0.0) f.m1 = sc.m1;
  if (sc.R > 0.0) f.R = sc.R;
}

}  // namespace

GridSpec grid_from_config(const ExperimentConfig& c, double h_override) {
  std::vector<AxisInterval> outer, inner;
  for (int a = 0; a < c.dim; ++a) {
    outer.push_back({c.outer_lo[a], c.outer_hi[a]});
    inner.push_back({c.inner_lo[a], c.inner_hi[a]});
  }
  return make_grid(c.dim, outer, inner, h_override, c.T, c.stability_factor);
}

GridSpec grid_from_config(const ExperimentConfig& c) {
  return grid_from_config(c, c.h);
}

SpeedSystem speed_from_config(const ExperimentConfig& c, const GridSpec& g) {
  const SpeedConfig& sc = c.speed;
  SpeedSystem sys;
  if (sc.profile == "constant") {
    for (int i = 0; i < 3; ++i) sys.c[i] = make_constant_speed(g, sc.value);
  } else if (sc.profile == "herglotz-bump") {
    sys.c[0] = make_constant_speed(g, 1.0);
    sys.c[1] = make_bump_speed(g, sc.amplitude, sc.center, sc.width);
    sys.c[2] = make_constant_speed(g, 1.0);
  } else if (sc.profile == "radial-decay") {
    for (int i = 0; i < 3; ++i)
      sys.c[i] = make_radial_decay_speed(g, sc.amplitude, sc.radius);
  } else if (sc.profile == "file") {
    if (sc.path.empty()) throw ConfigError("speed.path required for file profile");
    if (!(sc.m0 > 0.0) || !(sc.m1 >= sc.m0) || !(sc.R > 0.0))
      throw ConfigError("file profile requires speed.m0, speed.m1, speed.R");
    for (int i = 0; i < 3; ++i)
      sys.c[i] = speed_from_file(g, sc.path, sc.m0, sc.m1, sc.R);
  } else {
    throw ConfigError("unknown speed profile '" + sc.profile + "'");
  }
  for (auto& f : sys.c) apply_envelope_overrides(f, sc);
  return sys;
}

SourceData source_from_config(const ExperimentConfig& c, const GridSpec& g) {
  const SourceConfig& sc = c.source;
  SourceData src;
  if (sc.recipe == "standing-mode") {
    src = make_standing_mode_source(g, sc.amplitude, sc.mode);
  } else if (sc.recipe == "gaussian-pulse") {
    src = make_pulse_source(g, sc.amplitude, sc.center, sc.width);
  } else if (sc.recipe == "zero") {
    src.b0.resize(g.node_count());
    src.b1.resize(g.node_count());
    if (sc.norm_target > 0.0)
      throw ConfigError("zero source cannot be normalized");
    return src;
  } else {
    throw ConfigError("unknown source recipe '" + sc.recipe + "'");
  }
  if (sc.norm_target > 0.0) src = normalize_source(src, g, sc.norm_target);
  return src;
}

std::vector<double> radial_speed_from_config(const ExperimentConfig& c,
                                             std::size_t samples, double dr) {
  const SpeedConfig& sc = c.speed;
  std::vector<double> prof(samples);
  for (std::size_t i = 0; i < samples; ++i) {
    const double r = i * dr;
    double c2;
    if (sc.profile == "constant") {
      c2 = sc.value;
    } else if (sc.profile == "herglotz-bump") {
      c2 = 1.0 + sc.amplitude * smooth_bump(r / sc.width);
    } else if (sc.profile == "radial-decay") {
      if (r >= sc.radius) {
        c2 = 1.0;
      } else {
        const double q = 1.0 - (r / sc.radius) * (r / sc.radius);
        c2 = 1.0 - sc.amplitude * q * q * q * q;
      }
    } else {
      throw ConfigError("speed profile '" + sc.profile +
                        "' has no radial form");
    }
    if (!(c2 > 0.0)) throw ConfigError("radial profile is nonpositive");
    prof[i] = std::sqrt(c2);
  }
  return prof;
}

std::string format_summary(const std::vector<CriterionLine>& criteria) {
  std::ostringstream out;
  for (const auto& c : criteria)
    out << c.name << ", " << format_double(c.value) << ", "
        << format_double(c.threshold) << ", " << (c.pass ? "pass" : "fail")
        << '\n';
  return out.str();
}

namespace {

void finish(ExperimentOutcome& o, const ExperimentConfig& c) {
  const std::string summary = out_path(c, "summary.csv");
  write_text(summary, "criterion, value, threshold, result\n" +
                          format_summary(o.criteria));
  o.artifacts.push_back(summary);
  const std::string echo = out_path(c, "config_echo.txt");
  write_text(echo, emit_config(c));
  o.artifacts.push_back(echo);
}

ExperimentOutcome run_validate(const ExperimentConfig& c) {
  ExperimentOutcome o;
  const GridSpec g = grid_from_config(c);
  const SpeedSystem sys = speed_from_config(c, g);

  bool admissible = true;
  for (const auto& f : sys.c) admissible = admissible && validate_speed(f, g).pass;
  add_line(o, "speed-admissible", admissible ? 1.0 : 0.0, 1.0, admissible);

  const SourceData src = source_from_config(c, g);
  const double data_scale =
      std::max({max_abs(src.b0), max_abs(src.b1), 1e-300});
  const double rel = boundary_magnitude(src, g) / data_scale;
  add_line(o, "data-boundary-vanishes", rel, 1e-12, rel <= 1e-12);

  const double cmax = std::sqrt(sys.max_value());
  const double ratio = g.dt * std::sqrt(static_cast<double>(g.dim)) * cmax / g.h;
  add_line(o, "cfl-ratio", ratio, 1.0, ratio <= 1.0 + 1e-9);

  const double bn = base_norm(src, g);
  add_line(o, "base-norm-bounded", bn, 1.0, bn <= 1.0);

  std::vector<std::vector<double>> row{{static_cast<double>(g.dim), g.h, g.dt,
                                        static_cast<double>(g.n_steps),
                                        static_cast<double>(g.node_count()),
                                        ratio, bn, rel}};
  const std::string facts = out_path(c, "validate.csv");
  write_csv(facts, {"dim", "h", "dt", "n_steps", "nodes", "cfl_ratio",
                    "base_norm", "boundary_rel"},
            row);
  o.artifacts.push_back(facts);
  finish(o, c);
  return o;
}

ExperimentOutcome run_linear_convergence(const ExperimentConfig& c) {
  if (c.speed.profile != "constant")
    throw ConfigError("linear-convergence requires the constant speed profile");
  if (c.source.recipe != "standing-mode")
    throw ConfigError("linear-convergence requires the standing-mode source");

  std::vector<double> hs = c.h_list;
  if (hs.empty()) hs = {1.0 / 64, 1.0 / 128, 1.0 / 256};

  ExperimentOutcome o;
  std::vector<double> errs(hs.size()), max_errs(hs.size()), dts(hs.size());
  for (std::size_t i = 0; i < hs.size(); ++i) {
    const GridSpec g = grid_from_config(c, hs[i]);
    const SpeedSystem sys = speed_from_config(c, g);
    const SourceData src = source_from_config(c, g);

    double kappa2 = 0.0;
    for (int a = 0; a < g.dim; ++a) {
      const double k = c.source.mode[a] * std::numbers::pi /
                       g.outer[a].length();
      kappa2 += k * k;
    }
    const double omega = std::sqrt(c.speed.value * kappa2);

    ScalarField zero(g.node_count(), 0.0);
    const ScalarWaveField u = solve_scalar_linear(
        sys.c[0], src.b0.comp[0], zero, ScalarForcing::zero(), g);

    const double decay = std::cos(omega * g.T);
    ScalarField diff(g.node_count());
    for (std::size_t p = 0; p < diff.size(); ++p)
      diff[p] = u.snapshots.back()[p] - src.b0.comp[0][p] * decay;
    errs[i] = l2_norm(diff, g);
    max_errs[i] = max_abs(diff);
    dts[i] = g.dt;
  }

  const ConvergenceFit fit = convergence_order(hs, errs);
  add_line(o, "linear-order", fit.order, 0.2, std::abs(fit.order - 2.0) <= 0.2);
  add_line(o, "finest-error-max", max_errs.back(), 1e-3,
           max_errs.back() <= 1e-3);

  std::vector<std::vector<double>> rows;
  for (std::size_t i = 0; i < hs.size(); ++i)
    rows.push_back({hs[i], dts[i], errs[i], max_errs[i]});
  const std::string conv = out_path(c, "convergence.csv");
  write_csv(conv, {"h", "dt", "error_l2", "error_max"}, rows);
  o.artifacts.push_back(conv);

  std::vector<std::vector<double>> orows;
  for (std::size_t i = 0; i + 1 < hs.size(); ++i)
    orows.push_back({hs[i], hs[i + 1], fit.pairwise[i]});
  const std::string ords = out_path(c, "orders.csv");
  write_csv(ords, {"h_coarse", "h_fine", "order"}, orows);
  o.artifacts.push_back(ords);

  finish(o, c);
  return o;
}

ExperimentOutcome run_energy(const ExperimentConfig& c) {
  ExperimentOutcome o;

  auto run_once = [&](double factor, GridSpec& g_out) {
    ExperimentConfig cc = c;
    cc.stability_factor = factor;
    const GridSpec g = grid_from_config(cc);
    const SpeedSystem sys = speed_from_config(cc, g);
    const SourceData src = source_from_config(cc, g);
    ScalarField zero(g.node_count(), 0.0);
    const ScalarWaveField u = solve_scalar_linear(
        sys.c[0], src.b0.comp[0], src.b1.comp[0], ScalarForcing::zero(), g);
    g_out = g;
    return std::pair{energy_ledger(u, sys.c[0]), sys};
  };

  GridSpec g1, g2;
  auto [led1, sys1] = run_once(c.stability_factor, g1);
  auto [led2, sys2] = run_once(0.5 * c.stability_factor, g2);

  const double drift1 = energy_drift(led1);
  const double drift2 = energy_drift(led2);
  const double ratio = drift2 > 0.0 ? drift1 / drift2 : 0.0;
  add_line(o, "energy-drift-ratio", ratio, 3.5, ratio >= 3.5);

  // m0 <= c^2 <= m1 must sandwich the weighted gradient series.
  const auto& f = sys1.c[0];
  double viol = 0.0;
  double scale = 0.0;
  for (std::size_t n = 0; n < led1.times.size(); ++n)
    scale = std::max(scale, led1.grad_plain[n] + led1.kinetic[n]);
  for (std::size_t n = 0; n < led1.times.size(); ++n) {
    viol = std::max(viol, f.m0 * led1.grad_plain[n] - led1.grad_weighted[n]);
    viol = std::max(viol, led1.grad_weighted[n] - f.m1 * led1.grad_plain[n]);
  }
  const double rel_viol = scale > 0.0 ? viol / scale : 0.0;
  add_line(o, "weighted-sandwich", rel_viol, 1e-12, rel_viol <= 1e-12);

  const GridSpec g = g1;
  const SourceData src = source_from_config(c, g);
  const double data_norm =
      sobolev_norm(src.b0.comp[0], g, SobolevOrder(1)) +
      l2_norm(src.b1.comp[0], g);
  if (data_norm > 0.0) {
    GronwallConstants k{1.0, gronwall_rate(f, g)};
    const GronwallResult gr = gronwall_check(led1, data_norm, k);
    add_line(o, "gronwall-raw-ratio", gr.max_ratio, 1.2, gr.max_ratio <= 1.2);
  }

  std::vector<std::vector<double>> rows;
  const auto tp = led1.total_plain();
  const auto tw = led1.total_weighted();
  for (std::size_t n = 0; n < led1.times.size(); ++n)
    rows.push_back({led1.times[n], led1.kinetic[n], led1.grad_plain[n],
                    led1.grad_weighted[n], tp[n], tw[n]});
  const std::string epath = out_path(c, "energy.csv");
  write_csv(epath,
            {"t", "kinetic", "grad_plain", "grad_weighted", "total_plain",
             "total_weighted"},
            rows);
  o.artifacts.push_back(epath);

  const std::string dpath = out_path(c, "drift.csv");
  write_csv(dpath, {"stability_factor", "dt", "drift"},
            {{c.stability_factor, g1.dt, drift1},
             {0.5 * c.stability_factor, g2.dt, drift2}});
  o.artifacts.push_back(dpath);

  finish(o, c);
  return o;
}

ExperimentOutcome run_coupled(const ExperimentConfig& c) {
  ExperimentOutcome o;
  const GridSpec g = grid_from_config(c);
  const SpeedSystem sys = speed_from_config(c, g);
  const SourceData unit = source_from_config(c, g);

  NonlinearProblem prob;
  prob.sys = sys;
  prob.source = scale_source(unit, c.epsilon);
  prob.grid = g;
  const WaveField u = solve_coupled(prob);

  double amp = 0.0;
  for (const auto& s : u.snapshots) amp = std::max(amp, max_abs(s));
  add_line(o, "amplitude-finite", amp, 1e12, amp < 1e12);

  LifespanModel model = default_lifespan_model(sys, g);
  if (c.lifespan_C_s > 0.0) model.C_s = c.lifespan_C_s;
  if (c.lifespan_C_s_prime != 0.0) model.C_s_prime = c.lifespan_C_s_prime;
  const LifespanEstimate est = lifespan_estimate(model, c.epsilon);
  const double cover = est.t_max > 0.0 ? g.T / est.t_max
                                       : std::numeric_limits<double>::infinity();
  add_line(o, "lifespan-covers-horizon", cover, 1.0, cover <= 1.0);

  for (int comp = 0; comp < 3; ++comp) {
    const std::string bin =
        out_path(c, "final_u" + std::to_string(comp + 1) + ".bin");
    write_field_binary(bin, g, u.snapshots.back().comp[comp]);
    o.artifacts.push_back(bin);
    const std::string csv =
        out_path(c, "final_u" + std::to_string(comp + 1) + ".csv");
    write_field_csv(csv, g, u.snapshots.back().comp[comp]);
    o.artifacts.push_back(csv);
  }

  const BoundaryTrace tr = trace(u, g);
  const std::string tpath = out_path(c, "trace.csv");
  write_trace_csv(tpath, tr);
  o.artifacts.push_back(tpath);

  const std::string npath = out_path(c, "norms.csv");
  write_csv(npath, {"s_norm", "c0_l2", "max_amplitude", "trace_norm"},
            {{s_norm(u), c0_l2_norm(u), amp, trace_norm(tr)}});
  o.artifacts.push_back(npath);

  finish(o, c);
  return o;
}

ExperimentOutcome run_picard(const ExperimentConfig& c) {
  ExperimentOutcome o;
  const GridSpec g = grid_from_config(c);
  const SpeedSystem sys = speed_from_config(c, g);
  const SourceData unit = source_from_config(c, g);

  NonlinearProblem prob;
  prob.sys = sys;
  prob.source = scale_source(unit, c.epsilon);
  prob.grid = g;

  const WaveField direct = solve_coupled(prob);
  const PicardSolution pic =
      duhamel_picard(prob, c.picard_tol, c.picard_max_iterations);

  add_line(o, "picard-converged", static_cast<double>(pic.report.iterations),
           static_cast<double>(c.picard_max_iterations), pic.report.converged);

  const double gap = c0_l2_diff(direct, pic.u);
  const double bound =
      std::max(10.0 * c.picard_tol, 1e-6 * c0_l2_norm(direct));
  add_line(o, "picard-direct-gap", gap, bound, gap <= bound);

  const bool contracting =
      pic.report.residuals.size() < 2 || pic.report.contraction_ratio < 1.0;
  add_line(o, "picard-contraction", pic.report.contraction_ratio, 1.0,
           contracting);

  std::vector<std::vector<double>> rows;
  for (std::size_t i = 0; i < pic.report.residuals.size(); ++i)
    rows.push_back({static_cast<double>(i + 1), pic.report.residuals[i]});
  const std::string ppath = out_path(c, "picard.csv");
  write_csv(ppath, {"iteration", "residual"}, rows);
  o.artifacts.push_back(ppath);

  finish(o, c);
  return o;
}

ExperimentOutcome run_parametrix_sweep(const ExperimentConfig& c, int threads) {
  ExperimentOutcome o;
  const GridSpec g = grid_from_config(c);
  const SpeedSystem sys = speed_from_config(c, g);
  const SourceData unit = source_from_config(c, g);

  std::vector<double> eps = c.epsilon_list;
  if (eps.empty()) eps = {0.04, 0.02, 0.01};

  std::vector<ParametrixErrorRecord> recs(eps.size());
  parallel_for(static_cast<int>(eps.size()), threads, [&](int i) {
    const ParametrixBundle b = build_parametrix(sys, unit, eps[i], g);
    recs[i] = parametrix_error(b, sys, unit, g);
  });

  std::vector<double> errs, firsts;
  for (const auto& r : recs) {
    errs.push_back(r.error);
    firsts.push_back(r.first_order);
  }
  const double slope3 = log_log_slope(eps, errs);
  const double slope2 = log_log_slope(eps, firsts);
  add_line(o, "parametrix-order", slope3, 0.4, std::abs(slope3 - 3.0) <= 0.4);
  add_line(o, "first-order-gap", slope2, 0.3, std::abs(slope2 - 2.0) <= 0.3);

  std::vector<std::vector<double>> rows;
  for (const auto& r : recs)
    rows.push_back({r.epsilon, r.error, r.first_order});
  const std::string ppath = out_path(c, "parametrix.csv");
  write_csv(ppath, {"epsilon", "error", "first_order_error"}, rows);
  o.artifacts.push_back(ppath);

  finish(o, c);
  return o;
}

ExperimentOutcome run_recover_lambda(const ExperimentConfig& c, int threads) {
  (void)threads;  // the sweep lives inside recover_linear_map, serial by design
  ExperimentOutcome o;
  const GridSpec g = grid_from_config(c);
  const SpeedSystem sys = speed_from_config(c, g);
  const SourceData unit = source_from_config(c, g);

  std::vector<double> eps = c.epsilon_list;
  if (eps.empty()) eps = {0.04, 0.02, 0.01};

  const RecoveryResult res = recover_linear_map(sys, unit, eps, g);

  add_line(o, "recovery-rate", res.report.fitted_rate, 0.3,
           std::abs(res.report.fitted_rate - 1.0) <= 0.3);
  const double gain =
      res.report.best_single_error > 0.0
          ? res.report.extrapolated_error / res.report.best_single_error
          : 0.0;
  add_line(o, "richardson-improves", gain, 1.0, gain < 1.0);
  add_line(o, "recovery-complete",
           static_cast<double>(res.report.skipped_epsilons.size()), 0.0,
           res.report.complete);

  std::vector<std::vector<double>> rows;
  for (std::size_t i = 0; i < res.report.epsilons.size(); ++i)
    rows.push_back({res.report.epsilons[i], res.report.errors[i]});
  const std::string rpath = out_path(c, "recovery.csv");
  write_csv(rpath, {"epsilon", "error"}, rows);
  o.artifacts.push_back(rpath);

  const std::string tpath = out_path(c, "estimate_trace.csv");
  write_trace_csv(tpath, res.estimate);
  o.artifacts.push_back(tpath);

  finish(o, c);
  return o;
}

ExperimentOutcome run_lifespan(const ExperimentConfig& c) {
  ExperimentOutcome o;
  const GridSpec g = grid_from_config(c);
  const SpeedSystem sys = speed_from_config(c, g);

  LifespanModel model = default_lifespan_model(sys, g);
  if (c.lifespan_C_s > 0.0) model.C_s = c.lifespan_C_s;
  if (c.lifespan_C_s_prime != 0.0) model.C_s_prime = c.lifespan_C_s_prime;

  const LifespanEstimate est = lifespan_estimate(model, c.epsilon);
  add_line(o, "lifespan-positive", est.t_max, 0.0, est.positive);

  const DiameterCheck dchk = diameter_condition(g, sys, model, c.epsilon);
  const double ratio =
      dchk.t_max > 0.0 ? dchk.crossing_time / dchk.t_max
                       : std::numeric_limits<double>::infinity();
  add_line(o, "diameter-condition", ratio, 1.0, dchk.pass);

  const EpsilonThreshold th =
      lifespan_epsilon_threshold(model, dchk.crossing_time);
  add_line(o, "epsilon-threshold", th.epsilon1, 0.0,
           th.found && th.epsilon1 > 0.0);

  std::vector<double> eps = c.epsilon_list;
  if (eps.empty()) eps = {c.epsilon};
  std::vector<std::vector<double>> rows;
  for (double e : eps) {
    const LifespanEstimate le = lifespan_estimate(model, e);
    rows.push_back({e, le.t_max, le.t_closed_form, le.t_envelope});
  }
  const std::string lpath = out_path(c, "lifespan.csv");
  write_csv(lpath, {"epsilon", "t_max", "t_closed_form", "t_envelope"}, rows);
  o.artifacts.push_back(lpath);

  const std::string dpath = out_path(c, "diameter.csv");
  write_csv(dpath, {"crossing_time", "t_max", "epsilon1"},
            {{dchk.crossing_time, dchk.t_max, th.epsilon1}});
  o.artifacts.push_back(dpath);

  finish(o, c);
  return o;
}

ExperimentOutcome run_herglotz(const ExperimentConfig& c) {
  ExperimentOutcome o;
  if (!(c.herglotz_dr > 0.0) || !(c.herglotz_r_max > c.herglotz_dr))
    throw ConfigError("herglotz experiment needs 0 < dr < r_max");
  const std::size_t samples =
      static_cast<std::size_t>(std::lround(c.herglotz_r_max / c.herglotz_dr)) +
      1;
  const std::vector<double> prof =
      radial_speed_from_config(c, samples, c.herglotz_dr);
  const HerglotzResult res = herglotz_check(prof, c.herglotz_dr);
  add_line(o, "herglotz-condition", res.pass ? 1.0 : 0.0, 1.0, res.pass);
  if (!res.pass)
    add_line(o, "herglotz-failure-radius", res.first_failing_radius,
             c.herglotz_r_max, false);

  std::vector<std::vector<double>> rows;
  for (std::size_t i = 0; i < prof.size(); ++i)
    rows.push_back({i * c.herglotz_dr, prof[i]});
  const std::string hpath = out_path(c, "herglotz.csv");
  write_csv(hpath, {"r", "c"}, rows);
  o.artifacts.push_back(hpath);

  finish(o, c);
  return o;
}

}  // namespace

ExperimentOutcome run_experiment(const ExperimentConfig& c, int threads) {
  const int t = threads > 0 ? threads : std::max(1, c.threads);
  switch (c.experiment) {
    case ExperimentKind::validate: return run_validate(c);
    case ExperimentKind::linear_convergence: return run_linear_convergence(c);
    case ExperimentKind::energy: return run_energy(c);
    case ExperimentKind::coupled: return run_coupled(c);
    case ExperimentKind::picard: return run_picard(c);
    case ExperimentKind::parametrix_sweep: return run_parametrix_sweep(c, t);
    case ExperimentKind::recover_lambda: return run_recover_lambda(c, t);
    case ExperimentKind::lifespan: return run_lifespan(c);
    case ExperimentKind::herglotz: return run_herglotz(c);
  }
  throw Error("unreachable experiment kind");
}

}  // namespace wavelab
