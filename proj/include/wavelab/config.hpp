#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "wavelab/errors.hpp"

namespace wavelab {

enum class ExperimentKind {
  validate,
  linear_convergence,
  energy,
  coupled,
  picard,
  parametrix_sweep,
  recover_lambda,
  lifespan,
  herglotz,
};

std::string to_string(ExperimentKind k);
ExperimentKind experiment_from_string(const std::string& s);

struct SpeedConfig {
  std::string profile = "constant";  // constant | herglotz-bump | radial-decay | file
  double value = 1.0;                // constant
  double amplitude = 0.1;            // bump and decay profiles
  std::array<double, 3> center{0.5, 0.5, 0.5};  // bump center
  double width = 0.15;               // bump width
  double radius = 0.4;               // decay support radius
  std::string path;                  // file profile
  double m0 = 0.0;                   // envelope overrides (0 = derive)
  double m1 = 0.0;
  double R = 0.0;

  bool operator==(const SpeedConfig&) const = default;
};

struct SourceConfig {
  std::string recipe = "standing-mode";  // standing-mode | gaussian-pulse | zero
  double amplitude = 1.0;
  std::array<int, 3> mode{1, 1, 1};
  std::array<double, 3> center{0.5, 0.5, 0.5};
  double width = 0.1;
  double norm_target = 0.0;  // > 0: rescale the unit profile to this size

  bool operator==(const SourceConfig&) const = default;
};

struct ExperimentConfig {
  ExperimentKind experiment = ExperimentKind::validate;
  int dim = 1;
  std::array<double, 3> outer_lo{0.0, 0.0, 0.0};
  std::array<double, 3> outer_hi{1.0, 1.0, 1.0};
  std::array<double, 3> inner_lo{0.25, 0.25, 0.25};
  std::array<double, 3> inner_hi{0.75, 0.75, 0.75};
  double h = 0.01;
  std::vector<double> h_list;        // refinement studies
  double T = 1.0;
  double stability_factor = 0.9;
  SpeedConfig speed;
  SourceConfig source;
  double epsilon = 0.01;
  std::vector<double> epsilon_list;  // sweeps
  double picard_tol = 1e-12;
  int picard_max_iterations = 50;
  double lifespan_C_s = 0.0;         // 0 = derive from the speed system
  double lifespan_C_s_prime = 0.0;
  double herglotz_dr = 1e-3;
  double herglotz_r_max = 1.0;
  std::string output_dir = "out";
  std::uint64_t seed = 1;
  int threads = 1;

  bool operator==(const ExperimentConfig&) const = default;
};

/// Parse the flat "section.key = value" format. '#' starts a comment, blank
/// lines are skipped, unknown keys and malformed values raise ConfigError
/// with the offending line number.
ExperimentConfig parse_config(const std::string& text);

/// Load and parse a config file.
ExperimentConfig load_config(const std::string& path);

/// Canonical text form; parse_config(emit_config(c)) == c.
std::string emit_config(const ExperimentConfig& c);

}  // namespace wavelab
