#pragma once

#include <string>
#include <vector>

#include "wavelab/config.hpp"
#include "wavelab/grid.hpp"
#include "wavelab/source.hpp"
#include "wavelab/speed.hpp"

namespace wavelab {

/// One summary line: "name, value, threshold, pass|fail".
struct CriterionLine {
  std::string name;
  double value = 0.0;
  double threshold = 0.0;
  bool pass = false;
};

struct ExperimentOutcome {
  std::vector<CriterionLine> criteria;
  std::vector<std::string> artifacts;  // paths written under output_dir
  bool all_pass = true;
};

/// Build the grid described by a config.
GridSpec grid_from_config(const ExperimentConfig& c);
GridSpec grid_from_config(const ExperimentConfig& c, double h_override);

/// Build the three-component speed system. The bump profile perturbs only
/// the second component (the other two stay at unit speed); the remaining
/// profiles apply to all three.
SpeedSystem speed_from_config(const ExperimentConfig& c, const GridSpec& g);

/// Build the unit-size data profile (epsilon = 1), normalized when
/// source.norm_target > 0.
SourceData source_from_config(const ExperimentConfig& c, const GridSpec& g);

/// Radial speed profile c(r) for the herglotz experiment.
std::vector<double> radial_speed_from_config(const ExperimentConfig& c,
                                             std::size_t samples, double dr);

/// Run one experiment, writing artifacts under c.output_dir. `threads`
/// overrides c.threads when positive. Throws the library's error types;
/// the CLI maps them to exit codes.
ExperimentOutcome run_experiment(const ExperimentConfig& c, int threads = 0);

std::string format_summary(const std::vector<CriterionLine>& criteria);

}  // namespace wavelab
