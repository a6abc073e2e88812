#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "wavelab/config.hpp"
#include "wavelab/errors.hpp"
#include "wavelab/experiments.hpp"
#include "wavelab/linear.hpp"

namespace {

enum ExitCode {
  kOk = 0,
  kUsage = 1,
  kConfig = 2,
  kStability = 3,
  kBlowUp = 4,
  kCriterion = 5,
};

int resolve_threads(int cli_threads) {
  if (cli_threads > 0) return cli_threads;
  if (const char* env = std::getenv("WAVELAB_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  return 0;  // fall back to the config value
}

int run_command(const std::string& config_path, const std::string& out_dir,
                int threads) {
  wavelab::ExperimentConfig cfg = wavelab::load_config(config_path);
  if (!out_dir.empty()) cfg.output_dir = out_dir;
  const wavelab::ExperimentOutcome outcome =
      wavelab::run_experiment(cfg, resolve_threads(threads));
  std::cout << wavelab::format_summary(outcome.criteria);
  for (const auto& a : outcome.artifacts) std::cout << "wrote " << a << '\n';
  return outcome.all_pass ? kOk : kCriterion;
}

int validate_command(const std::string& config_path) {
  wavelab::ExperimentConfig cfg = wavelab::load_config(config_path);
  // Dry-run the geometry and data construction without solving.
  const wavelab::GridSpec g = wavelab::grid_from_config(cfg);
  const wavelab::SpeedSystem sys = wavelab::speed_from_config(cfg, g);
  for (const auto& f : sys.c) {
    const wavelab::SpeedViolation v = wavelab::validate_speed(f, g);
    if (!v.pass) {
      std::cout << "invalid: " << v.reason << " at node " << v.node << '\n';
      return kConfig;
    }
  }
  wavelab::source_from_config(cfg, g);
  wavelab::check_cfl(sys.max_value(), g);
  std::cout << "ok: " << wavelab::to_string(cfg.experiment) << ", dim "
            << g.dim << ", " << g.node_count() << " nodes, " << g.n_steps
            << " steps\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"coupled semi-linear wave laboratory"};
  app.require_subcommand(1);

  std::string config_path, out_dir;
  int threads = 0;

  CLI::App* run = app.add_subcommand("run", "run an experiment config");
  run->add_option("config", config_path, "experiment config file")->required();
  run->add_option("--out", out_dir, "output directory override");
  run->add_option("--threads", threads, "worker threads for sweeps");

  std::string validate_path;
  CLI::App* val = app.add_subcommand("validate", "check a config and exit");
  val->add_option("config", validate_path, "experiment config file")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (run->parsed()) return run_command(config_path, out_dir, threads);
    return validate_command(validate_path);
  } catch (const wavelab::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfig;
  } catch (const wavelab::StabilityError& e) {
    std::cerr << "stability error: " << e.what() << '\n';
    return kStability;
  } catch (const wavelab::BlowUpError& e) {
    std::cerr << "blow-up: " << e.what() << '\n';
    return kBlowUp;
  } catch (const wavelab::GridError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfig;
  } catch (const wavelab::IoError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfig;
  } catch (const wavelab::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
}
