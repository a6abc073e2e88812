#include <cstdio>
#include <fstream>
#include <string>

#include "doctest.h"
#include "wavelab/config.hpp"

using namespace wavelab;

namespace {

int thrown_line(const std::string& text) {
  try {
    parse_config(text);
  } catch (const ConfigError& e) {
    return e.line;
  }
  return -1;
}

}  // namespace

TEST_SUITE("config") {

TEST_CASE("experiment names round trip") {
  for (int k = 0; k <= static_cast<int>(ExperimentKind::herglotz); ++k) {
    const auto kind = static_cast<ExperimentKind>(k);
    CHECK(experiment_from_string(to_string(kind)) == kind);
  }
  CHECK(to_string(ExperimentKind::parametrix_sweep) == "parametrix-sweep");
  CHECK_THROWS_AS(experiment_from_string("no-such-study"), ConfigError);
}

TEST_CASE("minimal config gets the documented defaults") {
  const ExperimentConfig c = parse_config("experiment = validate\n");
  CHECK(c.experiment == ExperimentKind::validate);
  CHECK(c.dim == 1);
  CHECK(c.h == 0.01);
  CHECK(c.T == 1.0);
  CHECK(c.stability_factor == 0.9);
  CHECK(c.outer_lo == (std::array<double, 3>{0.0, 0.0, 0.0}));
  CHECK(c.inner_hi == (std::array<double, 3>{0.75, 0.75, 0.75}));
  CHECK(c.speed.profile == "constant");
  CHECK(c.speed.value == 1.0);
  CHECK(c.source.recipe == "standing-mode");
  CHECK(c.epsilon == 0.01);
  CHECK(c.picard_tol == 1e-12);
  CHECK(c.picard_max_iterations == 50);
  CHECK(c.herglotz_dr == 1e-3);
  CHECK(c.output_dir == "out");
  CHECK(c.seed == 1);
  CHECK(c.threads == 1);
  CHECK(c.h_list.empty());
  CHECK(c.epsilon_list.empty());
}

TEST_CASE("emit and parse are inverse on a fully customized config") {
  ExperimentConfig c;
  c.experiment = ExperimentKind::parametrix_sweep;
  c.dim = 3;
  c.outer_lo = {-1.0, -2.0, 0.5};
  c.outer_hi = {1.0, 2.0, 1.5};
  c.inner_lo = {-0.25, -0.5, 0.75};
  c.inner_hi = {0.25, 0.5, 1.25};
  c.h = 1.0 / 48;
  c.h_list = {0.25, 0.125, 0.0625};
  c.T = 0.7;
  c.stability_factor = 0.55;
  c.speed.profile = "herglotz-bump";
  c.speed.value = 1.3;
  c.speed.amplitude = 0.07;
  c.speed.center = {0.1, -0.2, 1.0};
  c.speed.width = 0.22;
  c.speed.radius = 0.31;
  c.speed.path = "fields/c2.bin";
  c.speed.m0 = 0.9;
  c.speed.m1 = 1.4;
  c.speed.R = 0.45;
  c.source.recipe = "gaussian-pulse";
  c.source.amplitude = 2.5;
  c.source.mode = {2, 3, 1};
  c.source.center = {0.0, 0.1, 0.9};
  c.source.width = 0.17;
  c.source.norm_target = 0.9;
  c.epsilon = 1.0 / 3.0;
  c.epsilon_list = {0.04, 0.02, 0.01};
  c.picard_tol = 3e-11;
  c.picard_max_iterations = 17;
  c.lifespan_C_s = 1.25;
  c.lifespan_C_s_prime = 0.693;
  c.herglotz_dr = 2e-4;
  c.herglotz_r_max = 0.8;
  c.output_dir = "runs/sweep_3";
  c.seed = 987654321012345ULL;
  c.threads = 4;

  const std::string text = emit_config(c);
  const ExperimentConfig back = parse_config(text);
  CHECK(back == c);
  CHECK(emit_config(back) == text);  // canonical form is a fixed point
}

TEST_CASE("comments, blank lines and spacing are tolerated") {
  const ExperimentConfig c = parse_config(
      "# leading comment\n"
      "\n"
      "   experiment = coupled   # trailing comment\n"
      "\tgrid.h = 0.02\n"
      "grid.outer_hi = 2 , 2 , 2 # spaced list\n"
      "run.epsilon_list = 0.1,0.05\n");
  CHECK(c.experiment == ExperimentKind::coupled);
  CHECK(c.h == 0.02);
  CHECK(c.outer_hi == (std::array<double, 3>{2.0, 2.0, 2.0}));
  CHECK(c.epsilon_list == (std::vector<double>{0.1, 0.05}));
}

TEST_CASE("partial arrays update the leading entries only") {
  const ExperimentConfig c = parse_config(
      "experiment = coupled\n"
      "source.mode = 4,2\n");
  CHECK(c.source.mode == (std::array<int, 3>{4, 2, 1}));
}

TEST_CASE("errors carry the offending line number") {
  CHECK(thrown_line("experiment = validate\n\nbogus.key = 1\n") == 3);
  CHECK(thrown_line("grid.h = abc\n") == 1);
  CHECK(thrown_line("experiment = validate\ngrid.dim = 4\n") == 2);
  CHECK(thrown_line("experiment = validate\ngrid.h\n") == 2);
  CHECK(thrown_line("experiment = validate\ngrid.h =\n") == 2);
  CHECK(thrown_line("experiment = validate\n= 3\n") == 2);
  CHECK(thrown_line("experiment = typo-study\n") == 1);
  CHECK(thrown_line("experiment = validate\nrun.threads = 0\n") == 2);
  CHECK(thrown_line("experiment = validate\nspeed.profile = warp\n") == 2);
  CHECK(thrown_line("experiment = validate\nsource.recipe = ricker\n") == 2);
  CHECK(thrown_line("experiment = validate\ngrid.outer_lo = 1,2,3,4\n") == 2);
  CHECK(thrown_line("experiment = validate\nrun.picard_max_iterations = x\n") ==
        2);

  // Missing experiment key has no line to point at.
  try {
    parse_config("grid.h = 0.5\n");
    CHECK(false);
  } catch (const ConfigError& e) {
    CHECK(e.line == 0);
  }
}

TEST_CASE("error text names the line") {
  try {
    parse_config("experiment = validate\nbogus = 1\n");
    CHECK(false);
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    CHECK(std::string(e.what()).find("bogus") != std::string::npos);
  }
}

TEST_CASE("configs load from disk") {
  const std::string path = "test_config_tmp.cfg";
  {
    std::ofstream out(path);
    out << "experiment = herglotz\nrun.herglotz_dr = 0.002\n";
  }
  const ExperimentConfig c = load_config(path);
  CHECK(c.experiment == ExperimentKind::herglotz);
  CHECK(c.herglotz_dr == 0.002);
  std::remove(path.c_str());

  CHECK_THROWS_AS(load_config("does_not_exist_anywhere.cfg"), ConfigError);
}

}  // TEST_SUITE
