#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wavelab/config.hpp"
#include "wavelab/experiments.hpp"
#include "wavelab/grid.hpp"
#include "wavelab/herglotz.hpp"
#include "wavelab/lifespan.hpp"
#include "wavelab/linear.hpp"
#include "wavelab/nonlinear.hpp"
#include "wavelab/norms.hpp"
#include "wavelab/parametrix.hpp"
#include "wavelab/profiles.hpp"
#include "wavelab/recovery.hpp"
#include "wavelab/trace.hpp"

namespace py = pybind11;
using namespace wavelab;

namespace {

GridSpec py_make_grid(int dim, const std::vector<std::pair<double, double>>& outer,
                      const std::vector<std::pair<double, double>>& inner,
                      double h, double T, double stability_factor) {
  std::vector<AxisInterval> o, i;
  for (const auto& [lo, hi] : outer) o.push_back({lo, hi});
  for (const auto& [lo, hi] : inner) i.push_back({lo, hi});
  return make_grid(dim, o, i, h, T, stability_factor);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "numerical core for the coupled semi-linear wave laboratory";

  py::register_exception<ConfigError>(m, "ConfigError");
  py::register_exception<StabilityError>(m, "StabilityError");
  py::register_exception<BlowUpError>(m, "BlowUpError");

  py::class_<GridSpec>(m, "GridSpec")
      .def_readonly("dim", &GridSpec::dim)
      .def_readonly("h", &GridSpec::h)
      .def_readonly("dt", &GridSpec::dt)
      .def_readonly("T", &GridSpec::T)
      .def_readonly("n_steps", &GridSpec::n_steps)
      .def("node_count", &GridSpec::node_count)
      .def("inner_diameter", &GridSpec::inner_diameter);

  m.def("make_grid", &py_make_grid, py::arg("dim"), py::arg("outer"),
        py::arg("inner"), py::arg("h"), py::arg("T"),
        py::arg("stability_factor") = 0.9);

  py::class_<SpeedField>(m, "SpeedField")
      .def_readonly("m0", &SpeedField::m0)
      .def_readonly("m1", &SpeedField::m1)
      .def_readonly("R", &SpeedField::R)
      .def_readonly("values", &SpeedField::values);

  py::class_<SpeedSystem>(m, "SpeedSystem")
      .def(py::init<>())
      .def("max_value", &SpeedSystem::max_value)
      .def("set_component",
           [](SpeedSystem& s, int i, const SpeedField& f) { s.c.at(i) = f; });

  m.def("make_constant_speed", &make_constant_speed);
  m.def("make_bump_speed", &make_bump_speed);
  m.def("make_radial_decay_speed", &make_radial_decay_speed);
  m.def("validate_speed", [](const SpeedField& c, const GridSpec& g) {
    const SpeedViolation v = validate_speed(c, g);
    return py::make_tuple(v.pass, v.reason, v.node, v.value);
  });

  m.def("sobolev_norm",
        [](const std::vector<double>& u, const GridSpec& g, int order) {
          return sobolev_norm(u, g, SobolevOrder(order));
        });

  m.def("herglotz_check",
        [](const std::vector<double>& c_of_r, double dr, double tol) {
          const HerglotzResult r = herglotz_check(c_of_r, dr, tol);
          return py::make_tuple(r.pass, r.first_failing_radius);
        },
        py::arg("c_of_r"), py::arg("dr"), py::arg("tol") = 1e-10);

  py::class_<SourceData>(m, "SourceData");
  m.def("make_standing_mode_source", &make_standing_mode_source);
  m.def("make_pulse_source", &make_pulse_source);
  m.def("normalize_source", &normalize_source);
  m.def("scale_source", &scale_source);
  m.def("base_norm", &base_norm);

  py::class_<WaveField>(m, "WaveField")
      .def("steps", [](const WaveField& u) { return u.snapshots.size(); })
      .def("snapshot",
           [](const WaveField& u, int n, int comp) {
             return u.snapshots.at(n).comp.at(comp);
           });

  m.def("solve_system_linear", &solve_system_linear);
  m.def("s_norm", &s_norm);
  m.def("s_norm_diff", &s_norm_diff);

  py::class_<NonlinearProblem>(m, "NonlinearProblem")
      .def(py::init<>())
      .def_readwrite("sys", &NonlinearProblem::sys)
      .def_readwrite("source", &NonlinearProblem::source)
      .def_readwrite("grid", &NonlinearProblem::grid)
      .def_readwrite("coupling_scale", &NonlinearProblem::coupling_scale);

  m.def("solve_coupled", &solve_coupled);
  m.def("duhamel_picard", [](const NonlinearProblem& p, double tol, int iters) {
    const PicardSolution s = duhamel_picard(p, tol, iters);
    return py::make_tuple(s.u, s.report.iterations, s.report.converged,
                          s.report.residuals);
  });

  py::class_<ParametrixBundle>(m, "ParametrixBundle")
      .def_readonly("w1", &ParametrixBundle::w1)
      .def_readonly("w2", &ParametrixBundle::w2)
      .def_readonly("w", &ParametrixBundle::w)
      .def_readonly("epsilon", &ParametrixBundle::epsilon);

  m.def("build_parametrix", &build_parametrix);
  m.def("parametrix_error",
        [](const ParametrixBundle& b, const SpeedSystem& sys,
           const SourceData& f1, const GridSpec& g) {
          const ParametrixErrorRecord r = parametrix_error(b, sys, f1, g);
          return py::make_tuple(r.epsilon, r.error, r.first_order);
        });

  py::class_<BoundaryTrace>(m, "BoundaryTrace")
      .def_readonly("weight", &BoundaryTrace::weight)
      .def("node_count",
           [](const BoundaryTrace& t) { return t.nodes.size(); });
  m.def("lambda_map", &lambda_map, py::arg("sys"), py::arg("f"), py::arg("g"),
        py::arg("coupling_scale") = 1.0);
  m.def("lambda_lin_map", &lambda_lin_map);
  m.def("trace_norm", &trace_norm);
  m.def("trace_diff", &trace_diff);
  m.def("recover_linear_map",
        [](const SpeedSystem& sys, const SourceData& f1,
           const std::vector<double>& eps, const GridSpec& g) {
          const RecoveryResult r = recover_linear_map(sys, f1, eps, g);
          return py::make_tuple(r.report.epsilons, r.report.errors,
                                r.report.fitted_rate,
                                r.report.extrapolated_error);
        });

  m.def("lifespan_estimate", [](double C_s, double C_s_prime, double eps) {
    LifespanModel model;
    model.C_s = C_s;
    model.C_s_prime = C_s_prime;
    const LifespanEstimate e = lifespan_estimate(model, eps);
    return py::make_tuple(e.t_max, e.positive);
  });

  m.def("parse_config", &parse_config);
  m.def("emit_config", &emit_config);
  py::class_<ExperimentConfig>(m, "ExperimentConfig")
      .def_readwrite("output_dir", &ExperimentConfig::output_dir)
      .def_readwrite("epsilon", &ExperimentConfig::epsilon)
      .def("experiment_name",
           [](const ExperimentConfig& c) { return to_string(c.experiment); })
      .def("__eq__",
           [](const ExperimentConfig& a, const ExperimentConfig& b) {
             return a == b;
           },
           py::is_operator());
  m.def("run_experiment",
        [](const ExperimentConfig& c, int threads) {
          const ExperimentOutcome o = run_experiment(c, threads);
          py::list lines;
          for (const auto& cl : o.criteria)
            lines.append(py::make_tuple(cl.name, cl.value, cl.threshold,
                                        cl.pass));
          return py::make_tuple(o.all_pass, lines, o.artifacts);
        },
        py::arg("config"), py::arg("threads") = 0);
}
