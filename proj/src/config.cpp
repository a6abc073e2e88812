#include "wavelab/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "wavelab/io.hpp"

namespace wavelab {

std::string to_string(ExperimentKind k) {
  switch (k) {
    case ExperimentKind::validate: return "validate";
    case ExperimentKind::linear_convergence: return "linear-convergence";
    case ExperimentKind::energy: return "energy";
    case ExperimentKind::coupled: return "coupled";
    case ExperimentKind::picard: return "picard";
    case ExperimentKind::parametrix_sweep: return "parametrix-sweep";
    case ExperimentKind::recover_lambda: return "recover-lambda";
    case ExperimentKind::lifespan: return "lifespan";
    case ExperimentKind::herglotz: return "herglotz";
  }
  throw Error("unreachable experiment kind");
}

ExperimentKind experiment_from_string(const std::string& s) {
  for (int k = 0; k <= static_cast<int>(ExperimentKind::herglotz); ++k)
    if (to_string(static_cast<ExperimentKind>(k)) == s)
      return static_cast<ExperimentKind>(k);
  throw ConfigError("unknown experiment '" + s + "'");
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& v, int line) {
  char* end = nullptr;
  const std::string t = trim(v);
  const double x = std::strtod(t.c_str(), &end);
  if (t.empty() || end != t.c_str() + t.size())
    throw ConfigError("expected a number, got '" + t + "'", line);
  return x;
}

long long parse_int(const std::string& v, int line) {
  char* end = nullptr;
  const std::string t = trim(v);
  const long long x = std::strtoll(t.c_str(), &end, 10);
  if (t.empty() || end != t.c_str() + t.size())
    throw ConfigError("expected an integer, got '" + t + "'", line);
  return x;
}

std::vector<std::string> split_list(const std::string& v) {
  std::vector<std::string> items;
  std::string cur;
  for (char ch : v) {
    if (ch == ',') {
      items.push_back(trim(cur));
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  items.push_back(trim(cur));
  return items;
}

std::vector<double> parse_double_list(const std::string& v, int line) {
  std::vector<double> out;
  for (const auto& item : split_list(v)) out.push_back(parse_double(item, line));
  return out;
}

template <typename T, std::size_t N>
void fill_array(std::array<T, N>& dst, const std::vector<double>& vals,
                int line) {
  if (vals.empty() || vals.size() > N)
    throw ConfigError("expected 1 to " + std::to_string(N) + " values", line);
  for (std::size_t i = 0; i < vals.size(); ++i) dst[i] = static_cast<T>(vals[i]);
}

std::string join(const std::vector<double>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += format_double(v[i]);
  }
  return s;
}

template <std::size_t N>
std::string join(const std::array<double, N>& v) {
  std::string s;
  for (std::size_t i = 0; i < N; ++i) {
    if (i) s += ",";
    s += format_double(v[i]);
  }
  return s;
}

template <std::size_t N>
std::string join(const std::array<int, N>& v) {
  std::string s;
  for (std::size_t i = 0; i < N; ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s;
}

}  // namespace

ExperimentConfig parse_config(const std::string& text) {
  ExperimentConfig c;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  bool has_experiment = false;

  while (std::getline(in, raw)) {
    ++line;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw = raw.substr(0, hash);
    const std::string s = trim(raw);
    if (s.empty()) continue;
    const auto eq = s.find('=');
    if (eq == std::string::npos)
      throw ConfigError("expected 'key = value'", line);
    const std::string key = trim(s.substr(0, eq));
    const std::string val = trim(s.substr(eq + 1));
    if (key.empty()) throw ConfigError("empty key", line);
    if (val.empty()) throw ConfigError("empty value for '" + key + "'", line);

    if (key == "experiment") {
      try {
        c.experiment = experiment_from_string(val);
      } catch (const ConfigError& e) {
        throw ConfigError(e.what(), line);
      }
      has_experiment = true;
    } else if (key == "grid.dim") {
      const long long d = parse_int(val, line);
      if (d < 1 || d > 3) throw ConfigError("grid.dim must be 1, 2 or 3", line);
      c.dim = static_cast<int>(d);
    } else if (key == "grid.outer_lo") {
      fill_array(c.outer_lo, parse_double_list(val, line), line);
    } else if (key == "grid.outer_hi") {
      fill_array(c.outer_hi, parse_double_list(val, line), line);
    } else if (key == "grid.inner_lo") {
      fill_array(c.inner_lo, parse_double_list(val, line), line);
    } else if (key == "grid.inner_hi") {
      fill_array(c.inner_hi, parse_double_list(val, line), line);
    } else if (key == "grid.h") {
      c.h = parse_double(val, line);
    } else if (key == "grid.h_list") {
      c.h_list = parse_double_list(val, line);
    } else if (key == "grid.T") {
      c.T = parse_double(val, line);
    } else if (key == "grid.stability_factor") {
      c.stability_factor = parse_double(val, line);
    } else if (key == "speed.profile") {
      if (val != "constant" && val != "herglotz-bump" &&
          val != "radial-decay" && val != "file")
        throw ConfigError("unknown speed profile '" + val + "'", line);
      c.speed.profile = val;
    } else if (key == "speed.value") {
      c.speed.value = parse_double(val, line);
    } else if (key == "speed.amplitude") {
      c.speed.amplitude = parse_double(val, line);
    } else if (key == "speed.center") {
      fill_array(c.speed.center, parse_double_list(val, line), line);
    } else if (key == "speed.width") {
      c.speed.width = parse_double(val, line);
    } else if (key == "speed.radius") {
      c.speed.radius = parse_double(val, line);
    } else if (key == "speed.path") {
      c.speed.path = val;
    } else if (key == "speed.m0") {
      c.speed.m0 = parse_double(val, line);
    } else if (key == "speed.m1") {
      c.speed.m1 = parse_double(val, line);
    } else if (key == "speed.R") {
      c.speed.R = parse_double(val, line);
    } else if (key == "source.recipe") {
      if (val != "standing-mode" && val != "gaussian-pulse" && val != "zero")
        throw ConfigError("unknown source recipe '" + val + "'", line);
      c.source.recipe = val;
    } else if (key == "source.amplitude") {
      c.source.amplitude = parse_double(val, line);
    } else if (key == "source.mode") {
      fill_array(c.source.mode, parse_double_list(val, line), line);
    } else if (key == "source.center") {
      fill_array(c.source.center, parse_double_list(val, line), line);
    } else if (key == "source.width") {
      c.source.width = parse_double(val, line);
    } else if (key == "source.norm_target") {
      c.source.norm_target = parse_double(val, line);
    } else if (key == "run.epsilon") {
      c.epsilon = parse_double(val, line);
    } else if (key == "run.epsilon_list") {
      c.epsilon_list = parse_double_list(val, line);
    } else if (key == "run.picard_tol") {
      c.picard_tol = parse_double(val, line);
    } else if (key == "run.picard_max_iterations") {
      c.picard_max_iterations = static_cast<int>(parse_int(val, line));
    } else if (key == "run.lifespan_C_s") {
      c.lifespan_C_s = parse_double(val, line);
    } else if (key == "run.lifespan_C_s_prime") {
      c.lifespan_C_s_prime = parse_double(val, line);
    } else if (key == "run.herglotz_dr") {
      c.herglotz_dr = parse_double(val, line);
    } else if (key == "run.herglotz_r_max") {
      c.herglotz_r_max = parse_double(val, line);
    } else if (key == "run.output_dir") {
      c.output_dir = val;
    } else if (key == "run.seed") {
      c.seed = static_cast<std::uint64_t>(parse_int(val, line));
    } else if (key == "run.threads") {
      c.threads = static_cast<int>(parse_int(val, line));
      if (c.threads < 1) throw ConfigError("run.threads must be >= 1", line);
    } else {
      throw ConfigError("unknown key '" + key + "'", line);
    }
  }
  if (!has_experiment) throw ConfigError("missing required key 'experiment'");
  return c;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path);
  std::ostringstream body;
  body << in.rdbuf();
  return parse_config(body.str());
}

std::string emit_config(const ExperimentConfig& c) {
  std::ostringstream out;
  out << "experiment = " << to_string(c.experiment) << '\n';
  out << "grid.dim = " << c.dim << '\n';
  out << "grid.outer_lo = " << join(c.outer_lo) << '\n';
  out << "grid.outer_hi = " << join(c.outer_hi) << '\n';
  out << "grid.inner_lo = " << join(c.inner_lo) << '\n';
  out << "grid.inner_hi = " << join(c.inner_hi) << '\n';
  out << "grid.h = " << format_double(c.h) << '\n';
  if (!c.h_list.empty()) out << "grid.h_list = " << join(c.h_list) << '\n';
  out << "grid.T = " << format_double(c.T) << '\n';
  out << "grid.stability_factor = " << format_double(c.stability_factor)
      << '\n';
  out << "speed.profile = " << c.speed.profile << '\n';
  out << "speed.value = " << format_double(c.speed.value) << '\n';
  out << "speed.amplitude = " << format_double(c.speed.amplitude) << '\n';
  out << "speed.center = " << join(c.speed.center) << '\n';
  out << "speed.width = " << format_double(c.speed.width) << '\n';
  out << "speed.radius = " << format_double(c.speed.radius) << '\n';
  if (!c.speed.path.empty()) out << "speed.path = " << c.speed.path << '\n';
  out << "speed.m0 = " << format_double(c.speed.m0) << '\n';
  out << "speed.m1 = " << format_double(c.speed.m1) << '\n';
  out << "speed.R = " << format_double(c.speed.R) << '\n';
  out << "source.recipe = " << c.source.recipe << '\n';
  out << "source.amplitude = " << format_double(c.source.amplitude) << '\n';
  out << "source.mode = " << join(c.source.mode) << '\n';
  out << "source.center = " << join(c.source.center) << '\n';
  out << "source.width = " << format_double(c.source.width) << '\n';
  out << "source.norm_target = " << format_double(c.source.norm_target)
      << '\n';
  out << "run.epsilon = " << format_double(c.epsilon) << '\n';
  if (!c.epsilon_list.empty())
    out << "run.epsilon_list = " << join(c.epsilon_list) << '\n';
  out << "run.picard_tol = " << format_double(c.picard_tol) << '\n';
  out << "run.picard_max_iterations = " << c.picard_max_iterations << '\n';
  out << "run.lifespan_C_s = " << format_double(c.lifespan_C_s) << '\n';
  out << "run.lifespan_C_s_prime = " << format_double(c.lifespan_C_s_prime)
      << '\n';
  out << "run.herglotz_dr = " << format_double(c.herglotz_dr) << '\n';
  out << "run.herglotz_r_max = " << format_double(c.herglotz_r_max) << '\n';
  out << "run.output_dir = " << c.output_dir << '\n';
  out << "run.seed = " << c.seed << '\n';
  out << "run.threads = " << c.threads << '\n';
  return out.str();
}

}  // namespace wavelab
