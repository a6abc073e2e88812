#pragma once

#include <stdexcept>
#include <string>

namespace wavelab {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid grid geometry, misaligned boxes, bad axis extents.
class GridError : public Error {
 public:
  using Error::Error;
};

/// Field size does not match the grid it is used with.
class FieldShapeError : public Error {
 public:
  using Error::Error;
};

/// Sobolev order outside the supported range 0..3.
class UnsupportedOrderError : public Error {
 public:
  using Error::Error;
};

/// CFL bound violated for the requested time step.
class StabilityError : public Error {
 public:
  explicit StabilityError(const std::string& what, double dt = 0.0,
                          double limit = 0.0)
      : Error(what), dt(dt), limit(limit) {}
  double dt;
  double limit;
};

/// Solution exceeded the finite-amplitude sentinel during time stepping.
class BlowUpError : public Error {
 public:
  explicit BlowUpError(const std::string& what, int step = -1,
                       double amplitude = 0.0)
      : Error(what), step(step), amplitude(amplitude) {}
  int step;
  double amplitude;
};

/// Config file cannot be parsed or fails validation.
class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what, int line = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line(line) {}
  int line;
};

/// File I/O failure or malformed on-disk field data.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace wavelab
