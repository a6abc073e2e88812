#pragma once

#include <array>
#include <string>
#include <vector>

#include "wavelab/field.hpp"
#include "wavelab/grid.hpp"

namespace wavelab {

/// Shortest round-trip decimal form of a double ("%.17g").
std::string format_double(double v);

/// Raw field file contents: one-line text header "dim h nx [ny [nz]]",
/// then node values row-major (axis 0 fastest) as little-endian float64.
struct RawField {
  int dim = 1;
  double h = 0.0;
  std::array<int, 3> n{1, 1, 1};
  ScalarField values;
};

void write_field_binary(const std::string& path, const GridSpec& g,
                        const ScalarField& u);
RawField read_field_binary(const std::string& path);

/// CSV dump of a field: header row of coordinate names then "value",
/// one node per line in flat scan order, all numbers "%.17g".
void write_field_csv(const std::string& path, const GridSpec& g,
                     const ScalarField& u);

/// Generic CSV table writer used by the experiment runners.
void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows);

/// Write a text file, creating parent directories as needed.
void write_text(const std::string& path, const std::string& body);

}  // namespace wavelab
