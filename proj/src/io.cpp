#include "wavelab/io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace wavelab {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

void ensure_parent(const std::string& path) {
  const auto parent = std::filesystem::path(path).parent_path();
  if (!parent.empty()) std::filesystem::create_directories(parent);
}

}  // namespace

void write_field_binary(const std::string& path, const GridSpec& g,
                        const ScalarField& u) {
  check_shape(u, g, "write_field_binary");
  ensure_parent(path);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << g.dim << ' ' << format_double(g.h);
  for (int a = 0; a < g.dim; ++a) out << ' ' << g.n[a];
  out << '\n';
  out.write(reinterpret_cast<const char*>(u.data()),
            static_cast<std::streamsize>(u.size() * sizeof(double)));
  if (!out) throw IoError("write failed for " + path);
}

RawField read_field_binary(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::string header;
  if (!std::getline(in, header)) throw IoError("missing header in " + path);
  std::istringstream hs(header);
  RawField f;
  if (!(hs >> f.dim >> f.h)) throw IoError("malformed header in " + path);
  if (f.dim < 1 || f.dim > kMaxDim)
    throw IoError("unsupported dim in " + path);
  std::size_t count = 1;
  for (int a = 0; a < f.dim; ++a) {
    if (!(hs >> f.n[a]) || f.n[a] < 1)
      throw IoError("malformed node counts in " + path);
    count *= static_cast<std::size_t>(f.n[a]);
  }
  f.values.resize(count);
  in.read(reinterpret_cast<char*>(f.values.data()),
          static_cast<std::streamsize>(count * sizeof(double)));
  if (static_cast<std::size_t>(in.gcount()) != count * sizeof(double))
    throw IoError("truncated field data in " + path);
  return f;
}

void write_field_csv(const std::string& path, const GridSpec& g,
                     const ScalarField& u) {
  check_shape(u, g, "write_field_csv");
  ensure_parent(path);
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path + " for writing");
  static const char* names[] = {"x", "y", "z"};
  for (int a = 0; a < g.dim; ++a) out << names[a] << ',';
  out << "value\n";
  for (std::size_t p = 0; p < u.size(); ++p) {
    const auto x = g.coords(p);
    for (int a = 0; a < g.dim; ++a) out << format_double(x[a]) << ',';
    out << format_double(u[p]) << '\n';
  }
  if (!out) throw IoError("write failed for " + path);
}

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows) {
  ensure_parent(path);
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path + " for writing");
  for (std::size_t i = 0; i < header.size(); ++i)
    out << header[i] << (i + 1 < header.size() ? ',' : '\n');
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i)
      out << format_double(row[i]) << (i + 1 < row.size() ? ',' : '\n');
  }
  if (!out) throw IoError("write failed for " + path);
}

void write_text(const std::string& path, const std::string& body) {
  ensure_parent(path);
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << body;
  if (!out) throw IoError("write failed for " + path);
}

}  // namespace wavelab
