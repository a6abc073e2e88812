#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

#include "doctest.h"
#include "wavelab/field.hpp"
#include "wavelab/grid.hpp"
#include "wavelab/io.hpp"

using namespace wavelab;

namespace {

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("binary field round trip preserves every bit") {
  const GridSpec g = make_grid(2, {{0.0, 1.0}, {0.0, 1.0}},
                               {{0.25, 0.75}, {0.25, 0.75}}, 1.0 / 16, 0.5,
                               0.9);
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> dist(-5.0, 5.0);
  ScalarField u(g.node_count());
  for (auto& v : u) v = dist(rng);

  const std::string path = temp_path("wavelab_io_roundtrip.bin");
  write_field_binary(path, g, u);
  const RawField raw = read_field_binary(path);
  CHECK(raw.dim == 2);
  CHECK(raw.n[0] == g.n[0]);
  CHECK(raw.n[1] == g.n[1]);
  CHECK(raw.h == g.h);
  REQUIRE(raw.values.size() == u.size());
  for (std::size_t p = 0; p < u.size(); ++p) CHECK(raw.values[p] == u[p]);
  std::remove(path.c_str());
}

TEST_CASE("binary header is a readable text line") {
  const GridSpec g = make_grid(1, {{0.0, 1.0}}, {{0.25, 0.75}}, 0.25, 1.0, 0.9);
  const ScalarField u(g.node_count(), 1.5);
  const std::string path = temp_path("wavelab_io_header.bin");
  write_field_binary(path, g, u);
  std::ifstream in(path, std::ios::binary);
  std::string header;
  std::getline(in, header);
  CHECK(header == "1 0.25 5");
  std::remove(path.c_str());
}

TEST_CASE("truncated payload is rejected") {
  const std::string path = temp_path("wavelab_io_truncated.bin");
  write_text(path, "1 0.25 5\nshort");
  CHECK_THROWS_AS(read_field_binary(path), IoError);
  std::remove(path.c_str());
}

TEST_CASE("malformed header is rejected") {
  const std::string path = temp_path("wavelab_io_badheader.bin");
  write_text(path, "zebra\n");
  CHECK_THROWS_AS(read_field_binary(path), IoError);
  write_text(path, "7 0.25 5\n");
  CHECK_THROWS_AS(read_field_binary(path), IoError);
  std::remove(path.c_str());
}

TEST_CASE("missing file is rejected") {
  CHECK_THROWS_AS(read_field_binary(temp_path("wavelab_io_missing.bin")),
                  IoError);
}

TEST_CASE("field csv lists coordinates then value") {
  const GridSpec g = make_grid(1, {{0.0, 1.0}}, {{0.25, 0.75}}, 0.25, 1.0, 0.9);
  ScalarField u(g.node_count());
  for (std::size_t p = 0; p < u.size(); ++p) u[p] = static_cast<double>(p);
  const std::string path = temp_path("wavelab_io_field.csv");
  write_field_csv(path, g, u);
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  CHECK(line == "x,value");
  std::getline(in, line);
  CHECK(line == "0,0");
  std::getline(in, line);
  CHECK(line == "0.25,1");
  std::remove(path.c_str());
}

TEST_CASE("shortest round-trip formatting survives reparse") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> dist(-1e3, 1e3);
  for (int i = 0; i < 200; ++i) {
    const double v = dist(rng);
    CHECK(std::stod(format_double(v)) == v);
  }
  CHECK(std::stod(format_double(1.0 / 3.0)) == 1.0 / 3.0);
  CHECK(format_double(0.25) == "0.25");
}

TEST_CASE("csv writer emits one row per entry") {
  const std::string path = temp_path("wavelab_io_table.csv");
  write_csv(path, {"a", "b"}, {{1.0, 2.0}, {0.5, -0.5}});
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  CHECK(line == "a,b");
  std::getline(in, line);
  CHECK(line == "1,2");
  std::getline(in, line);
  CHECK(line == "0.5,-0.5");
  CHECK(!std::getline(in, line));
  std::remove(path.c_str());
}

}  // TEST_SUITE
