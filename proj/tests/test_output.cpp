#include <doctest.h>

#include <fstream>
#include <limits>
#include <nlohmann/json.hpp>
#include <sstream>

#include "lzlab/output.hpp"

using namespace lzlab;
using namespace lzlab::output;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path scratch_dir(const std::string& name) {
  const fs::path d = fs::temp_directory_path() / ("lzlab_test_output_" + name);
  fs::remove_all(d);
  return d;
}

Table sample_table() {
  Table t;
  t.add_column("tau", {-1.0, 0.0, 0.1});
  t.add_column("value", {1.0 / 3.0, -2.5e-17, 12345.678});
  return t;
}

}  // namespace

TEST_CASE("doubles survive a text round trip") {
  for (double v : {0.1, 1.0 / 3.0, -2.5e-300, 6.02214076e23, 0.0, -0.0, 123456789.123456789}) {
    CHECK(std::stod(format_double(v)) == v);
  }
  CHECK(format_double(0.5) == "0.5");
}

TEST_CASE("table shape is enforced") {
  Table t = sample_table();
  CHECK(t.rows() == 3);
  CHECK_THROWS(t.add_column("short", {1.0}));
}

TEST_CASE("csv layout") {
  const std::string csv = to_csv(sample_table());
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  CHECK(line == "tau,value");
  int n = 0;
  while (std::getline(in, line)) ++n;
  CHECK(n == 3);
  CHECK(csv.find("-1,0.33333333333333331") != std::string::npos);
}

TEST_CASE("json layout") {
  Table t = sample_table();
  t.add_column("bad", {std::numeric_limits<double>::quiet_NaN(), 1.0, 2.0});
  const auto j = nlohmann::json::parse(to_json(t));
  CHECK(j["columns"] == nlohmann::json({"tau", "value", "bad"}));
  CHECK(j["data"]["value"][0].get<double>() == 1.0 / 3.0);
  CHECK(j["data"]["bad"][0].is_null());
}

TEST_CASE("atomic write creates directories and leaves no temporary") {
  const fs::path d = scratch_dir("atomic");
  write_atomic(d / "nested" / "x.txt", "hello");
  CHECK(slurp(d / "nested" / "x.txt") == "hello");
  write_atomic(d / "nested" / "x.txt", "again");
  CHECK(slurp(d / "nested" / "x.txt") == "again");
  int files = 0;
  for (const auto& e : fs::directory_iterator(d / "nested")) files += e.is_regular_file();
  CHECK(files == 1);
  fs::remove_all(d);
}

TEST_CASE("tables are written deterministically") {
  const fs::path d = scratch_dir("tables");
  const fs::path a = write_table(d, "t", sample_table(), Format::csv);
  const std::string first = slurp(a);
  write_table(d, "t", sample_table(), Format::csv);
  CHECK(slurp(a) == first);
  CHECK(a.filename() == "t.csv");
  CHECK(write_table(d, "t", sample_table(), Format::json).filename() == "t.json");
  fs::remove_all(d);
}

TEST_CASE("manifest records parameters and outputs") {
  const fs::path d = scratch_dir("manifest");
  const fs::path data = write_table(d, "run", sample_table(), Format::csv);
  RunManifest m{"simulate", make_params(2.0, -5.0, 5.0), {{data.string(), "trajectory"}}};
  m.wall_time = 0.25;
  const fs::path mp = write_manifest(d, "run", m);
  CHECK(mp.filename() == "run.manifest.json");
  const auto j = nlohmann::json::parse(slurp(mp));
  CHECK(j["command"] == "simulate");
  CHECK(j["version"] == kVersion);
  CHECK(j["params"]["epsilon"].get<double>() == 2.0);
  CHECK(j["params"]["tau_min"].get<double>() == -5.0);
  CHECK(j["outputs"][0]["kind"] == "trajectory");
  CHECK(j["wall_time"].get<double>() == 0.25);

  RunManifest missing = m;
  missing.outputs.push_back({(d / "nope.csv").string(), "trajectory"});
  CHECK_THROWS(write_manifest(d, "bad", missing));
  fs::remove_all(d);
}
