#include <doctest.h>

#include <sys/wait.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <nlohmann/json.hpp>
#include <numbers>
#include <sstream>

namespace fs = std::filesystem;

namespace {

const fs::path kOut = fs::temp_directory_path() / "lzlab_test_cli";

int run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " \"" LZLAB_CLI_PATH "\" " + args + " >" + (kOut / "stdout.txt").string() + " 2>" +
                          (kOut / "stderr.txt").string();
  fs::create_directories(kOut);
  const int rc = std::system(cmd.c_str());
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

struct Csv {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
  double at(std::size_t r, const std::string& col) const {
    for (std::size_t c = 0; c < header.size(); ++c)
      if (header[c] == col) return rows[r][c];
    throw std::out_of_range(col);
  }
};

Csv read_csv(const fs::path& p) {
  std::ifstream in(p);
  Csv csv;
  std::string line, cell;
  std::getline(in, line);
  for (std::istringstream hs(line); std::getline(hs, cell, ',');) csv.header.push_back(cell);
  while (std::getline(in, line)) {
    std::vector<double> row;
    for (std::istringstream rs(line); std::getline(rs, cell, ',');) row.push_back(std::stod(cell));
    csv.rows.push_back(row);
  }
  return csv;
}

nlohmann::json read_json(const fs::path& p) { return nlohmann::json::parse(slurp(p)); }

std::string out_flag(const std::string& sub) { return " --out " + (kOut / sub).string(); }

}  // namespace

TEST_CASE("simulate writes the trajectory and its manifest") {
  REQUIRE(run("simulate --epsilon 4" + out_flag("sim")) == 0);
  const Csv c = read_csv(kOut / "sim" / "simulate.csv");
  CHECK(c.header == std::vector<std::string>{"tau", "re_a", "im_a", "re_b", "im_b", "abs_a", "abs_b", "norm_defect"});
  REQUIRE(c.rows.size() == 40001);
  CHECK(c.at(0, "tau") == -20.0);
  CHECK(c.at(40000, "tau") == 20.0);
  CHECK(c.at(0, "re_a") == 1.0);
  double worst = 0.0;
  for (std::size_t r = 0; r < c.rows.size(); ++r) worst = std::max(worst, std::abs(c.at(r, "norm_defect")));
  CHECK(worst <= 1e-8);

  const auto m = read_json(kOut / "sim" / "simulate.manifest.json");
  CHECK(m["command"] == "simulate");
  CHECK(m["params"]["epsilon"].get<double>() == 4.0);
  CHECK(fs::exists(m["outputs"][0]["path"].get<std::string>()));
}

TEST_CASE("simulate is byte-for-byte reproducible") {
  REQUIRE(run("simulate --epsilon 1 --window -5 5" + out_flag("rep1")) == 0);
  REQUIRE(run("simulate --epsilon 1 --window -5 5" + out_flag("rep2")) == 0);
  CHECK(slurp(kOut / "rep1" / "simulate.csv") == slurp(kOut / "rep2" / "simulate.csv"));
}

TEST_CASE("asymptotic initial state and json format") {
  REQUIRE(run("simulate --epsilon 4 --initial asymptotic --format json" + out_flag("asy")) == 0);
  const auto j = read_json(kOut / "asy" / "simulate.json");
  CHECK(j["data"]["re_a"][0].get<double>() < 1.0);
  CHECK(j["data"]["abs_b"][0].get<double>() > 0.0);
}

TEST_CASE("configuration errors exit with 2") {
  CHECK(run("simulate --epsilon -1" + out_flag("bad")) == 2);
  CHECK(run("simulate --epsilon 0" + out_flag("bad")) == 2);
  CHECK(run("simulate --window 1 5" + out_flag("bad")) == 2);
  CHECK(run("simulate --bogus" + out_flag("bad")) == 2);
  CHECK(run("figures fig9" + out_flag("bad")) == 2);
  CHECK(run("") == 2);
  CHECK(slurp(kOut / "stderr.txt").size() > 0);

  fs::create_directories(kOut);
  { std::ofstream(kOut / "broken.json") << "{\"epsilon\": "; }
  CHECK(run("simulate --config " + (kOut / "broken.json").string() + out_flag("bad")) == 2);
  { std::ofstream(kOut / "unknown.json") << "{\"epsilon\": 1, \"colour\": 3}"; }
  CHECK(run("simulate --config " + (kOut / "unknown.json").string() + out_flag("bad")) == 2);
  CHECK(run("simulate --config " + (kOut / "missing.json").string() + out_flag("bad")) == 2);
  CHECK_FALSE(fs::exists(kOut / "bad" / "simulate.csv"));
}

TEST_CASE("flags override the config file") {
  fs::create_directories(kOut);
  { std::ofstream(kOut / "cfg.json") << R"({"epsilon": 2, "tau_min": -3, "tau_max": 4, "step": 0.01})"; }
  REQUIRE(run("simulate --config " + (kOut / "cfg.json").string() + " --epsilon 1" + out_flag("cfg")) == 0);
  const auto m = read_json(kOut / "cfg" / "simulate.manifest.json");
  CHECK(m["params"]["epsilon"].get<double>() == 1.0);
  CHECK(m["params"]["tau_min"].get<double>() == -3.0);
  CHECK(m["params"]["tau_max"].get<double>() == 4.0);
  CHECK(read_csv(kOut / "cfg" / "simulate.csv").rows.size() == 701);

  REQUIRE(run("simulate --alpha 8 --omega 2 --window -2 2" + out_flag("ao")) == 0);
  const auto ao = read_json(kOut / "ao" / "simulate.manifest.json")["params"]["epsilon"];
  CHECK(ao["alpha"].get<double>() == 8.0);
  CHECK(ao["omega"].get<double>() == 2.0);
}

TEST_CASE("LZLAB_OUT overrides --out") {
  const fs::path env_dir = kOut / "from_env";
  fs::remove_all(env_dir);
  REQUIRE(run("simulate --epsilon 2 --window -2 2" + out_flag("ignored"), "LZLAB_OUT=" + env_dir.string()) == 0);
  CHECK(fs::exists(env_dir / "simulate.csv"));
  CHECK_FALSE(fs::exists(kOut / "ignored" / "simulate.csv"));
}

TEST_CASE("markov summary") {
  REQUIRE(run("markov --epsilon 4" + out_flag("mk")) == 0);
  const auto s = read_json(kOut / "mk" / "markov_summary.json");
  CHECK(s["lz_integral"].get<double>() == doctest::Approx(std::numbers::pi / 8).epsilon(1e-9));
  CHECK(std::abs(s["lz_integral_imag"].get<double>()) < 1e-10);
  CHECK(s["lz_formula"].get<double>() == doctest::Approx(0.6752319).epsilon(1e-7));
  const Csv c = read_csv(kOut / "mk" / "markov.csv");
  REQUIRE(c.rows.size() == 40001);
  // eta(0) = sqrt(i pi / eps) / 2
  const double half = 0.5 * std::sqrt(std::numbers::pi / 4) * std::sqrt(0.5);
  CHECK(c.at(20000, "tau") == 0.0);
  CHECK(c.at(20000, "re_eta") == doctest::Approx(half).epsilon(1e-12));
  CHECK(c.at(20000, "im_eta") == doctest::Approx(half).epsilon(1e-12));
  CHECK(std::abs(c.at(40000, "A_M") - s["endpoint_A_M"].get<double>()) < 1e-15);
}

TEST_CASE("figure tables") {
  REQUIRE(run("figures fig2 --epsilon 4" + out_flag("fig")) == 0);
  const Csv f2 = read_csv(kOut / "fig" / "fig2.csv");
  int markers = 0;
  for (std::size_t r = 0; r < f2.rows.size(); ++r) {
    if (f2.at(r, "is_tau0") != 1.0) continue;
    ++markers;
    // phi' meets -eps tau at the marker
    CHECK(std::abs(f2.at(r, "phi_dot") - f2.at(r, "minus_eps_tau")) < 1e-8);
    CHECK(std::abs(f2.at(r, "phi_ddot")) <= 0.05 * 8.0 / 3);
  }
  CHECK(markers >= 1);
  CHECK(fs::exists(kOut / "fig" / "fig2.manifest.json"));

  REQUIRE(run("figures fig3 --epsilon 4" + out_flag("fig")) == 0);
  const Csv f3 = read_csv(kOut / "fig" / "fig3.csv");
  for (std::size_t r = 0; r < f3.rows.size(); r += 997) {
    const double t = f3.at(r, "tau");
    REQUIRE(t != 0.0);
    if (t > 0)
      CHECK(f3.at(r, "sine_term") ==
            doctest::Approx(-std::sqrt(std::numbers::pi / 4) * std::sin(std::numbers::pi / 4 - 4 * t * t)));
  }

  for (const char* w : {"fig1", "fig4"}) {
    REQUIRE(run(std::string("figures ") + w + " --epsilon 4" + out_flag("fig")) == 0);
    CHECK(fs::exists(kOut / "fig" / (std::string(w) + ".manifest.json")));
  }
  CHECK(fs::exists(kOut / "fig" / "fig1_exact.csv"));
  CHECK(fs::exists(kOut / "fig" / "fig4.csv"));
}

TEST_CASE("check exit status follows the report") {
  const int rc = run("check" + out_flag("chk"));
  const auto rep = read_json(kOut / "chk" / "check.json");
  CHECK(rc == (rep["pass"].get<bool>() ? 0 : 1));
  CHECK(read_json(kOut / "stdout.txt") == rep);
}

TEST_CASE("loose integrator tolerance fails the norm check") {
  CHECK(run("check --ode-tol 1e-3" + out_flag("loose")) == 1);
  const auto rep = read_json(kOut / "loose" / "check.json");
  bool seen = false;
  for (const auto& i : rep["items"]) {
    if (i["name"] != "exact.norm_conservation") continue;
    seen = true;
    CHECK_FALSE(i["pass"].get<bool>());
  }
  CHECK(seen);
  CHECK(slurp(kOut / "stderr.txt").find("exact.norm_conservation") != std::string::npos);
}
