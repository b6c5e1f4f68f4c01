#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <unistd.h>

#include "lrk/cli.hpp"
#include "lrk/io.hpp"

using namespace lrk;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("lrk_cli_test_" + std::to_string(::getpid())) / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

void spit(const fs::path& p, const std::string& text) { std::ofstream(p, std::ios::binary) << text; }

}  // namespace

TEST_CASE("number formatting") {
  CHECK(io::format_double(0.1) == "0.10000000000000001");
  CHECK(io::format_double(2.0) == "2");
  CHECK(io::format_double(std::nan("")) == "nan");
  CHECK(std::stod(io::format_double(1.0 / 3.0)) == 1.0 / 3.0);
}

TEST_CASE("config file parsing") {
  cli::RunConfig c;
  cli::load_ini(c,
                "# comment\n[run]\nL = 200\nalpha = inf ; short range\nbeta_ratio=0.4\n"
                "mu_ratio_grid = 0:1:11\nalpha_grid = log:1.1:4:5\nbeta_ratio_grid = 0.2, 0.5\n"
                "refine = yes\ncycle = stirling\n",
                "test.ini");
  CHECK(c.L == 200);
  CHECK(c.alpha.is_short_range());
  CHECK(c.beta_ratio == 0.4);
  CHECK(c.mu_ratio_grid.size() == 11);
  CHECK(c.mu_ratio_grid[5] == 0.5);
  CHECK(c.alpha_grid.front() == 1.1);
  CHECK(c.alpha_grid.back() == 4.0);
  CHECK(c.beta_ratio_grid == std::vector<double>{0.2, 0.5});
  CHECK(c.refine);
  CHECK(c.cycle == CycleKind::stirling);

  auto message = [](const std::string& text) {
    cli::RunConfig c;
    try {
      cli::load_ini(c, text, "f.ini");
    } catch (const cli::ConfigError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(message("L = 20\n\nmu_i = x\n").rfind("f.ini:3:", 0) == 0);
  CHECK(message("colour = blue\n").find("unknown key 'colour'") != std::string::npos);
  CHECK(message("L 20\n").rfind("f.ini:1:", 0) == 0);
  CHECK(message("L = 2.5\n") != "");
  CHECK(message("format = xml\n") != "");
  CHECK(message("alpha = -2\n") != "");
}

TEST_CASE("every key round-trips through its canonical text") {
  cli::RunConfig c;
  cli::apply(c, "alpha", "1.2345678901234567");
  cli::apply(c, "beta_h", "0.7");
  cli::apply(c, "mu_ratio_grid", "0:1:7");
  for (const auto& key : cli::config_keys()) {
    cli::RunConfig d;
    cli::apply(d, key, cli::value_of(c, key));
    CHECK(cli::value_of(d, key) == cli::value_of(c, key));
  }
}

TEST_CASE("single-cycle JSON schema") {
  const auto dir = scratch("cycle");
  REQUIRE(cli::run({"stirling", "--L", "2", "--alpha", "2", "--mu-i", "2", "--mu-f", "1",
                    "--beta-h", "1", "--beta-c", "5", "--output-dir", dir.string()}) == 0);
  const auto j = io::Json::parse(slurp(dir / "cycle.json"));
  CHECK(j["cycle"] == "stirling");
  CHECK(j["Q"].contains("I"));
  CHECK(j["Q"].contains("IV"));
  CHECK(j["W"].get<double>() == doctest::Approx(0.32467306811288199746));
  CHECK(j["engine_valid"] == true);

  REQUIRE(cli::run({"otto", "--L", "2", "--alpha", "2", "--mu-i", "2", "--mu-f", "2",
                    "--output-dir", dir.string()}) == 0);
  const auto o = io::Json::parse(slurp(dir / "cycle.json"));
  CHECK(o["eta"].is_null());
  CHECK(o["engine_valid"] == false);
  std::vector<std::string> keys;
  for (const auto& [k, v] : o.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"cycle", "Q", "W", "eta", "engine_valid"});
}

TEST_CASE("CSV layout") {
  const auto dir = scratch("csv");
  REQUIRE(cli::run({"spectrum", "--L", "8", "--alpha", "4", "--mu-min", "-1", "--mu-max", "1",
                    "--mu-points", "3", "--output-dir", dir.string()}) == 0);
  const auto text = slurp(dir / "spectrum.csv");
  CHECK(text.rfind("mu,level_index,energy\n", 0) == 0);
  CHECK(text.find('\r') == std::string::npos);
  CHECK(std::count(text.begin(), text.end(), '\n') == 1 + 3 * 8);
  CHECK(fs::exists(dir / "spectrum.gp"));
  CHECK(fs::exists(dir / "run-manifest.json"));
}

TEST_CASE("flags override the config file") {
  const auto dir = scratch("override");
  spit(dir / "run.ini", "L = 4\nalpha = 2\nmu = 3\n");
  REQUIRE(cli::run({"winding", "--config", (dir / "run.ini").string(), "--mu", "0.2",
                    "--output-dir", dir.string()}) == 0);
  const auto m = io::Json::parse(slurp(dir / "run-manifest.json"));
  CHECK(m["inputs"]["L"] == "4");
  CHECK(m["inputs"]["mu"] == "0.20000000000000001");
  CHECK(io::Json::parse(slurp(dir / "winding.json"))["w"].get<double>() == doctest::Approx(1.0));
}

TEST_CASE("a manifest replays to byte-identical output") {
  const auto first = scratch("first");
  REQUIRE(cli::run({"sweep", "--cycle", "stirling", "--L", "100", "--alpha", "1.3", "--beta-c",
                    "5", "--beta-ratio", "0.3", "--mu-ratio-grid", "0:1:21", "--output-dir",
                    first.string()}) == 0);
  const auto second = scratch("second");
  REQUIRE(cli::run({"sweep", "--config", (first / "run-manifest.json").string(), "--output-dir",
                    second.string()}) == 0);
  CHECK(slurp(first / "sweep.csv") == slurp(second / "sweep.csv"));
  CHECK(slurp(first / "sweep.csv").size() > 100);
}

TEST_CASE("exit codes") {
  const auto dir = scratch("codes");
  CHECK(cli::run({"reproduce-figure", "2", "--output-dir", dir.string()}) == cli::kConfigError);
  CHECK(cli::run({"reproduce-figure", "11", "--output-dir", dir.string()}) == cli::kConfigError);
  CHECK(cli::run({"otto", "--L", "7", "--output-dir", dir.string()}) == cli::kConfigError);
  CHECK(cli::run({"otto", "--bogus", "1"}) == cli::kConfigError);
  CHECK(cli::run({"otto", "--config", (dir / "missing.ini").string()}) == cli::kConfigError);
  // alpha = 0.4 is fine for a spectrum but not for an engine
  CHECK(cli::run({"otto", "--alpha", "0.4", "--L", "8", "--output-dir", dir.string()}) ==
        cli::kConfigError);
  // a gapless winding probe is a numerical contract failure
  CHECK(cli::run({"winding", "--L", "100", "--alpha", "4", "--mu", "-1", "--output-dir",
                  dir.string()}) == cli::kContractError);
  spit(dir / "file", "x");
  CHECK(cli::run({"winding", "--L", "8", "--output-dir", (dir / "file" / "sub").string()}) ==
        cli::kIoError);
}

TEST_CASE("figure runs write data and plot scripts") {
  const auto dir = scratch("fig3");
  REQUIRE(cli::run({"reproduce-figure", "3", "--output-dir", dir.string()}) == 0);
  for (const char* a : {"1.05", "2", "10", "inf"}) {
    CHECK(fs::exists(dir / "fig3" / (std::string("energy_alpha_") + a + ".csv")));
    CHECK(fs::exists(dir / "fig3" / (std::string("energy_alpha_") + a + ".gp")));
  }
  const auto script = slurp(dir / "fig3" / "energy_alpha_2.gp");
  CHECK(script.find("'energy_alpha_2.csv'") != std::string::npos);
}
