#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "mayer/commands.hpp"
#include "mayer/config.hpp"

using namespace mayer;
using doctest::Approx;

namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  REQUIRE(bool(f));
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("defaults and typed getters") {
  const RunConfig cfg = RunConfig::defaults();
  CHECK(cfg.get_double("beam.k") == 100.0);
  CHECK(cfg.get_int("seeds.n") == 200);
  CHECK(cfg.get_string("slits.curvature") == "standard");
  CHECK(cfg.beam().W0 == Approx(1.0).epsilon(1e-14));
  CHECK(cfg.madelung_step() == Approx(1e-4).epsilon(1e-12));  // min(W0,1/k)/100
}

TEST_CASE("unknown keys and malformed values are hard errors") {
  RunConfig cfg = RunConfig::defaults();
  CHECK_THROWS_AS(cfg.set("beam.unknown", "1"), ConfigError);
  CHECK_THROWS_AS(cfg.get_double("no.such.key"), ConfigError);
  cfg.set("beam.k", "not-a-number");
  CHECK_THROWS_AS(cfg.get_double("beam.k"), ConfigError);
  cfg.set("seeds.n", "2.5");
  CHECK_THROWS_AS(cfg.get_int("seeds.n"), ConfigError);
  cfg.set("slits.curvature", "bogus");
  CHECK_THROWS_AS(cfg.slits(), ConfigError);
}

TEST_CASE("config file parsing") {
  const fs::path p = fs::temp_directory_path() / "mayer_cfg_test.cfg";
  {
    std::ofstream f(p);
    f << "# comment line\n";
    f << "beam.k = 200   # trailing comment\n";
    f << "\n";
    f << "slits.a = 2.5\n";
  }
  RunConfig cfg = RunConfig::defaults();
  cfg.load_file(p.string());
  CHECK(cfg.get_double("beam.k") == 200.0);
  CHECK(cfg.get_double("slits.a") == 2.5);
  fs::remove(p);

  RunConfig other = RunConfig::defaults();
  CHECK_THROWS_AS(other.load_file("/nonexistent/path.cfg"), ConfigError);
}

TEST_CASE("header lines are sorted and prefixed") {
  const RunConfig cfg = RunConfig::defaults();
  const auto lines = cfg.header_lines();
  REQUIRE(!lines.empty());
  for (const auto& l : lines) CHECK(l.rfind("# ", 0) == 0);
  for (std::size_t i = 1; i < lines.size(); ++i) CHECK(lines[i - 1] < lines[i]);
}

TEST_CASE("single-slit run reports one maximum and reruns byte-identically") {
  RunConfig cfg = RunConfig::defaults();
  cfg.set("slits.a", "0");
  cfg.set("seeds.n", "30");
  cfg.set("seeds.x_min", "-2");
  cfg.set("seeds.x_max", "2");
  cfg.set("integrator.dz", "0.1");
  cfg.set("equiv.n", "300");
  cfg.set("equiv.dz", "0.5");
  cfg.set("density.nx", "60");
  cfg.set("density.nz", "60");

  const fs::path base = fs::temp_directory_path() / "mayer_cmd_test";
  const fs::path run1 = base / "run1", run2 = base / "run2";
  fs::remove_all(base);
  REQUIRE(cmd_slits(cfg, run1.string()) == 0);
  REQUIRE(cmd_slits(cfg, run2.string()) == 0);

  const std::string report = slurp(run1 / "report.txt");
  CHECK(report.find("fringe_count 1\n") != std::string::npos);
  CHECK(report.find("landing_band_count 1\n") != std::string::npos);

  for (const char* name : {"trajectories.csv", "density.csv", "density.pgm",
                           "report.txt"}) {
    CHECK(slurp(run1 / name) == slurp(run2 / name));
  }
  fs::remove_all(base);
}

TEST_CASE("invert-current report contains both determinant forms") {
  const fs::path dir = fs::temp_directory_path() / "mayer_invert_test";
  fs::remove_all(dir);
  REQUIRE(cmd_invert_current(RunConfig::defaults(), dir.string()) == 0);
  const std::string report = slurp(dir / "invert_report.txt");
  CHECK(report.find("det_numeric") != std::string::npos);
  CHECK(report.find("det_closed_form") != std::string::npos);
  CHECK(report.find("NoNontrivialSolution") != std::string::npos);
  fs::remove_all(dir);
}
