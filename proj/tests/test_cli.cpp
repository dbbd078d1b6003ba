#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "yokegrip/cli.hpp"
#include "yokegrip/mechanism.hpp"

namespace fs = std::filesystem;
using Catch::Matchers::ContainsSubstring;

namespace {

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

RunResult run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = yokegrip::cli::run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

fs::path temp_file(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("yokegrip_test_" + name);
  std::error_code ec;
  fs::remove(p, ec);
  return p;
}

}  // namespace

TEST_CASE("cli help and dispatch", "[cli]") {
  SECTION("no arguments prints help and succeeds") {
    const auto r = run_cli({});
    CHECK(r.code == 0);
    CHECK_THAT(r.out, ContainsSubstring("capacity"));
    CHECK_THAT(r.out, ContainsSubstring("design"));
  }

  SECTION("--help exits zero for the app and every subcommand") {
    CHECK(run_cli({"--help"}).code == 0);
    for (const std::string sub : {"capacity", "optimize", "torque-profile", "design", "reproduce"})
      CHECK(run_cli({sub, "--help"}).code == 0);
  }

  SECTION("unknown subcommand is a usage error") {
    CHECK(run_cli({"frobnicate"}).code == 1);
  }
}

TEST_CASE("cli capacity", "[cli]") {
  SECTION("reference design passes with the measured pull") {
    const auto r = run_cli({"capacity"});
    REQUIRE(r.code == 0);
    CHECK_THAT(r.out, ContainsSubstring("4.66429"));
    CHECK_THAT(r.out, ContainsSubstring("2.1 kg"));
    CHECK_THAT(r.out, ContainsSubstring("6.3 kg"));
    CHECK_THAT(r.out, ContainsSubstring("PASS"));
  }

  SECTION("csv variant carries the same numbers at full precision") {
    const auto r = run_cli({"capacity", "--format", "csv"});
    REQUIRE(r.code == 0);
    CHECK_THAT(r.out, ContainsSubstring("field,value\n"));
    CHECK_THAT(r.out, ContainsSubstring("array_capacity_kg,6.3000000000000007\n"));  // 3 * double(2.1)
    CHECK_THAT(r.out, ContainsSubstring("payload_ok,1\n"));
  }

  SECTION("infeasible payload reports FAIL but exits zero") {
    const fs::path cfg = temp_file("heavy.cfg");
    std::ofstream(cfg) << "magnet.flux_density_T = 0.494\nmagnet.outer_diameter_m = 0.025\n"
                          "magnet.inner_diameter_m = 0.005\nmagnet.thickness_m = 0.005\n"
                          "magnet.empirical_pull_kg = 2.1\nmagnet.count = 3\nmagnet.spacing_m = 0.07\n"
                          "payload.mass_kg = 7\nactuator.torque_kg_cm = 20\nactuator.voltage_V = 6\n"
                          "actuator.length_m = 0.03\nactuator.speed_rad_s = 6\nmaterial.density_kg_m3 = 1250\n";
    const auto r = run_cli({"--config", cfg.string(), "capacity"});
    CHECK(r.code == 0);
    CHECK_THAT(r.out, ContainsSubstring("FAIL"));
    fs::remove(cfg);
  }

  SECTION("zero payload notes the unbounded margin and passes") {
    const fs::path cfg = temp_file("empty_payload.cfg");
    std::ofstream(cfg) << "magnet.flux_density_T = 0.494\nmagnet.outer_diameter_m = 0.025\n"
                          "magnet.inner_diameter_m = 0.005\nmagnet.thickness_m = 0.005\n"
                          "magnet.empirical_pull_kg = 2.1\nmagnet.count = 3\nmagnet.spacing_m = 0.07\n"
                          "payload.mass_kg = 0\nactuator.torque_kg_cm = 20\nactuator.voltage_V = 6\n"
                          "actuator.length_m = 0.03\nactuator.speed_rad_s = 6\nmaterial.density_kg_m3 = 1250\n";
    const auto r = run_cli({"--config", cfg.string(), "capacity"});
    CHECK(r.code == 0);
    CHECK_THAT(r.out, ContainsSubstring("inf"));
    CHECK_THAT(r.out, ContainsSubstring("no payload"));
    CHECK_THAT(r.out, ContainsSubstring("PASS"));
    fs::remove(cfg);
  }
}

TEST_CASE("cli optimize", "[cli]") {
  SECTION("sweep emits nine rows plus a header") {
    const auto r = run_cli({"optimize", "--sweep"});
    REQUIRE(r.code == 0);
    CHECK_THAT(r.out, ContainsSubstring("w1,w2,r2_m,r4a_m,V,r2_opt_m,r4a_opt_m,V_opt\n"));
    int lines = 0;
    for (char ch : r.out) lines += ch == '\n';
    CHECK(lines == 10);
  }

  SECTION("single weight row carries recipe and rigorous columns") {
    const auto r = run_cli({"optimize", "--weights", "0.9"});
    REQUIRE(r.code == 0);
    const auto header_end = r.out.find('\n');
    REQUIRE(header_end != std::string::npos);
    std::istringstream row(r.out.substr(header_end + 1));
    std::vector<double> vals;
    std::string cell;
    while (std::getline(row, cell, ',')) vals.push_back(std::strtod(cell.c_str(), nullptr));
    REQUIRE(vals.size() == 8);
    CHECK(vals[0] == 0.9);
    CHECK_THAT(vals[2], Catch::Matchers::WithinAbs(0.0454707903, 1e-8));  // recipe r2
    CHECK_THAT(vals[7], Catch::Matchers::WithinAbs(0.0506059599, 1e-8));  // rigorous V
  }

  SECTION("weights at the boundary are usage errors") {
    CHECK(run_cli({"optimize", "--weights", "1.0"}).code == 1);
    CHECK(run_cli({"optimize", "--weights", "0"}).code == 1);
  }

  SECTION("exactly one of --weights and --sweep") {
    CHECK(run_cli({"optimize"}).code == 1);
    CHECK(run_cli({"optimize", "--weights", "0.5", "--sweep"}).code == 1);
  }

  SECTION("csv output is byte-identical across runs") {
    const auto a = run_cli({"optimize", "--sweep"});
    const auto b = run_cli({"optimize", "--sweep"});
    CHECK(a.out == b.out);
  }
}

TEST_CASE("cli torque profile", "[cli]") {
  SECTION("four samples land on the quarter points") {
    const auto r = run_cli({"torque-profile", "--samples", "4"});
    REQUIRE(r.code == 0);
    CHECK_THAT(r.out, ContainsSubstring("theta2_rad,T2_Nm\n"));
    CHECK_THAT(r.out, ContainsSubstring("\n0,0\n"));
    CHECK_THAT(r.out, ContainsSubstring("-1.875"));
  }

  SECTION("single sample is a usage error") {
    CHECK(run_cli({"torque-profile", "--samples", "1"}).code == 1);
  }

  SECTION("file output round-trips the in-memory profile exactly") {
    const fs::path path = temp_file("torque.csv");
    const auto r = run_cli({"torque-profile", "--samples", "16", "--out", path.string()});
    REQUIRE(r.code == 0);
    CHECK(r.out.empty());

    const auto expected = yokegrip::mechanism::driving_torque_profile({0.025, 0.18}, 75.0, 16);
    std::ifstream in(path);
    REQUIRE(in.good());
    std::string header;
    std::getline(in, header);
    CHECK(header == "theta2_rad,T2_Nm");
    for (const auto& sample : expected) {
      std::string line;
      REQUIRE(std::getline(in, line));
      const auto comma = line.find(',');
      REQUIRE(comma != std::string::npos);
      CHECK(std::strtod(line.substr(0, comma).c_str(), nullptr) == sample.theta2);
      CHECK(std::strtod(line.substr(comma + 1).c_str(), nullptr) == sample.torque);
    }
    fs::remove(path);
  }
}

TEST_CASE("cli design", "[cli]") {
  SECTION("text report carries the pinned dimensions and feasibility lines") {
    const auto r = run_cli({"design"});
    REQUIRE(r.code == 0);
    CHECK_THAT(r.out, ContainsSubstring("Radius of the rotating disk (r2)          2.5"));
    CHECK_THAT(r.out, ContainsSubstring("Height of the gripper mount (Hgm)         23"));
    CHECK_THAT(r.out, ContainsSubstring("19.1197 kg*cm <= rated 20 kg*cm  PASS"));
  }

  SECTION("csv report is machine readable and deterministic") {
    const auto a = run_cli({"design", "--format", "csv"});
    const auto b = run_cli({"design", "--format", "csv"});
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    CHECK_THAT(a.out, ContainsSubstring("field,value,unit\n"));
    CHECK_THAT(a.out, ContainsSubstring("disk_radius_r2,2.5,cm\n"));
    CHECK_THAT(a.out, ContainsSubstring("mount_height_Hgm,23,cm\n"));
    CHECK_THAT(a.out, ContainsSubstring("actuator_ok,1,flag\n"));
  }

  SECTION("missing required keys exit 2 and name the path") {
    const fs::path cfg = temp_file("missing.cfg");
    std::ofstream(cfg) << "payload.mass_kg = 2\n";
    const auto r = run_cli({"--config", cfg.string(), "design"});
    CHECK(r.code == 2);
    CHECK_THAT(r.err, ContainsSubstring("magnet.flux_density_T"));
    fs::remove(cfg);
  }

  SECTION("malformed config never produces a partial output file") {
    const fs::path cfg = temp_file("broken.cfg");
    std::ofstream(cfg) << "magnet.flux_density_T = not_a_number\n";
    const fs::path out_path = temp_file("never_written.csv");
    const auto r = run_cli({"--config", cfg.string(), "design", "--format", "csv", "--out", out_path.string()});
    CHECK(r.code == 2);
    CHECK_FALSE(fs::exists(out_path));
    fs::remove(cfg);
  }

  SECTION("unwritable output path exits 1") {
    const auto r = run_cli({"design", "--out", "/nonexistent-dir/report.txt"});
    CHECK(r.code == 1);
  }
}

TEST_CASE("cli reproduce", "[cli]") {
  const auto r = run_cli({"reproduce"});
  REQUIRE(r.code == 0);
  CHECK_THAT(r.out, ContainsSubstring("[PASS] pull capacity"));
  CHECK_THAT(r.out, ContainsSubstring("[PASS] sizing sweep"));
  CHECK_THAT(r.out, ContainsSubstring("[PASS] dimension report"));
  CHECK_THAT(r.out, ContainsSubstring("summary: 3/3 checks passed"));
}
