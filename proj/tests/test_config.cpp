#include <catch2/catch_amalgamated.hpp>

#include <string>

#include "yokegrip/config.hpp"
#include "yokegrip/design.hpp"
#include "yokegrip/report.hpp"

using yokegrip::config::ConfigError;
using yokegrip::config::DesignConfig;
using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::WithinRel;

namespace {

std::string minimal_config() {
  return R"(magnet.flux_density_T = 0.494
magnet.outer_diameter_m = 0.025
magnet.inner_diameter_m = 0.005
magnet.thickness_m = 0.005
magnet.count = 3
magnet.spacing_m = 0.070
payload.mass_kg = 2.0
actuator.torque_kg_cm = 20
actuator.voltage_V = 6
actuator.length_m = 0.03
actuator.speed_rad_s = 6.0
material.density_kg_m3 = 1250
)";
}

}  // namespace

TEST_CASE("config parsing", "[config]") {
  SECTION("minimal config parses with documented defaults") {
    const DesignConfig c = DesignConfig::from_string(minimal_config());
    CHECK(c.magnet.flux_density == 0.494);
    CHECK(c.magnet_count == 3);
    CHECK_FALSE(c.magnet.empirical_pull_mass.has_value());
    CHECK(c.release_factor == 1.2);
    CHECK(c.safety_factor == 2.0);
    CHECK(c.gp_weight_w1 == 0.9);
    CHECK(c.impact_contact_duration == 0.02);
    CHECK(c.rounding_increment == 0.005);
    CHECK(c.constants.gravity == 9.81);
    CHECK_THAT(c.actuator.torque_rating, WithinRel(20.0 * yokegrip::kNewtonMetersPerKgCm, 1e-12));
  }

  SECTION("comments, blank lines, and spacing are tolerated") {
    const DesignConfig c = DesignConfig::from_string("# leading comment\n\n  ; alt comment\n" +
                                                     minimal_config() + "\n  gp.w1   =   0.4  \n");
    CHECK(c.gp_weight_w1 == 0.4);
  }

  SECTION("free-text values keep their spaces") {
    const DesignConfig c =
        DesignConfig::from_string(minimal_config() + "magnet.layout = equilateral triangle\n");
    CHECK(c.magnet_layout == "equilateral triangle");
  }

  SECTION("missing required keys name the field path") {
    std::string text;
    for (const auto& line : {std::string("magnet.outer_diameter_m = 0.025")}) text += line + "\n";
    CHECK_THROWS_MATCHES(DesignConfig::from_string(text), ConfigError,
                         Catch::Matchers::MessageMatches(ContainsSubstring("magnet.flux_density_T")));
  }

  SECTION("unknown keys are rejected by name") {
    CHECK_THROWS_MATCHES(DesignConfig::from_string(minimal_config() + "magnet.colour = red\n"), ConfigError,
                         Catch::Matchers::MessageMatches(ContainsSubstring("magnet.colour")));
  }

  SECTION("duplicate keys are rejected") {
    CHECK_THROWS_MATCHES(DesignConfig::from_string(minimal_config() + "payload.mass_kg = 3\n"), ConfigError,
                         Catch::Matchers::MessageMatches(ContainsSubstring("duplicate")));
  }

  SECTION("malformed numbers name the key") {
    CHECK_THROWS_MATCHES(DesignConfig::from_string(minimal_config() + "gp.w1 = fast\n"), ConfigError,
                         Catch::Matchers::MessageMatches(ContainsSubstring("gp.w1")));
    CHECK_THROWS_MATCHES(DesignConfig::from_string(minimal_config() + "sizing.disk_thickness_m = 0,025\n"),
                         ConfigError,
                         Catch::Matchers::MessageMatches(ContainsSubstring("sizing.disk_thickness_m")));
  }

  SECTION("lines without an equals sign are rejected") {
    CHECK_THROWS_AS(DesignConfig::from_string("magnet.count\n"), ConfigError);
  }

  SECTION("semantic validation handles bounds") {
    CHECK_THROWS_AS(DesignConfig::from_string(minimal_config() + "gp.w1 = 1.0\n"), ConfigError);
    CHECK_THROWS_AS(DesignConfig::from_string(minimal_config() + "gp.w1 = 0\n"), ConfigError);
    CHECK_THROWS_AS(DesignConfig::from_string(minimal_config() + "safety.factor = 0.5\n"), ConfigError);
    std::string bad_count = minimal_config();
    bad_count.replace(bad_count.find("magnet.count = 3"), 16, "magnet.count = 0");
    CHECK_THROWS_AS(DesignConfig::from_string(bad_count), ConfigError);
  }

  SECTION("missing file reports the path") {
    CHECK_THROWS_MATCHES(DesignConfig::from_file("/nonexistent/nowhere.cfg"), ConfigError,
                         Catch::Matchers::MessageMatches(ContainsSubstring("/nonexistent/nowhere.cfg")));
  }
}

TEST_CASE("shipped reference config matches the built-in defaults", "[config]") {
  const DesignConfig file = DesignConfig::from_file(std::string(YOKEGRIP_CONFIG_DIR) + "/reference.cfg");
  const DesignConfig builtin = DesignConfig::reference();

  CHECK(file.magnet.flux_density == builtin.magnet.flux_density);
  CHECK(file.magnet.outer_diameter == builtin.magnet.outer_diameter);
  CHECK(file.magnet.inner_diameter == builtin.magnet.inner_diameter);
  CHECK(file.magnet.empirical_pull_mass == builtin.magnet.empirical_pull_mass);
  CHECK(file.magnet_count == builtin.magnet_count);
  CHECK(file.payload_mass == builtin.payload_mass);
  CHECK(file.actuator.torque_rating == builtin.actuator.torque_rating);
  CHECK(file.material.density == builtin.material.density);
  CHECK(file.gp_weight_w1 == builtin.gp_weight_w1);
  CHECK(file.impact_speed_override == builtin.impact_speed_override);
  CHECK(file.safety_factor == builtin.safety_factor);

  // both must produce the pinned dimension set
  const auto cm_file = yokegrip::report::dimensions_cm(yokegrip::sizing::full_design_report(file).dims);
  const auto cm_builtin = yokegrip::report::dimensions_cm(yokegrip::sizing::full_design_report(builtin).dims);
  for (std::size_t i = 0; i < cm_file.size(); ++i) CHECK(cm_file[i] == cm_builtin[i]);
}
