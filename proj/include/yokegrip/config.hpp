#pragma once

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "yokegrip/magnetics.hpp"
#include "yokegrip/sizing.hpp"
#include "yokegrip/units.hpp"

namespace yokegrip::config {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Complete input set for a design run. Parsed from a flat key = value file
// with dotted section prefixes (see configs/reference.cfg); defaults match
// the shipped reference design.
struct DesignConfig {
  magnetics::PhysicalConstants constants;

  magnetics::MagnetSpec magnet;
  int magnet_count = 3;
  double magnet_spacing = 0.07;  // m
  std::string magnet_layout = "equilateral triangle";

  double payload_mass = 2.0;  // kg

  double release_factor = 1.2;  // release force >= factor * grasped weight
  std::optional<double> release_force_override;  // N, bypasses the derived value

  sizing::ActuatorSpec actuator;
  sizing::MaterialSpec material;

  double gp_weight_w1 = 0.9;

  double impact_contact_duration = 0.02;         // s
  std::optional<double> impact_speed_override;   // m/s; default is r2 * actuator speed

  double safety_factor = 2.0;
  double default_disk_thickness = 0.025;    // m, used for the emitted dimensions
  double default_slider_thickness = 0.025;  // m
  double rounding_increment = 0.005;        // m, fabrication snap for lengths

  magnetics::MagnetArray array() const { return {magnet, magnet_count, magnet_spacing, magnet_layout}; }

  void validate() const;

  static DesignConfig reference();
  static DesignConfig from_string(const std::string& text);
  static DesignConfig from_file(const std::string& path);
};

inline DesignConfig DesignConfig::reference() {
  DesignConfig c;
  c.magnet.flux_density = 0.494;
  c.magnet.outer_diameter = 0.025;
  c.magnet.inner_diameter = 0.005;
  c.magnet.thickness = 0.005;
  c.magnet.grade = "N35";
  c.magnet.empirical_pull_mass = 2.1;
  c.actuator.torque_rating = kg_cm_to_newton_meters(20.0);
  c.actuator.rated_voltage = 6.0;
  c.actuator.body_length = 0.03;
  c.actuator.angular_speed = 6.0;
  c.material.density = 1250.0;
  c.material.name = "printed polymer";
  c.impact_speed_override = 3.0;
  return c;
}

inline void DesignConfig::validate() const {
  try {
    constants.validate();
    array().validate();
    actuator.validate();
    material.validate();
  } catch (const std::domain_error& e) {
    throw ConfigError(std::string("invalid configuration: ") + e.what());
  }
  if (payload_mass < 0.0) throw ConfigError("invalid configuration: payload.mass_kg must be non-negative");
  if (!(release_factor > 0.0)) throw ConfigError("invalid configuration: release.factor must be positive");
  if (release_force_override && !(*release_force_override > 0.0))
    throw ConfigError("invalid configuration: release.force_override_N must be positive");
  if (!(gp_weight_w1 > 0.0 && gp_weight_w1 < 1.0))
    throw ConfigError("invalid configuration: gp.w1 must lie strictly between 0 and 1");
  if (!(impact_contact_duration > 0.0))
    throw ConfigError("invalid configuration: impact.contact_duration_s must be positive");
  if (impact_speed_override && !(*impact_speed_override > 0.0))
    throw ConfigError("invalid configuration: impact.slider_speed_m_s must be positive");
  if (!(safety_factor >= 1.0)) throw ConfigError("invalid configuration: safety.factor must be at least 1");
  if (!(default_disk_thickness > 0.0))
    throw ConfigError("invalid configuration: sizing.disk_thickness_m must be positive");
  if (!(default_slider_thickness > 0.0))
    throw ConfigError("invalid configuration: sizing.slider_thickness_m must be positive");
  if (!(rounding_increment > 0.0))
    throw ConfigError("invalid configuration: sizing.rounding_increment_m must be positive");
}

namespace detail {

inline std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return "";
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

inline double parse_number(const std::string& key, const std::string& value) {
  double out = 0.0;
  const char* begin = value.data();
  const char* end = begin + value.size();
  const auto [ptr, ec] = std::from_chars(begin, end, out);
  if (ec != std::errc{} || ptr != end || !std::isfinite(out))
    throw ConfigError("value for '" + key + "' is not a finite number: '" + value + "'");
  return out;
}

inline int parse_int(const std::string& key, const std::string& value) {
  int out = 0;
  const char* begin = value.data();
  const char* end = begin + value.size();
  const auto [ptr, ec] = std::from_chars(begin, end, out);
  if (ec != std::errc{} || ptr != end)
    throw ConfigError("value for '" + key + "' is not an integer: '" + value + "'");
  return out;
}

}  // namespace detail

inline DesignConfig DesignConfig::from_string(const std::string& text) {
  std::map<std::string, std::string> entries;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string stripped = detail::trim(line);
    if (stripped.empty() || stripped.front() == '#' || stripped.front() == ';') continue;
    const auto eq = stripped.find('=');
    if (eq == std::string::npos)
      throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value', got '" + stripped + "'");
    const std::string key = detail::trim(stripped.substr(0, eq));
    const std::string value = detail::trim(stripped.substr(eq + 1));
    if (key.empty()) throw ConfigError("line " + std::to_string(line_no) + ": empty key");
    if (entries.count(key)) throw ConfigError("duplicate key '" + key + "'");
    entries[key] = value;
  }

  DesignConfig c;
  c.magnet = {};  // required fields must come from the file
  std::set<std::string> seen;
  auto take = [&](const std::string& key) -> std::optional<std::string> {
    const auto it = entries.find(key);
    if (it == entries.end()) return std::nullopt;
    seen.insert(key);
    return it->second;
  };
  auto require_number = [&](const std::string& key) {
    const auto v = take(key);
    if (!v) throw ConfigError("missing required key '" + key + "'");
    return detail::parse_number(key, *v);
  };
  auto optional_number = [&](const std::string& key, double fallback) {
    const auto v = take(key);
    return v ? detail::parse_number(key, *v) : fallback;
  };

  if (const auto v = take("constants.gravity_m_s2")) c.constants.gravity = detail::parse_number("constants.gravity_m_s2", *v);
  if (const auto v = take("constants.permeability_T_m_A"))
    c.constants.permeability_mu0 = detail::parse_number("constants.permeability_T_m_A", *v);

  c.magnet.flux_density = require_number("magnet.flux_density_T");
  c.magnet.outer_diameter = require_number("magnet.outer_diameter_m");
  c.magnet.inner_diameter = require_number("magnet.inner_diameter_m");
  c.magnet.thickness = require_number("magnet.thickness_m");
  if (const auto v = take("magnet.grade")) c.magnet.grade = *v;
  if (const auto v = take("magnet.empirical_pull_kg"))
    c.magnet.empirical_pull_mass = detail::parse_number("magnet.empirical_pull_kg", *v);
  {
    const auto v = take("magnet.count");
    if (!v) throw ConfigError("missing required key 'magnet.count'");
    c.magnet_count = detail::parse_int("magnet.count", *v);
  }
  c.magnet_spacing = require_number("magnet.spacing_m");
  if (const auto v = take("magnet.layout")) c.magnet_layout = *v;

  c.payload_mass = require_number("payload.mass_kg");

  c.release_factor = optional_number("release.factor", c.release_factor);
  if (const auto v = take("release.force_override_N"))
    c.release_force_override = detail::parse_number("release.force_override_N", *v);

  c.actuator.torque_rating = kg_cm_to_newton_meters(require_number("actuator.torque_kg_cm"));
  c.actuator.rated_voltage = require_number("actuator.voltage_V");
  c.actuator.body_length = require_number("actuator.length_m");
  c.actuator.angular_speed = require_number("actuator.speed_rad_s");

  c.material.density = require_number("material.density_kg_m3");
  if (const auto v = take("material.name")) c.material.name = *v;

  c.gp_weight_w1 = optional_number("gp.w1", c.gp_weight_w1);

  c.impact_contact_duration = optional_number("impact.contact_duration_s", c.impact_contact_duration);
  if (const auto v = take("impact.slider_speed_m_s"))
    c.impact_speed_override = detail::parse_number("impact.slider_speed_m_s", *v);

  c.safety_factor = optional_number("safety.factor", c.safety_factor);
  c.default_disk_thickness = optional_number("sizing.disk_thickness_m", c.default_disk_thickness);
  c.default_slider_thickness = optional_number("sizing.slider_thickness_m", c.default_slider_thickness);
  c.rounding_increment = optional_number("sizing.rounding_increment_m", c.rounding_increment);

  for (const auto& [key, value] : entries)
    if (!seen.count(key)) throw ConfigError("unknown key '" + key + "'");

  c.validate();
  return c;
}

inline DesignConfig DesignConfig::from_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_string(buf.str());
}

}  // namespace yokegrip::config
