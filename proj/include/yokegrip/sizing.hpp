#pragma once

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "yokegrip/mechanism.hpp"
#include "yokegrip/units.hpp"

namespace yokegrip::sizing {

struct MaterialSpec {
  double density = 0.0;  // kg/m^3
  std::string name;

  void validate() const {
    if (!(density > 0.0)) throw std::domain_error("MaterialSpec: density must be positive");
  }
};

struct ActuatorSpec {
  double torque_rating = 0.0;  // N*m
  double rated_voltage = 0.0;  // V
  double body_length = 0.0;    // m, the mount depth taken up by the servo body
  double angular_speed = 0.0;  // rad/s

  void validate() const {
    if (!(torque_rating > 0.0)) throw std::domain_error("ActuatorSpec: torque_rating must be positive");
    if (!(body_length > 0.0)) throw std::domain_error("ActuatorSpec: body_length must be positive");
    if (!(angular_speed > 0.0)) throw std::domain_error("ActuatorSpec: angular_speed must be positive");
  }
};

// Slider-on-load contact model for the release impulse. The slider hits the
// grasped object at `slider_impact_speed` (peak slider rate r2 * omega when
// not overridden) and the object picks up `velocity_change` over
// `contact_duration`.
struct ImpactModel {
  double slider_impact_speed = 0.0;  // m/s
  double contact_duration = 0.02;    // s
  double velocity_change = 0.0;      // m/s, defaults to the impact speed

  void validate() const {
    if (!(slider_impact_speed > 0.0)) throw std::domain_error("ImpactModel: slider_impact_speed must be positive");
    if (!(contact_duration > 0.0)) throw std::domain_error("ImpactModel: contact_duration must be positive");
  }
};

// Inverts the impulse relation: the moving part must carry enough momentum
// to deliver the required average force over the contact window.
inline double moving_mass_from_impulse(double required_force, const ImpactModel& impact) {
  impact.validate();
  if (!(impact.velocity_change > 0.0)) throw std::domain_error("moving_mass_from_impulse: velocity_change must be positive");
  if (required_force < 0.0) throw std::domain_error("moving_mass_from_impulse: force must be non-negative");
  return required_force * impact.contact_duration / impact.velocity_change;
}

// Thickness of a solid disk of the given mass: density = mass / volume.
inline double disk_thickness(double mass, double disk_radius, const MaterialSpec& material) {
  material.validate();
  if (!(disk_radius > 0.0)) throw std::domain_error("disk_thickness: radius must be positive");
  if (mass < 0.0) throw std::domain_error("disk_thickness: mass must be non-negative");
  return mass / (material.density * std::numbers::pi * disk_radius * disk_radius);
}

// Same relation for the slider's rectangular footprint (length x slot width).
inline double slider_thickness(double mass, double footprint_area, const MaterialSpec& material) {
  material.validate();
  if (!(footprint_area > 0.0)) throw std::domain_error("slider_thickness: footprint area must be positive");
  if (mass < 0.0) throw std::domain_error("slider_thickness: mass must be non-negative");
  return mass / (material.density * footprint_area);
}

struct SafetyAdjustedLength {
  double raw = 0.0;      // m, value after dividing by the factor
  double rounded = 0.0;  // m, snapped to the fabrication increment
};

// Shrinks an optimized length by the safety factor and snaps the result to
// the fabrication increment. Note the convention: the factor divides the
// length (the torque-critical disk stays compact), it does not scale a load.
inline SafetyAdjustedLength apply_safety_factor(double optimal_length, double factor = 2.0,
                                                double increment = 0.005) {
  if (!(optimal_length > 0.0)) throw std::domain_error("apply_safety_factor: length must be positive");
  if (!(factor >= 1.0)) throw std::domain_error("apply_safety_factor: factor must be at least 1");
  if (!(increment > 0.0)) throw std::domain_error("apply_safety_factor: increment must be positive");
  const double raw = optimal_length / factor;
  return {raw, round_to_increment(raw, increment)};
}

struct MountDimensions {
  double length = 0.0;  // m, L: disk span plus a magnet diameter each side
  double height = 0.0;  // m, H: disk span plus the slider length
  double depth = 0.0;   // m, D: actuator body, both part thicknesses, magnet clearance
};

inline MountDimensions mount_dimensions(double disk_radius, double slider_length, double actuator_length,
                                        double disk_thickness, double slider_thickness,
                                        double magnet_diameter) {
  for (double v : {disk_radius, slider_length, actuator_length, disk_thickness, slider_thickness})
    if (!(v > 0.0)) throw std::domain_error("mount_dimensions: part dimensions must be positive");
  if (magnet_diameter < 0.0) throw std::domain_error("mount_dimensions: magnet diameter must be non-negative");
  MountDimensions m;
  m.length = 2.0 * disk_radius + 2.0 * magnet_diameter;
  m.height = 2.0 * disk_radius + slider_length;
  m.depth = actuator_length + disk_thickness + slider_thickness + 2.0 * magnet_diameter;
  return m;
}

struct ActuatorFeasibility {
  double required_torque = 0.0;   // N*m, peak |T2| = r2 * F
  double available_torque = 0.0;  // N*m
  double margin = 0.0;            // available / required, +inf when nothing is required
  bool pass = false;
};

inline ActuatorFeasibility actuator_feasibility(const mechanism::YokeGeometry& geom, double release_force,
                                                const ActuatorSpec& actuator) {
  geom.validate();
  actuator.validate();
  if (release_force < 0.0) throw std::domain_error("actuator_feasibility: release force must be non-negative");
  ActuatorFeasibility f;
  f.required_torque = geom.disk_radius * release_force;
  f.available_torque = actuator.torque_rating;
  f.margin = f.required_torque == 0.0 ? std::numeric_limits<double>::infinity()
                                      : f.available_torque / f.required_torque;
  f.pass = f.available_torque >= f.required_torque;
  return f;
}

// The sized artifact. The mount identities hold by construction:
//   mount_length = 2 r2 + 2 md,  mount_height = 2 r2 + r4a,
//   mount_depth  = Al + Dt + St + 2 md,  slot_length = 2 r2.
struct GripperDimensions {
  double disk_radius = 0.0;       // r2 after safety factor and rounding, m
  double slot_length = 0.0;       // m
  double slider_length = 0.0;     // r4a after rounding, m
  double actuator_length = 0.0;   // Al, m
  double disk_thickness = 0.0;    // Dt, m
  double slider_thickness = 0.0;  // St, m
  double magnet_diameter = 0.0;   // md, m
  double mount_length = 0.0;      // Lgm, m
  double mount_depth = 0.0;       // Dgm, m
  double mount_height = 0.0;      // Hgm, m
  bool actuator_ok = false;
  bool payload_ok = false;
};

}  // namespace yokegrip::sizing
