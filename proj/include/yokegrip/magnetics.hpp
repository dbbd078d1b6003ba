#pragma once

#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>

namespace yokegrip::magnetics {

struct PhysicalConstants {
  double gravity = 9.81;                    // m/s^2
  double permeability_mu0 = 1.25663753e-6;  // T*m/A, free-space permeability

  void validate() const {
    if (!(gravity > 0.0)) throw std::domain_error("PhysicalConstants: gravity must be positive");
    if (!(permeability_mu0 > 0.0)) throw std::domain_error("PhysicalConstants: permeability_mu0 must be positive");
  }
};

// One ring-shaped permanent magnet. All lengths in metres.
struct MagnetSpec {
  double flux_density = 0.0;    // tesla
  double outer_diameter = 0.0;  // m
  double inner_diameter = 0.0;  // m
  double thickness = 0.0;       // m
  std::string grade;            // e.g. "N35"
  std::optional<double> empirical_pull_mass;  // kg, measured pull overriding the field estimate

  // Annular face area pi/4 (od^2 - id^2).
  double face_area() const {
    return std::numbers::pi / 4.0 * (outer_diameter * outer_diameter - inner_diameter * inner_diameter);
  }

  void validate() const {
    if (!(flux_density > 0.0)) throw std::domain_error("MagnetSpec: flux_density must be positive");
    if (!(inner_diameter >= 0.0)) throw std::domain_error("MagnetSpec: inner_diameter must be non-negative");
    if (!(outer_diameter > inner_diameter))
      throw std::domain_error("MagnetSpec: outer_diameter must exceed inner_diameter");
    if (!(thickness > 0.0)) throw std::domain_error("MagnetSpec: thickness must be positive");
    if (empirical_pull_mass && !(*empirical_pull_mass > 0.0))
      throw std::domain_error("MagnetSpec: empirical_pull_mass must be positive when given");
  }
};

struct MagnetArray {
  MagnetSpec magnet;
  int count = 1;
  double spacing = 0.0;  // side of the mounting triangle, m; metadata only
  std::string layout;    // e.g. "equilateral triangle"

  void validate() const {
    magnet.validate();
    if (count < 1) throw std::domain_error("MagnetArray: count must be at least 1");
    if (!(spacing > 0.0)) throw std::domain_error("MagnetArray: spacing must be positive");
  }
};

// Field-based pull estimate B^2 A / (2 g mu0) in kilograms. Zero field is
// allowed (zero pull); a negative field or non-positive face area is not.
inline double theoretical_pull_mass(const MagnetSpec& magnet, const PhysicalConstants& constants = {}) {
  constants.validate();
  const double b = magnet.flux_density;
  const double area = magnet.face_area();
  if (b < 0.0) throw std::domain_error("theoretical_pull_mass: flux_density must be non-negative");
  if (!(area > 0.0)) throw std::domain_error("theoretical_pull_mass: face area must be positive");
  return b * b * area / (2.0 * constants.gravity * constants.permeability_mu0);
}

struct EffectivePull {
  double mass = 0.0;          // kg per magnet
  double derate_ratio = 1.0;  // measured / field estimate (1 when no measurement given)
};

inline EffectivePull effective_pull(const MagnetSpec& magnet, const PhysicalConstants& constants = {}) {
  const double theoretical = theoretical_pull_mass(magnet, constants);
  if (!magnet.empirical_pull_mass) return {theoretical, 1.0};
  const double measured = *magnet.empirical_pull_mass;
  if (!(measured > 0.0)) throw std::domain_error("effective_pull: empirical_pull_mass must be positive");
  return {measured, measured / theoretical};
}

inline double effective_pull_mass(const MagnetSpec& magnet, const PhysicalConstants& constants = {}) {
  return effective_pull(magnet, constants).mass;
}

// Independent-magnet assumption: the array carries count times the single
// pull. Spacing is stored but does not modify capacity.
inline double array_capacity(const MagnetArray& array, const PhysicalConstants& constants = {}) {
  array.validate();
  return static_cast<double>(array.count) * effective_pull_mass(array.magnet, constants);
}

struct PayloadMargin {
  double capacity = 0.0;  // kg
  double payload = 0.0;   // kg
  double ratio = 0.0;     // capacity / payload, +inf for zero payload
  bool pass = false;      // ratio >= 1
};

inline PayloadMargin payload_margin(const MagnetArray& array, double payload_mass,
                                    const PhysicalConstants& constants = {}) {
  if (payload_mass < 0.0) throw std::domain_error("payload_margin: payload_mass must be non-negative");
  const double capacity = array_capacity(array, constants);
  PayloadMargin m;
  m.capacity = capacity;
  m.payload = payload_mass;
  m.ratio = payload_mass == 0.0 ? std::numeric_limits<double>::infinity() : capacity / payload_mass;
  m.pass = capacity >= payload_mass;
  return m;
}

}  // namespace yokegrip::magnetics
