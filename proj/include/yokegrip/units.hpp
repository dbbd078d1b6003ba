#pragma once

#include <cmath>
#include <string>

namespace yokegrip {

// Hobby-servo torque ratings are quoted in kg*cm; everything internal is N*m.
inline constexpr double kNewtonMetersPerKgCm = 0.0980665;

inline double kg_cm_to_newton_meters(double kg_cm) { return kg_cm * kNewtonMetersPerKgCm; }
inline double newton_meters_to_kg_cm(double nm) { return nm / kNewtonMetersPerKgCm; }

inline double meters_to_cm(double m) { return m * 100.0; }
inline double cm_to_meters(double cm) { return cm / 100.0; }

// Snaps a length to the nearest fabrication increment (default half-centimetre).
inline double round_to_increment(double value, double increment) {
  return increment * std::round(value / increment);
}

}  // namespace yokegrip
