#pragma once

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "yokegrip/linsolve.hpp"
#include "yokegrip/magnetics.hpp"

namespace yokegrip::mechanism {

// Governing lengths of the Scotch-Yoke pair: crank disk radius r2 and the
// guided slider length r4a. The slot that rides on the crank pin must span
// the full crank travel, so its length is fixed at 2 r2.
struct YokeGeometry {
  double disk_radius = 0.0;    // r2, m
  double slider_length = 0.0;  // r4a, m

  double slot_length() const { return 2.0 * disk_radius; }

  void validate() const {
    if (!(disk_radius > 0.0)) throw std::domain_error("YokeGeometry: disk_radius must be positive");
    if (!(slider_length > 0.0)) throw std::domain_error("YokeGeometry: slider_length must be positive");
  }
};

// Crank drive state: input angle theta2 and its time derivatives.
struct CrankState {
  double angle = 0.0;                 // theta2, rad
  double angular_velocity = 0.0;      // rad/s
  double angular_acceleration = 0.0;  // rad/s^2
};

// Loop-closure coordinates: r3 is the horizontal pin offset along the guide,
// r4 the vertical slider travel. r3^2 + r4^2 = r2^2 for every crank angle.
struct SliderPosition {
  double r3 = 0.0;
  double r4 = 0.0;
};

inline SliderPosition position(const YokeGeometry& geom, double theta2) {
  geom.validate();
  return {geom.disk_radius * std::cos(theta2), -geom.disk_radius * std::sin(theta2)};
}

struct SliderRates {
  double r3_dot = 0.0;  // m/s
  double r4_dot = 0.0;  // m/s
};

inline SliderRates velocity(const YokeGeometry& geom, const CrankState& state) {
  geom.validate();
  const double s = std::sin(state.angle), c = std::cos(state.angle);
  const double w = state.angular_velocity;
  return {-geom.disk_radius * s * w, -geom.disk_radius * c * w};
}

// Two acceleration models:
//   Simplified      -- angle-curvature term only, d^2r/dtheta^2 * theta_ddot
//   FullDerivative  -- exact second time derivative, including the
//                      rate-squared terms
// FullDerivative is the default; it is the form consistent with finite
// differences of the velocity.
enum class AccelModel { Simplified, FullDerivative };

struct SliderAccelerations {
  double r3_ddot = 0.0;  // m/s^2
  double r4_ddot = 0.0;  // m/s^2
};

inline SliderAccelerations acceleration(const YokeGeometry& geom, const CrankState& state,
                                        AccelModel model = AccelModel::FullDerivative) {
  geom.validate();
  const double s = std::sin(state.angle), c = std::cos(state.angle);
  const double w = state.angular_velocity;
  const double a = state.angular_acceleration;
  const double r2 = geom.disk_radius;
  switch (model) {
    case AccelModel::Simplified:
      return {-r2 * c * a, r2 * s * a};
    case AccelModel::FullDerivative:
      return {-r2 * c * w * w - r2 * s * a, r2 * s * w * w - r2 * c * a};
  }
  throw std::invalid_argument("acceleration: unknown model");
}

// Quasi-static joint reactions and the driving torque. F34 is the pin force
// of the crank on the slider, F14 the guide reaction, F23/F12 the pin and
// ground reactions on the crank, T2 the crank torque.
struct ForceSolution {
  double F34 = 0.0;   // N
  double F14 = 0.0;   // N
  double F23x = 0.0;  // N
  double F23y = 0.0;  // N
  double F12x = 0.0;  // N
  double F12y = 0.0;  // N
  double T2 = 0.0;    // N*m
};

// Per-link force/moment balance assembled over the unknowns
// (F34, F14, F23x, F23y, F12x, F12y, T2). The right-hand side carries the
// applied slider load F in its first entry only.
struct NewtonEulerSystem {
  std::array<std::array<double, 7>, 7> coefficients{};

  std::array<double, 7> rhs(double applied_force) const {
    return {applied_force, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0};
  }
};

inline NewtonEulerSystem newton_euler_system(const YokeGeometry& geom, double theta2) {
  geom.validate();
  const double r2c = geom.disk_radius * std::cos(theta2);  // = r3, the pin's moment arm
  const double r2s = geom.disk_radius * std::sin(theta2);
  NewtonEulerSystem sys;
  sys.coefficients = {{
      {1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},                  // slider force balance
      {-r2c, geom.slider_length, 0.0, 0.0, 0.0, 0.0, 0.0},  // slider moment balance
      {0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0},                  // pin block x balance
      {1.0, 0.0, 0.0, -1.0, 0.0, 0.0, 0.0},                 // pin block y balance
      {0.0, 0.0, -1.0, 0.0, 1.0, 0.0, 0.0},                 // crank x balance
      {0.0, 0.0, 0.0, -1.0, 0.0, 1.0, 0.0},                 // crank y balance
      {0.0, 0.0, r2c, r2s, 0.0, 0.0, 1.0},                  // crank moment balance
  }};
  return sys;
}

inline ForceSolution solve_forces(const YokeGeometry& geom, double theta2, double applied_force) {
  if (!std::isfinite(applied_force)) throw std::domain_error("solve_forces: applied force must be finite");
  const NewtonEulerSystem sys = newton_euler_system(geom, theta2);
  std::vector<double> a(49);
  for (int r = 0; r < 7; ++r)
    for (int c = 0; c < 7; ++c) a[static_cast<std::size_t>(r * 7 + c)] = sys.coefficients[r][c];
  const auto rhs = sys.rhs(applied_force);
  const std::vector<double> x = solve_dense(7, std::move(a), {rhs.begin(), rhs.end()});
  return {x[0], x[1], x[2], x[3], x[4], x[5], x[6]};
}

// Closed-form solution of the same system; the independent cross-check for
// the numeric solve.
inline ForceSolution closed_form_forces(const YokeGeometry& geom, double theta2, double applied_force) {
  geom.validate();
  const double r3 = geom.disk_radius * std::cos(theta2);
  ForceSolution f;
  f.F34 = applied_force;
  f.F14 = r3 * applied_force / geom.slider_length;
  f.F23x = 0.0;
  f.F23y = f.F34;
  f.F12x = 0.0;
  f.F12y = applied_force;
  f.T2 = -geom.disk_radius * std::sin(theta2) * applied_force;
  return f;
}

struct TorqueSample {
  double theta2 = 0.0;  // rad
  double torque = 0.0;  // N*m
};

// Samples T2 over one crank revolution, ascending theta2 in [0, 2pi).
// |T2| peaks at pi/2 and 3pi/2 with magnitude r2 * F.
inline std::vector<TorqueSample> driving_torque_profile(const YokeGeometry& geom, double applied_force,
                                                        int samples) {
  if (samples < 2) throw std::invalid_argument("driving_torque_profile: samples must be at least 2");
  geom.validate();
  std::vector<TorqueSample> profile;
  profile.reserve(static_cast<std::size_t>(samples));
  for (int k = 0; k < samples; ++k) {
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(samples);
    profile.push_back({theta, closed_form_forces(geom, theta, applied_force).T2});
  }
  return profile;
}

// Average contact force from the momentum change over the contact window.
inline double impulse_average_force(double mass, double v_initial, double v_final, double t_initial,
                                    double t_final) {
  if (mass < 0.0) throw std::domain_error("impulse_average_force: mass must be non-negative");
  if (!(t_final > t_initial)) throw std::domain_error("impulse_average_force: t_final must exceed t_initial");
  return mass * (v_final - v_initial) / (t_final - t_initial);
}

// Force needed to knock the grasped load off the magnets: the release
// condition requires at least `factor` times the grasped weight (factor
// below 1 violates it; the report layer warns).
inline double required_release_force(double grasped_mass, const magnetics::PhysicalConstants& constants = {},
                                     double factor = 1.2) {
  if (grasped_mass < 0.0) throw std::domain_error("required_release_force: mass must be non-negative");
  if (!(factor > 0.0)) throw std::domain_error("required_release_force: factor must be positive");
  constants.validate();
  return factor * grasped_mass * constants.gravity;
}

}  // namespace yokegrip::mechanism
