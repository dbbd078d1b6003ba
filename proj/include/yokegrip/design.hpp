#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "yokegrip/config.hpp"
#include "yokegrip/gp.hpp"
#include "yokegrip/magnetics.hpp"
#include "yokegrip/mechanism.hpp"
#include "yokegrip/sizing.hpp"

namespace yokegrip::sizing {

// Everything the design pipeline produces, stage by stage.
struct DesignReport {
  // magnet capacity
  double theoretical_pull = 0.0;  // kg per magnet, field estimate
  double effective_pull = 0.0;    // kg per magnet, after measured derating
  double derate_ratio = 1.0;
  double array_capacity = 0.0;  // kg
  magnetics::PayloadMargin payload;

  // release force
  double release_factor = 0.0;
  double required_release_force = 0.0;  // N, factor * capacity * g
  double design_release_force = 0.0;    // N, value driving the optimization

  // crank optimization (raw optima, metres)
  gp::RecipeRow recipe;           // fixed-multiplier reference recipe
  gp::RecipeRow optimum;          // rigorous dual maximization
  double optimum_log_residual = 0.0;

  // sizing
  double safety_factor = 0.0;
  SafetyAdjustedLength disk_radius;    // recipe r2 shrunk and snapped
  SafetyAdjustedLength slider_length;  // recipe r4a snapped (factor 1)
  double impact_speed = 0.0;           // m/s
  double contact_duration = 0.0;       // s
  double moving_mass = 0.0;            // kg, from the impulse relation
  double disk_thickness_computed = 0.0;    // m
  double slider_thickness_computed = 0.0;  // m

  GripperDimensions dims;  // emitted dimensions (default thicknesses)
  ActuatorFeasibility actuator;
  std::vector<std::string> warnings;
};

// Release force driving the optimization and the actuator check: the derived
// requirement rounded up to a whole newton (so the release condition always
// holds after rounding), unless the config pins an explicit override.
inline double design_release_force(const config::DesignConfig& cfg) {
  const double required = mechanism::required_release_force(
      magnetics::array_capacity(cfg.array(), cfg.constants), cfg.constants, cfg.release_factor);
  return cfg.release_force_override.value_or(std::ceil(required));
}

// Chains capacity -> release force -> crank optimization -> safety factor ->
// impulse thickness -> mount formulas -> feasibility. The emitted dimensions
// use the configured default thicknesses; the impulse-derived values are
// reported alongside for comparison.
inline DesignReport full_design_report(const config::DesignConfig& cfg) {
  cfg.validate();
  DesignReport r;

  const magnetics::MagnetArray array = cfg.array();
  const magnetics::EffectivePull pull = magnetics::effective_pull(array.magnet, cfg.constants);
  r.theoretical_pull = magnetics::theoretical_pull_mass(array.magnet, cfg.constants);
  r.effective_pull = pull.mass;
  r.derate_ratio = pull.derate_ratio;
  r.array_capacity = magnetics::array_capacity(array, cfg.constants);
  r.payload = magnetics::payload_margin(array, cfg.payload_mass, cfg.constants);

  r.release_factor = cfg.release_factor;
  r.required_release_force =
      mechanism::required_release_force(r.array_capacity, cfg.constants, cfg.release_factor);
  if (cfg.release_factor < 1.0)
    r.warnings.push_back("release.factor below 1 violates the release condition (force < grasped weight)");
  r.design_release_force = design_release_force(cfg);

  const gp::RecipeResult recipe = gp::fixed_multiplier_recipe(cfg.gp_weight_w1, 1.0 - cfg.gp_weight_w1,
                                                              r.design_release_force);
  r.recipe = recipe.row;
  const gp::StandardGP standard =
      gp::scalarize(gp::crank_sizing_problem(cfg.gp_weight_w1, 1.0 - cfg.gp_weight_w1, r.design_release_force));
  const gp::DualSolution opt_dual = gp::maximize_dual(gp::build_dual(standard));
  const gp::PrimalSolution opt_primal = gp::recover_primal(opt_dual, standard);
  r.optimum = {cfg.gp_weight_w1, 1.0 - cfg.gp_weight_w1, opt_primal.variables.at("r2"),
               opt_primal.variables.at("r4a"), opt_dual.value};
  r.optimum_log_residual = opt_primal.log_residual.value_or(0.0);

  r.safety_factor = cfg.safety_factor;
  r.disk_radius = apply_safety_factor(r.recipe.r2, cfg.safety_factor, cfg.rounding_increment);
  r.slider_length = apply_safety_factor(r.recipe.r4a, 1.0, cfg.rounding_increment);

  const double r2_final = r.disk_radius.rounded;
  const double r4a_final = r.slider_length.rounded;

  ImpactModel impact;
  impact.slider_impact_speed = cfg.impact_speed_override.value_or(r2_final * cfg.actuator.angular_speed);
  impact.contact_duration = cfg.impact_contact_duration;
  impact.velocity_change = impact.slider_impact_speed;
  r.impact_speed = impact.slider_impact_speed;
  r.contact_duration = impact.contact_duration;
  r.moving_mass = moving_mass_from_impulse(r.design_release_force, impact);
  r.disk_thickness_computed = disk_thickness(r.moving_mass, r2_final, cfg.material);
  r.slider_thickness_computed = slider_thickness(r.moving_mass, r4a_final * (2.0 * r2_final), cfg.material);
  if (r.disk_thickness_computed > cfg.default_disk_thickness ||
      r.slider_thickness_computed > cfg.default_slider_thickness)
    r.warnings.push_back(
        "impulse-derived thickness exceeds the configured default; the emitted dimensions keep the default");

  r.dims.disk_radius = r2_final;
  r.dims.slot_length = 2.0 * r2_final;
  r.dims.slider_length = r4a_final;
  r.dims.actuator_length = cfg.actuator.body_length;
  r.dims.disk_thickness = cfg.default_disk_thickness;
  r.dims.slider_thickness = cfg.default_slider_thickness;
  r.dims.magnet_diameter = cfg.magnet.outer_diameter;
  const MountDimensions mount =
      mount_dimensions(r.dims.disk_radius, r.dims.slider_length, r.dims.actuator_length,
                       r.dims.disk_thickness, r.dims.slider_thickness, r.dims.magnet_diameter);
  r.dims.mount_length = mount.length;
  r.dims.mount_height = mount.height;
  r.dims.mount_depth = mount.depth;

  r.actuator = actuator_feasibility({r2_final, r4a_final}, r.design_release_force, cfg.actuator);
  r.dims.actuator_ok = r.actuator.pass;
  r.dims.payload_ok = r.payload.pass;
  return r;
}

}  // namespace yokegrip::sizing
