#pragma once

#include <array>
#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "yokegrip/config.hpp"
#include "yokegrip/design.hpp"
#include "yokegrip/format.hpp"
#include "yokegrip/gp.hpp"
#include "yokegrip/mechanism.hpp"
#include "yokegrip/units.hpp"

namespace yokegrip::report {

// Pinned regression values for the shipped reference design: the nine-row
// weight sweep (w1, w2, r2, r4a, V) and the ten emitted dimensions in cm.
// `reproduce` re-derives both and diffs against these.
inline constexpr double kPinnedWeightSweep[9][5] = {
    {0.1, 0.9, 0.0655802278, 0.2623209111, 0.1032183906},
    {0.2, 0.8, 0.07077726, 0.2831090401, 0.1202260929},
    {0.3, 0.7, 0.0724288584, 0.2897154336, 0.1259025487},
    {0.4, 0.6, 0.0721803804, 0.2887215215, 0.1250401754},
    {0.5, 0.5, 0.0704980471, 0.2819921883, 0.1192793914},
    {0.6, 0.4, 0.0674637726, 0.2698550902, 0.1092326546},
    {0.7, 0.3, 0.0628900842, 0.2515603366, 0.0949239044},
    {0.8, 0.2, 0.0561759485, 0.224703794, 0.0757376926},
    {0.9, 0.1, 0.0454707903, 0.1818831612, 0.0496222265},
};

inline constexpr double kPinnedDimensionsCm[10] = {2.5, 5.0, 18.0, 3.0, 2.5, 2.5, 2.5, 10.0, 13.0, 23.0};

inline constexpr const char* kDimensionLabels[10] = {
    "Radius of the rotating disk (r2)",
    "Length of the slot in the slider",
    "Length of the slider (r4a)",
    "Length of the actuator (Al)",
    "Thickness of the disk (Dt)",
    "Thickness of the slider (St)",
    "Diameter of the permanent magnet (md)",
    "Length of the gripper mount (Lgm)",
    "Depth of the gripper mount (Dgm)",
    "Height of the gripper mount (Hgm)",
};

inline constexpr const char* kDimensionFields[10] = {
    "disk_radius_r2", "slot_length",       "slider_length_r4a", "actuator_length_Al", "disk_thickness_Dt",
    "slider_thickness_St", "magnet_diameter_md", "mount_length_Lgm", "mount_depth_Dgm", "mount_height_Hgm",
};

inline std::array<double, 10> dimensions_cm(const sizing::GripperDimensions& d) {
  return {meters_to_cm(d.disk_radius),      meters_to_cm(d.slot_length),      meters_to_cm(d.slider_length),
          meters_to_cm(d.actuator_length),  meters_to_cm(d.disk_thickness),   meters_to_cm(d.slider_thickness),
          meters_to_cm(d.magnet_diameter),  meters_to_cm(d.mount_length),     meters_to_cm(d.mount_depth),
          meters_to_cm(d.mount_height)};
}

namespace detail {

inline std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// capacity
// ---------------------------------------------------------------------------

inline std::string capacity_text(const config::DesignConfig& cfg) {
  const auto array = cfg.array();
  const auto pull = magnetics::effective_pull(array.magnet, cfg.constants);
  const double theoretical = magnetics::theoretical_pull_mass(array.magnet, cfg.constants);
  const auto margin = magnetics::payload_margin(array, cfg.payload_mass, cfg.constants);

  std::ostringstream os;
  os << "Magnet capacity\n";
  os << "  field-estimate pull per magnet   " << fmt_sig6(theoretical) << " kg\n";
  os << "  effective pull per magnet        " << fmt_sig6(pull.mass) << " kg (derate ratio "
     << fmt_sig6(pull.derate_ratio) << ")\n";
  os << "  array capacity (" << array.count << " magnets)       " << fmt_sig6(margin.capacity) << " kg\n";
  os << "  payload                          " << fmt_sig6(margin.payload) << " kg\n";
  os << "  margin ratio                     " << fmt_sig6(margin.ratio)
     << (std::isinf(margin.ratio) ? " (no payload)" : "") << "\n";
  os << "  payload check                    " << (margin.pass ? "PASS" : "FAIL") << "\n";
  return os.str();
}

inline std::string capacity_csv(const config::DesignConfig& cfg) {
  const auto array = cfg.array();
  const auto pull = magnetics::effective_pull(array.magnet, cfg.constants);
  const double theoretical = magnetics::theoretical_pull_mass(array.magnet, cfg.constants);
  const auto margin = magnetics::payload_margin(array, cfg.payload_mass, cfg.constants);

  std::ostringstream os;
  os << "field,value\n";
  os << "theoretical_pull_kg," << fmt_full(theoretical) << "\n";
  os << "effective_pull_kg," << fmt_full(pull.mass) << "\n";
  os << "derate_ratio," << fmt_full(pull.derate_ratio) << "\n";
  os << "magnet_count," << array.count << "\n";
  os << "array_capacity_kg," << fmt_full(margin.capacity) << "\n";
  os << "payload_kg," << fmt_full(margin.payload) << "\n";
  os << "margin_ratio," << fmt_full(margin.ratio) << "\n";
  os << "payload_ok," << (margin.pass ? 1 : 0) << "\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// optimize
// ---------------------------------------------------------------------------

struct OptimizePair {
  gp::RecipeRow recipe;
  gp::RecipeRow optimum;
};

inline OptimizePair optimize_pair(double w1, double w2, double release_force) {
  OptimizePair pair;
  pair.recipe = gp::fixed_multiplier_recipe(w1, w2, release_force).row;
  const gp::StandardGP standard = gp::scalarize(gp::crank_sizing_problem(w1, w2, release_force));
  const gp::DualSolution dual = gp::maximize_dual(gp::build_dual(standard));
  const gp::PrimalSolution primal = gp::recover_primal(dual, standard);
  pair.optimum = {w1, w2, primal.variables.at("r2"), primal.variables.at("r4a"), dual.value};
  return pair;
}

inline std::string optimize_csv(const std::vector<OptimizePair>& rows) {
  std::ostringstream os;
  os << "w1,w2,r2_m,r4a_m,V,r2_opt_m,r4a_opt_m,V_opt\n";
  for (const auto& row : rows) {
    os << fmt_full(row.recipe.w1) << ',' << fmt_full(row.recipe.w2) << ',' << fmt_full(row.recipe.r2) << ','
       << fmt_full(row.recipe.r4a) << ',' << fmt_full(row.recipe.dual_value) << ',' << fmt_full(row.optimum.r2)
       << ',' << fmt_full(row.optimum.r4a) << ',' << fmt_full(row.optimum.dual_value) << "\n";
  }
  return os.str();
}

inline std::string optimize_text(const std::vector<OptimizePair>& rows, double release_force) {
  std::ostringstream os;
  os << "Crank sizing (release force " << fmt_sig6(release_force) << " N)\n";
  os << "  " << detail::pad("w1", 6) << detail::pad("w2", 6) << detail::pad("r2 [m]", 12)
     << detail::pad("r4a [m]", 12) << detail::pad("V", 12) << detail::pad("r2* [m]", 12)
     << detail::pad("r4a* [m]", 12) << "V*\n";
  for (const auto& row : rows) {
    os << "  " << detail::pad(fmt_sig6(row.recipe.w1), 6) << detail::pad(fmt_sig6(row.recipe.w2), 6)
       << detail::pad(fmt_sig6(row.recipe.r2), 12) << detail::pad(fmt_sig6(row.recipe.r4a), 12)
       << detail::pad(fmt_sig6(row.recipe.dual_value), 12) << detail::pad(fmt_sig6(row.optimum.r2), 12)
       << detail::pad(fmt_sig6(row.optimum.r4a), 12) << fmt_sig6(row.optimum.dual_value) << "\n";
  }
  os << "  (starred columns: rigorous dual maximization instead of the fixed-multiplier recipe)\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// torque profile
// ---------------------------------------------------------------------------

inline std::string torque_profile_csv(const std::vector<mechanism::TorqueSample>& profile) {
  std::ostringstream os;
  os << "theta2_rad,T2_Nm\n";
  for (const auto& s : profile) os << fmt_full(s.theta2) << ',' << fmt_full(s.torque) << "\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// design
// ---------------------------------------------------------------------------

inline std::string design_text(const sizing::DesignReport& r) {
  std::ostringstream os;
  os << "Gripper design report\n";
  os << "=====================\n\n";

  os << "Magnet capacity\n";
  os << "  field-estimate pull per magnet   " << fmt_sig6(r.theoretical_pull) << " kg\n";
  os << "  effective pull per magnet        " << fmt_sig6(r.effective_pull) << " kg (derate ratio "
     << fmt_sig6(r.derate_ratio) << ")\n";
  os << "  array capacity                   " << fmt_sig6(r.array_capacity) << " kg\n";
  os << "  payload " << fmt_sig6(r.payload.payload) << " kg, margin " << fmt_sig6(r.payload.ratio) << "  "
     << (r.payload.pass ? "PASS" : "FAIL") << "\n\n";

  os << "Release force\n";
  os << "  required (" << fmt_sig6(r.release_factor) << " x grasped weight)  "
     << fmt_sig6(r.required_release_force) << " N\n";
  os << "  design value                     " << fmt_sig6(r.design_release_force) << " N\n\n";

  os << "Crank optimization (w1 = " << fmt_sig6(r.recipe.w1) << ", w2 = " << fmt_sig6(r.recipe.w2) << ")\n";
  os << "  recipe    r2 = " << fmt_sig6(r.recipe.r2) << " m   r4a = " << fmt_sig6(r.recipe.r4a)
     << " m   V = " << fmt_sig6(r.recipe.dual_value) << "\n";
  os << "  optimum   r2 = " << fmt_sig6(r.optimum.r2) << " m   r4a = " << fmt_sig6(r.optimum.r4a)
     << " m   V = " << fmt_sig6(r.optimum.dual_value) << "\n\n";

  os << "Dimensions (safety factor " << fmt_sig6(r.safety_factor) << " on the disk radius)\n";
  os << "  " << detail::pad("Component", 42) << "Dimension (cm)\n";
  const auto cm = dimensions_cm(r.dims);
  for (std::size_t i = 0; i < cm.size(); ++i)
    os << "  " << detail::pad(kDimensionLabels[i], 42) << fmt_sig6(cm[i]) << "\n";
  os << "\n";

  os << "Impulse sizing (impact " << fmt_sig6(r.impact_speed) << " m/s, contact "
     << fmt_sig6(r.contact_duration) << " s)\n";
  os << "  moving mass                      " << fmt_sig6(r.moving_mass) << " kg\n";
  os << "  disk thickness (computed)        " << fmt_sig6(meters_to_cm(r.disk_thickness_computed)) << " cm\n";
  os << "  slider thickness (computed)      " << fmt_sig6(meters_to_cm(r.slider_thickness_computed))
     << " cm\n";
  os << "  emitted thicknesses              " << fmt_sig6(meters_to_cm(r.dims.disk_thickness)) << " / "
     << fmt_sig6(meters_to_cm(r.dims.slider_thickness)) << " cm (configured defaults)\n\n";

  os << "Feasibility\n";
  os << "  actuator  required " << fmt_sig6(newton_meters_to_kg_cm(r.actuator.required_torque))
     << " kg*cm <= rated " << fmt_sig6(newton_meters_to_kg_cm(r.actuator.available_torque)) << " kg*cm  "
     << (r.actuator.pass ? "PASS" : "FAIL") << " (margin " << fmt_sig6(r.actuator.margin) << ")\n";
  os << "  payload   capacity " << fmt_sig6(r.array_capacity) << " kg vs payload "
     << fmt_sig6(r.payload.payload) << " kg  " << (r.payload.pass ? "PASS" : "FAIL") << "\n";

  if (!r.warnings.empty()) {
    os << "\nWarnings\n";
    for (const auto& w : r.warnings) os << "  - " << w << "\n";
  }
  return os.str();
}

inline std::string design_csv(const sizing::DesignReport& r) {
  std::ostringstream os;
  os << "field,value,unit\n";
  const auto cm = dimensions_cm(r.dims);
  for (std::size_t i = 0; i < cm.size(); ++i) os << kDimensionFields[i] << ',' << fmt_full(cm[i]) << ",cm\n";
  os << "recipe_r2," << fmt_full(r.recipe.r2) << ",m\n";
  os << "recipe_r4a," << fmt_full(r.recipe.r4a) << ",m\n";
  os << "recipe_V," << fmt_full(r.recipe.dual_value) << ",1\n";
  os << "optimum_r2," << fmt_full(r.optimum.r2) << ",m\n";
  os << "optimum_r4a," << fmt_full(r.optimum.r4a) << ",m\n";
  os << "optimum_V," << fmt_full(r.optimum.dual_value) << ",1\n";
  os << "theoretical_pull," << fmt_full(r.theoretical_pull) << ",kg\n";
  os << "effective_pull," << fmt_full(r.effective_pull) << ",kg\n";
  os << "derate_ratio," << fmt_full(r.derate_ratio) << ",1\n";
  os << "array_capacity," << fmt_full(r.array_capacity) << ",kg\n";
  os << "payload_mass," << fmt_full(r.payload.payload) << ",kg\n";
  os << "payload_margin," << fmt_full(r.payload.ratio) << ",1\n";
  os << "payload_ok," << (r.payload.pass ? 1 : 0) << ",flag\n";
  os << "required_release_force," << fmt_full(r.required_release_force) << ",N\n";
  os << "design_release_force," << fmt_full(r.design_release_force) << ",N\n";
  os << "moving_mass," << fmt_full(r.moving_mass) << ",kg\n";
  os << "disk_thickness_computed," << fmt_full(r.disk_thickness_computed) << ",m\n";
  os << "slider_thickness_computed," << fmt_full(r.slider_thickness_computed) << ",m\n";
  os << "actuator_required_torque," << fmt_full(newton_meters_to_kg_cm(r.actuator.required_torque))
     << ",kg_cm\n";
  os << "actuator_available_torque," << fmt_full(newton_meters_to_kg_cm(r.actuator.available_torque))
     << ",kg_cm\n";
  os << "actuator_margin," << fmt_full(r.actuator.margin) << ",1\n";
  os << "actuator_ok," << (r.actuator.pass ? 1 : 0) << ",flag\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// reproduce
// ---------------------------------------------------------------------------

struct ReproduceOutcome {
  std::string text;
  int passed = 0;
  int total = 0;
};

inline ReproduceOutcome reproduce(const config::DesignConfig& cfg) {
  ReproduceOutcome outcome;
  std::ostringstream os;
  os << "Reference reproduction checks\n";
  auto record = [&](bool ok, const std::string& line) {
    os << "  [" << (ok ? "PASS" : "FAIL") << "] " << line << "\n";
    outcome.total += 1;
    if (ok) outcome.passed += 1;
  };

  const double pull = magnetics::theoretical_pull_mass(cfg.magnet, cfg.constants);
  record(std::fabs(pull - 4.66) <= 0.01,
         "pull capacity: field estimate " + fmt_sig6(pull) + " kg within 0.01 of 4.66");

  const auto sweep = gp::recipe_weight_sweep();
  double max_err = 0.0;
  for (std::size_t i = 0; i < sweep.size(); ++i) {
    max_err = std::max(max_err, std::fabs(sweep[i].r2 - kPinnedWeightSweep[i][2]));
    max_err = std::max(max_err, std::fabs(sweep[i].r4a - kPinnedWeightSweep[i][3]));
    max_err = std::max(max_err, std::fabs(sweep[i].dual_value - kPinnedWeightSweep[i][4]));
  }
  record(max_err <= 1e-6,
         "sizing sweep: all 27 pinned values reproduced (max abs deviation " + fmt_sig6(max_err) + ")");

  const auto report = sizing::full_design_report(cfg);
  const auto cm = dimensions_cm(report.dims);
  double dim_err = 0.0;
  for (std::size_t i = 0; i < cm.size(); ++i) dim_err = std::max(dim_err, std::fabs(cm[i] - kPinnedDimensionsCm[i]));
  record(dim_err <= 1e-9,
         "dimension report: all 10 pinned dimensions reproduced (max abs deviation " + fmt_sig6(dim_err) +
             " cm)");

  os << "summary: " << outcome.passed << "/" << outcome.total << " checks passed\n";
  outcome.text = os.str();
  return outcome;
}

}  // namespace yokegrip::report
