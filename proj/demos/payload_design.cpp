// Sizes a gripper for a heavier payload than the reference design: stronger
// magnets, a 4 kg brick, and a beefier servo. Build and run:
//   cmake --build build --target payload_design && ./build/demos/payload_design

#include <iostream>

#include "yokegrip/config.hpp"
#include "yokegrip/design.hpp"
#include "yokegrip/report.hpp"
#include "yokegrip/units.hpp"

int main() {
  using namespace yokegrip;

  config::DesignConfig cfg = config::DesignConfig::reference();
  cfg.magnet.empirical_pull_mass = 3.5;  // measured pull of the larger magnet, kg
  cfg.magnet.outer_diameter = 0.032;
  cfg.payload_mass = 4.0;
  cfg.actuator.torque_rating = kg_cm_to_newton_meters(35.0);

  const sizing::DesignReport report = sizing::full_design_report(cfg);
  std::cout << report::design_text(report);
  return report.dims.actuator_ok && report.dims.payload_ok ? 0 : 1;
}
