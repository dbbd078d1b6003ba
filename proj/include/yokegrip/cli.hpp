#pragma once

#include <algorithm>
#include <fstream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "yokegrip/config.hpp"
#include "yokegrip/design.hpp"
#include "yokegrip/report.hpp"

namespace yokegrip::cli {

// Exit codes: 0 analysis ran (even when a feasibility or reproduction check
// reports FAIL), 1 usage error, 2 config error, 3 numerical failure.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitNumerical = 3;

namespace detail {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Output goes to --out when given, stdout otherwise. Content is rendered
// before the file is opened, so a failed analysis never leaves a partial
// file behind.
inline int write_output(const std::string& content, const std::string& out_path, std::ostream& out,
                        std::ostream& err) {
  if (out_path.empty()) {
    out << content;
    return kExitOk;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) {
    err << "yokegrip: cannot open output file '" << out_path << "'\n";
    return kExitUsage;
  }
  file << content;
  file.flush();
  if (!file.good()) {
    err << "yokegrip: failed while writing '" << out_path << "'\n";
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace detail

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sizing toolkit for a magnet-grasp, impulse-release Scotch-Yoke aerial gripper"};
  app.name("yokegrip");
  app.require_subcommand(0, 1);

  std::string config_path;
  app.add_option("--config", config_path,
                 "Design configuration file (key = value); built-in reference design when omitted");

  std::string cap_format = "text", cap_out;
  CLI::App* cap = app.add_subcommand("capacity", "Magnet pull capacity and payload margin");
  cap->add_option("--format", cap_format, "text or csv")->check(CLI::IsMember({"text", "csv"}));
  cap->add_option("--out", cap_out, "Write to this file instead of stdout");

  double opt_w1 = 0.0;
  bool opt_sweep = false;
  std::string opt_format = "csv", opt_out;
  CLI::App* opt = app.add_subcommand("optimize", "Crank sizing by weighted geometric programming");
  CLI::Option* opt_weights = opt->add_option("--weights", opt_w1, "Weight w1 on the area objective (w2 = 1 - w1)");
  opt->add_flag("--sweep", opt_sweep, "Emit all nine weight rows (w1 = 0.1 .. 0.9)");
  opt->add_option("--format", opt_format, "csv or text")->check(CLI::IsMember({"text", "csv"}));
  opt->add_option("--out", opt_out, "Write to this file instead of stdout");

  int torque_samples = 360;
  std::string torque_out;
  CLI::App* torque = app.add_subcommand("torque-profile", "Driving torque over one crank revolution (CSV)");
  torque->add_option("--samples", torque_samples, "Number of crank angles in [0, 2pi) (default 360)");
  torque->add_option("--out", torque_out, "Write to this file instead of stdout");

  std::string design_format = "text", design_out;
  CLI::App* design = app.add_subcommand("design", "Full dimension report with feasibility flags");
  design->add_option("--format", design_format, "text or csv")->check(CLI::IsMember({"text", "csv"}));
  design->add_option("--out", design_out, "Write to this file instead of stdout");

  std::string repro_out;
  CLI::App* repro =
      app.add_subcommand("reproduce", "Re-derive the reference design and diff against the pinned values");
  repro->add_option("--out", repro_out, "Write to this file instead of stdout");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (app.get_subcommands().empty()) {
      out << app.help();
      return kExitOk;
    }

    const config::DesignConfig cfg =
        config_path.empty() ? config::DesignConfig::reference() : config::DesignConfig::from_file(config_path);

    if (cap->parsed()) {
      const std::string content = cap_format == "csv" ? report::capacity_csv(cfg) : report::capacity_text(cfg);
      return detail::write_output(content, cap_out, out, err);
    }

    if (opt->parsed()) {
      const bool have_weights = opt_weights->count() > 0;
      if (have_weights == opt_sweep)
        throw detail::UsageError("optimize needs exactly one of --weights or --sweep");
      const double force = sizing::design_release_force(cfg);
      std::vector<report::OptimizePair> rows;
      if (opt_sweep) {
        for (int i = 1; i <= 9; ++i)
          rows.push_back(report::optimize_pair(static_cast<double>(i) / 10.0,
                                               static_cast<double>(10 - i) / 10.0, force));
      } else {
        if (!(opt_w1 > 0.0 && opt_w1 < 1.0))
          throw detail::UsageError("--weights must lie strictly between 0 and 1");
        rows.push_back(report::optimize_pair(opt_w1, 1.0 - opt_w1, force));
      }
      const std::string content =
          opt_format == "text" ? report::optimize_text(rows, force) : report::optimize_csv(rows);
      return detail::write_output(content, opt_out, out, err);
    }

    if (torque->parsed()) {
      if (torque_samples < 2) throw detail::UsageError("--samples must be at least 2");
      const auto full = sizing::full_design_report(cfg);
      const mechanism::YokeGeometry geom{full.dims.disk_radius, full.dims.slider_length};
      const auto profile = mechanism::driving_torque_profile(geom, full.design_release_force, torque_samples);
      return detail::write_output(report::torque_profile_csv(profile), torque_out, out, err);
    }

    if (design->parsed()) {
      const auto full = sizing::full_design_report(cfg);
      const std::string content = design_format == "csv" ? report::design_csv(full) : report::design_text(full);
      return detail::write_output(content, design_out, out, err);
    }

    if (repro->parsed()) {
      const auto outcome = report::reproduce(cfg);
      return detail::write_output(outcome.text, repro_out, out, err);
    }

    out << app.help();
    return kExitOk;
  } catch (const detail::UsageError& e) {
    err << "yokegrip: " << e.what() << "\n";
    return kExitUsage;
  } catch (const config::ConfigError& e) {
    err << "yokegrip: config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "yokegrip: analysis failed: " << e.what() << "\n";
    return kExitNumerical;
  }
}

}  // namespace yokegrip::cli
