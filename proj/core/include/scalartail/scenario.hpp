#pragma once

#include <string>

#include "scalartail/dynamics.hpp"

namespace scalartail {

// Flat JSON scenario configuration (no includes, no hidden defaults beyond
// the ones documented in the README).
struct Scenario {
  ChargeParams charge;
  ExternalPotential external;
  FourVector initial_position;
  std::array<double, 3> initial_velocity{};  // 3-velocity, |v| < 1
  double tau0 = 0.0;
  IntegrateOptions integration;
  std::string trajectory_file = "trajectory.csv";
  std::string flows_file = "flows.csv";
  std::string summary_file = "summary.json";

  static Scenario from_json_file(const std::string& path);
  static Scenario from_json_text(const std::string& text);
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitNumericalFailure = 3;

// Runs the scenario and writes trajectory/flow CSVs plus a JSON summary into
// out_dir. Returns kExitOk, kExitConfigError or kExitNumericalFailure.
int run_scenario(const std::string& config_path, const std::string& out_dir);

// Field-map sweep driven by its own config (worldline descriptor + points).
int run_fieldmap(const std::string& config_path, const std::string& out_dir,
                 int threads = 1);

}  // namespace scalartail
