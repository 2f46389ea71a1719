#pragma once
#include <Eigen/Dense>
#include <string>
#include <vector>

#include "cgme/config.hpp"

namespace cgme {

// Parsed run configuration (JSON file with strict key checking).
struct RunConfig {
  SystemConfig system;
  Mode mode = Mode::exact;
  double rel_tol = 1e-9;

  // task block (used by `evolve`)
  std::string initial_state = "product_mp";  // product_mp | bell | custom
  Eigen::Matrix4cd custom_rho = Eigen::Matrix4cd::Zero();
  double t_max = 10.0;
  int n_points = 101;
};

RunConfig load_run_config(const std::string& path);

// Initial-state presets; "custom" takes the matrix from the config.
Eigen::Matrix4cd initial_state_matrix(const RunConfig& rc);

// Discrepancy registry: known, measured closed-form-vs-oracle normalization
// mismatches that the verifier must recognize instead of failing on.
struct DiscrepancyEntry {
  std::string id;
  std::vector<std::string> formulas;
  double measured_factor = 1.0;
  double tolerance = 1e-6;
  std::string note;
};

std::vector<DiscrepancyEntry> load_registry(const std::string& path);
std::string default_registry_path();  // CGME_REGISTRY env var, else built-in
const DiscrepancyEntry* find_registry_entry(const std::vector<DiscrepancyEntry>& reg,
                                            const std::string& formula, double factor);

// Subcommand bodies (throw cgme exceptions; run_cli maps them to exit codes).
int cmd_kossakowski(const RunConfig& rc, const std::string& out_path);
int cmd_evolve(const RunConfig& rc, const std::string& out_path);
int cmd_entangle(const RunConfig& rc, const std::string& criterion,
                 const std::string& out_path);
int cmd_sweep(const RunConfig& rc, const std::vector<std::string>& axis_specs,
              const std::string& criterion, const std::string& out_path,
              bool extract_boundary);
int cmd_verify(const std::string& suite, const std::string& registry_path);

// Full argv entry point; returns the process exit code:
// 0 success, 2 configuration error, 3 numerical failure,
// 4 unregistered closed-form discrepancy.
int run_cli(int argc, char** argv);

}  // namespace cgme
