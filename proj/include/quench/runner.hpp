#pragma once

#include <filesystem>
#include <string>

#include "quench/distribution.hpp"
#include "quench/types.hpp"

namespace quench {

// Resolved parameters of one CLI run. Every command writes a metadata JSON
// echoing all of these, so a run can be reproduced from its metadata alone.
struct RunConfig {
  std::string command;  // series | moments | spectrum | distribution | sweep |
                        // thermo | magnetization | verify
  QuenchSpec spec{1.0, 1.5, 100};

  // sampling
  double horizon = 0.0;  // 0 -> default max(1e4, 1000 L)
  std::int64_t samples = 0;  // 0 -> per-command default
  std::uint64_t seed = 1;
  int bins = 50;

  // series/thermo/magnetization grids
  double t_max = 50.0;

  // sweep grid: [grid_min, grid_max] x same, grid_steps points per axis
  double grid_min = -2.0;
  double grid_max = 2.0;
  int grid_steps = 21;

  // moments
  int n_max = 6;

  // spectral
  double merge_tol = -1.0;  // < 0 -> default 1e-9 E_M
  double prune_tol = kDefaultPruneTol;

  RegimeThresholds thresholds;

  std::filesystem::path out_dir = ".";
  int workers = 0;  // 0 -> QUENCH_WORKERS env or hardware_concurrency

  std::string to_json() const;
  static RunConfig from_json(const std::string& text);
};

// Executes cfg.command; writes CSV data + <command>_meta.json under
// cfg.out_dir. Returns false only for `verify` when a check fails.
bool run(const RunConfig& cfg);

double default_horizon(const RunConfig& cfg);

}  // namespace quench
