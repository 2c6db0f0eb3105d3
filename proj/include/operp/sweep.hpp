#pragma once

#include <string>
#include <vector>

#include "operp/config.hpp"

namespace operp {

struct SweepTaskResult {
  std::string name;
  std::string status;   // "pass" | "fail" | "error"
  std::string detail;   // one human-readable line
  double wall_ms = 0.0;
  std::string artifact;  // file written under out_dir, empty when none
};

struct SweepResult {
  std::vector<SweepTaskResult> tasks;
  bool all_green = true;
};

// The task names understood by run_sweep, in canonical order.
std::vector<std::string> sweep_task_names();

// Runs the selected verifications and bundles one JSON artifact per task
// plus an index file under cfg.out_dir. A task failure or error is captured
// in its result; only configuration problems throw. Results are
// deterministic for a fixed config and seed, apart from wall times.
SweepResult run_sweep(const RunConfig& cfg, const std::vector<std::string>& tasks);

}  // namespace operp
