#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>

#include "minilb/cases.hpp"
#include "minilb/kernel.hpp"
#include "minilb/precision.hpp"
#include "minilb/state.hpp"

namespace minilb {

/// One point of the tuning matrix plus the run length and I/O cadence.
struct RunConfig {
  CaseSpec caseSpec;
  std::int64_t steps = 1000;
  Precision precision = Precision::Single;
  Layout layout = Layout::ColumnMajor;
  Schedule schedule;
  int threads = 0;
  /// Steps between VTK dumps, 0 disables.
  std::int64_t outputEvery = 0;
  /// Steps between checkpoints, 0 disables.
  std::int64_t checkpointEvery = 0;
  /// Scan populations for NaN/Inf at every output step and at the end of the run.
  bool safetyCheck = true;
  std::filesystem::path outDir = ".";

  Execution execution() const { return {schedule, threads}; }

  /// Throws ConfigError when any field is out of range.
  void validate() const;
};

struct RunStats {
  std::int64_t steps = 0;
  /// Wall time of the step loop only; hooks are excluded.
  double kernelSeconds = 0.0;
  std::uint64_t cellUpdates = 0;
  double mlups = 0.0;
};

/// Called with the state after the step that reached a multiple of the interval.
struct RunHooks {
  std::function<void(const SimState&)> onOutput;
  std::function<void(const SimState&)> onCheckpoint;
  /// Called after every step, inside the timed region. Keep it cheap.
  std::function<void(const SimState&)> onStep;
};

/// Fused collide-stream over all fluid cells, the open-boundary post-pass
/// when the mask has inlets/outlets, then swap and advance the timestep.
void step(SimState& state, const Execution& exec = {});

/// Throws NumericalError("divergence at step t") if any population is not finite.
void checkFinite(const SimState& state);

/// Advances `config.steps` steps. Output hooks fire at every multiple of
/// outputEvery, checkpoint hooks at every multiple of checkpointEvery
/// strictly before the final step.
RunStats run(SimState& state, const RunConfig& config, const RunHooks& hooks = {});

/// Builds the case state for a run configuration.
SimState makeState(const RunConfig& config);

} // namespace minilb
