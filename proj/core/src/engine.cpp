#include "minilb/engine.hpp"

#include <chrono>

#include "boundaries_impl.hpp"
#include "minilb/error.hpp"

namespace minilb {

void RunConfig::validate() const {
  caseSpec.validate();
  if (steps < 1) {
    throw ConfigError("steps must be at least 1 (got " + std::to_string(steps) + ")");
  }
  if (outputEvery < 0 || checkpointEvery < 0) {
    throw ConfigError("output and checkpoint intervals must be non-negative");
  }
  if (threads < 0) {
    throw ConfigError("thread count must be non-negative");
  }
  schedule.validate(caseSpec.nx, caseSpec.ny);
}

void step(SimState& state, const Execution& exec) {
  fusedCollideStream(state.pre, state.post, state.params, state.mask, state.precision, exec);
  if (state.mask.hasOpenBoundaries()) {
    detail::applyInletOutletUnchecked(state.post, state.mask);
  }
  state.swapPopulations();
  ++state.timestep;
}

void checkFinite(const SimState& state) {
  if (!state.pre.allFinite()) {
    throw NumericalError("divergence at step " + std::to_string(state.timestep));
  }
}

RunStats run(SimState& state, const RunConfig& config, const RunHooks& hooks) {
  config.validate();
  state.params.validate();
  state.mask.validate();

  using Clock = std::chrono::steady_clock;
  const Execution exec = config.execution();
  const std::int64_t end = state.timestep + config.steps;
  Clock::duration elapsed{};

  while (state.timestep < end) {
    const auto start = Clock::now();
    step(state, exec);
    if (hooks.onStep) {
      hooks.onStep(state);
    }
    elapsed += Clock::now() - start;

    const std::int64_t t = state.timestep;
    const bool outputDue = config.outputEvery > 0 && t % config.outputEvery == 0;
    if (config.safetyCheck && (outputDue || t == end)) {
      checkFinite(state);
    }
    if (outputDue && hooks.onOutput) {
      hooks.onOutput(state);
    }
    if (config.checkpointEvery > 0 && t % config.checkpointEvery == 0 && t < end && hooks.onCheckpoint) {
      hooks.onCheckpoint(state);
    }
  }

  RunStats stats;
  stats.steps = config.steps;
  stats.kernelSeconds = std::chrono::duration<double>(elapsed).count();
  stats.cellUpdates = static_cast<std::uint64_t>(state.nx()) * state.ny() * static_cast<std::uint64_t>(config.steps);
  stats.mlups = stats.kernelSeconds > 0.0 ? static_cast<double>(stats.cellUpdates) / (stats.kernelSeconds * 1e6) : 0.0;
  return stats;
}

SimState makeState(const RunConfig& config) {
  config.validate();
  return makeState(config.caseSpec, config.layout, config.precision);
}

} // namespace minilb
