#include "minilb_cli/studies.hpp"

#include <cmath>
#include <numbers>

#include "minilb/engine.hpp"
#include "minilb/error.hpp"
#include "minilb/lattice.hpp"

namespace minilb::cli {

std::vector<TgvSample> tgvConvergence(const std::vector<std::size_t>& sizes, double u0Base, double nu,
                                      Precision precision) {
  if (sizes.empty()) {
    throw ConfigError("no grid sizes given");
  }
  const double n0 = static_cast<double>(sizes.front());
  const double k0 = 2.0 * std::numbers::pi / n0;
  const double t0 = 1.0 / (2.0 * nu * k0 * k0);

  std::vector<TgvSample> samples;
  for (std::size_t n : sizes) {
    const double scale = static_cast<double>(n) / n0;
    CaseSpec spec;
    spec.kind = CaseKind::TGV;
    spec.nx = n;
    spec.ny = n;
    spec.u0 = u0Base / scale;
    spec.viscosity = nu;
    spec.validate();

    TgvSample s;
    s.n = n;
    s.u0 = spec.u0;
    s.nu = nu;
    s.steps = std::llround(t0 * scale * scale);

    SimState state = makeState(spec, Layout::ColumnMajor, precision);
    for (std::int64_t t = 0; t < s.steps; ++t) {
      step(state);
    }
    checkFinite(state);
    s.l2 = l2VelocityError(state, spec.u0);
    samples.push_back(s);
  }
  return samples;
}

double observedOrder(const TgvSample& coarse, const TgvSample& fine) {
  return std::log(coarse.l2 / fine.l2) / std::log(static_cast<double>(fine.n) / static_cast<double>(coarse.n));
}

namespace {

// RMS of the residual after removing the least-squares line.
double detrendedRms(const std::vector<std::int64_t>& t, const std::vector<double>& v, std::size_t begin,
                    std::size_t end) {
  const double n = static_cast<double>(end - begin);
  if (end - begin < 2) {
    return 0.0;
  }
  double mt = 0.0;
  double mv = 0.0;
  for (std::size_t i = begin; i < end; ++i) {
    mt += static_cast<double>(t[i]);
    mv += v[i];
  }
  mt /= n;
  mv /= n;
  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t i = begin; i < end; ++i) {
    const double dt = static_cast<double>(t[i]) - mt;
    sxx += dt * dt;
    sxy += dt * (v[i] - mv);
  }
  const double slope = sxx > 0.0 ? sxy / sxx : 0.0;
  double ss = 0.0;
  for (std::size_t i = begin; i < end; ++i) {
    const double r = v[i] - mv - slope * (static_cast<double>(t[i]) - mt);
    ss += r * r;
  }
  return std::sqrt(ss / n);
}

} // namespace

SheddingResult measureShedding(const CaseSpec& spec, std::int64_t steps, Precision precision, int threads) {
  if (spec.kind != CaseKind::VKS) {
    throw ConfigError("shedding study needs the vks case");
  }
  if (steps < 2) {
    throw ConfigError("shedding study needs at least 2 steps");
  }
  SimState state = makeState(spec, Layout::ColumnMajor, precision);
  const ProbeCell probe = vksProbe(spec);
  const Execution exec{Schedule::automatic(), threads};

  SheddingResult result;
  for (std::int64_t t = 0; t < steps; ++t) {
    step(state, exec);
    Populations f;
    for (std::size_t i = 0; i < f.size(); ++i) {
      f[i] = state.pre.get(i, probe.x, probe.y);
    }
    result.probe.push(state.timestep, moments(f).uy);
  }
  checkFinite(state);

  const auto& times = result.probe.times();
  const auto& values = result.probe.values();
  const double threshold = kSheddingAmplitude * spec.u0;

  const ProbeSeries window = result.probe.since(steps / 2);
  result.crossings = zeroCrossings(window).size();
  result.amplitude = detrendedRms(window.times(), window.values(), 0, window.size());
  result.shedding = result.amplitude >= threshold && result.crossings >= kSheddingCrossings;
  if (result.shedding) {
    result.strouhal = strouhal(window, spec.diameter, spec.u0);
  }

  // Onset: start of the earliest block after which every block oscillates
  // above the threshold. Blocks span about one period at St = 0.2.
  const auto block = static_cast<std::size_t>(std::ceil(5.0 * spec.diameter / spec.u0));
  const std::size_t blocks = values.size() / block;
  for (std::size_t b = blocks; b-- > 0;) {
    if (detrendedRms(times, values, b * block, (b + 1) * block) < threshold) {
      break;
    }
    result.onset = times[b * block];
  }
  return result;
}

} // namespace minilb::cli
