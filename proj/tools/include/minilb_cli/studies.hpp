#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "minilb/cases.hpp"
#include "minilb/precision.hpp"

namespace minilb::cli {

/// TGV at one resolution of a diffusive-scaling study.
struct TgvSample {
  std::size_t n = 0;
  double u0 = 0.0;
  double nu = 0.0;
  std::int64_t steps = 0;
  double l2 = 0.0;
};

/// Runs TGV at each size with nu fixed and u0 = u0Base * sizes[0] / n, up to
/// the physical time of one velocity e-fold of the smallest grid scaled by
/// (n / sizes[0])^2. Re stays constant across sizes.
std::vector<TgvSample> tgvConvergence(const std::vector<std::size_t>& sizes, double u0Base, double nu,
                                      Precision precision);

/// Observed order of accuracy between two samples: log(e1 / e2) / log(n2 / n1).
double observedOrder(const TgvSample& coarse, const TgvSample& fine);

struct SheddingResult {
  /// Cross-stream velocity at the wake probe, one sample per step.
  ProbeSeries probe;
  /// Zero crossings of the analysed window (second half of the run).
  std::size_t crossings = 0;
  /// RMS of the detrended probe signal over the analysed window.
  double amplitude = 0.0;
  bool shedding = false;
  std::optional<double> strouhal;
  /// First step at which the wake oscillation exceeds the onset threshold.
  std::optional<std::int64_t> onset;
};

/// Oscillation amplitudes below this fraction of u0 count as a steady wake.
inline constexpr double kSheddingAmplitude = 0.05;
inline constexpr std::size_t kSheddingCrossings = 20;

SheddingResult measureShedding(const CaseSpec& spec, std::int64_t steps, Precision precision, int threads = 0);

} // namespace minilb::cli
