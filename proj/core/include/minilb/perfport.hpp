#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "minilb/engine.hpp"
#include "minilb/precision.hpp"

namespace minilb {

/// Million lattice updates per second: nx * ny * steps / (seconds * 1e6).
double mlups(std::size_t nx, std::size_t ny, std::int64_t steps, double seconds);

/// Floating-point operations in one fluid-cell update (moments, equilibrium,
/// relaxation), counted from the kernel expression:
///
///   moments      8 (density sum) + 1 (rho = 1 + drho) + 5 + 5 (momentum) + 2 (ux, uy)  = 21
///   equilibrium  4 (3/2 |u|^2) + 2 (g) + 3 (w_k g) + 2 (w_k rho)
///                + 9 (E/W) + 9 (N/S) + 10 (NE/SW) + 10 (NW/SE)                                 = 49
///   relaxation   9 x (2 mul + 1 add)                                                            = 27
///                                                                                         total = 97
///
/// Boundary corrections and the optional source term are not included. The
/// same expression runs in every precision mode, so the count only depends on
/// the arithmetic, not on the storage type or schedule.
std::uint64_t flopsPerCell(Precision precision);

/// Compulsory traffic of one cell update: 9 population reads + 9 writes.
std::uint64_t bytesPerCell(StoragePrecision storage);

double arithmeticIntensity(double flops, double bytes);

/// Attainable performance min(frPeak, bwPeak * ai). Units follow the inputs
/// (GFLOP/s with GB/s gives GFLOP/s).
double rooflinePeak(double frPeak, double bwPeak, double ai);

struct RooflineEfficiency {
  double value;
  /// Achieved above the roofline: the inputs are inconsistent.
  bool exceedsPeak;
};

RooflineEfficiency rooflineEfficiency(double achieved, double peak);

/// FLOP rate on a platform without counters, assuming the kernel executes the
/// same FLOP count everywhere: frRef * timeRef / timeOther.
double estimateCrossPlatformFlopRate(double frRef, double timeRef, double timeOther);

struct PlatformEfficiency {
  std::string platform;
  /// Empty when the application does not run on the platform.
  std::optional<double> efficiency;
};

/// Harmonic mean of the efficiencies, or 0 if any platform is unsupported.
double ppMetric(std::span<const PlatformEfficiency> entries);

/// Reads "platform,efficiency" rows (header optional, "NA" = unsupported).
std::vector<PlatformEfficiency> parsePpCsv(std::istream& in);
std::vector<PlatformEfficiency> readPpCsv(const std::filesystem::path& path);

/// "PP=66.7%" or "PP=0.0% (unsupported platform: <id>)".
std::string formatPp(std::span<const PlatformEfficiency> entries);

struct PerfRecord {
  std::string caseName;
  std::size_t nx = 0;
  std::size_t ny = 0;
  std::string precision;
  std::string layout;
  std::string schedule;
  std::size_t tileX = 0;
  std::size_t tileY = 0;
  std::int64_t steps = 0;
  double seconds = 0.0;
  double mlups = 0.0;
  std::uint64_t flopsPerCell = 0;
  std::uint64_t bytesPerCell = 0;
  double ai = 0.0;
  /// "OK" or "ERROR: <reason>".
  std::string status = "OK";

  bool ok() const { return status == "OK"; }
};

/// Describes a configuration without running it.
PerfRecord describe(const RunConfig& config);

/// Runs every configuration once as warm-up, then `repetitions` timed runs,
/// keeping the median kernel time. Failures are recorded in the status field
/// and the sweep moves on.
std::vector<PerfRecord> benchSweep(std::span<const RunConfig> matrix, int repetitions);

} // namespace minilb
