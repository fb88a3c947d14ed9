#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "minilb/lattice.hpp"
#include "minilb/precision.hpp"
#include "minilb/state.hpp"

namespace minilb {

enum class CaseKind { LDC, TGV, VKS };

std::string_view toString(CaseKind kind) noexcept;
CaseKind parseCaseKind(std::string_view text);

/// Geometry and flow parameters of one of the built-in cases.
///
/// Positions are in physical lattice coordinates where cell (i, j) covers
/// [i, i+1) x [j, j+1), so its centre is (i + 0.5, j + 0.5).
struct CaseSpec {
  CaseKind kind = CaseKind::LDC;
  std::size_t nx = 128;
  std::size_t ny = 128;
  double reynolds = 100.0;
  /// Lid speed (LDC), vortex amplitude (TGV) or inflow speed (VKS).
  double u0 = 0.1;
  /// Prescribed kinematic viscosity; bypasses the Reynolds mapping when set.
  std::optional<double> viscosity;

  // VKS only.
  double diameter = 0.0;
  std::optional<double> centerX;
  std::optional<double> centerY;
  /// Cylinder on the channel centreline and no initial perturbation.
  bool symmetric = false;

  /// Default VKS channel for a cylinder of diameter D: 24D x 8D, centre at
  /// (6D, ny/2 + 0.5) so the disk sits half a cell off the centreline.
  static CaseSpec vonKarman(std::size_t diameter, double reynolds, double u0);

  double characteristicLength() const;
  double cylinderX() const;
  double cylinderY() const;

  /// Throws ConfigError when an invariant of the case does not hold.
  void validate() const;

  /// nu from Re = u0 L / nu unless a viscosity is prescribed. An undriven
  /// cavity (u0 = 0) has no Reynolds number and falls back to nu = 1/6.
  RelaxationParams relaxation() const;
};

/// Cavity at rest: solid side and bottom walls, top row moving at (u0, 0).
/// The two top corners stay stationary walls.
SimState initLDC(const CaseSpec& spec, Layout layout, Precision precision);

/// Fully periodic N x N box with the moments of tgvAnalytic(t = 0): equilibrium
/// plus the first-order non-equilibrium stress of the analytic velocity gradient.
SimState initTGV(const CaseSpec& spec, Layout layout, Precision precision);

/// Channel with inlet (west), outlet (east), no-slip top/bottom and a solid disk.
SimState initVKS(const CaseSpec& spec, Layout layout, Precision precision);

SimState makeState(const CaseSpec& spec, Layout layout, Precision precision);

/// Decaying Taylor-Green vortex, k = 2 pi / N:
///   ux  = -u0 cos(kx) sin(ky) exp(-2 nu k^2 t)
///   uy  =  u0 sin(kx) cos(ky) exp(-2 nu k^2 t)
///   rho =  1 - 3 u0^2 / 4 (cos 2kx + cos 2ky) exp(-4 nu k^2 t)
Moments tgvAnalytic(double x, double y, double t, double nu, double u0, std::size_t n);

/// Relative L2 distance between the simulated velocity and the analytic TGV
/// field at time t over all cells.
double l2VelocityError(const MacroFields& fields, double t, double nu, double u0);
/// Same, for a TGV state at its own timestep and viscosity.
double l2VelocityError(const SimState& state, double u0);

/// Time series of the cross-stream velocity at a probe cell.
class ProbeSeries {
public:
  /// Throws ConfigError unless `time` is later than the last sample.
  void push(std::int64_t time, double value);

  const std::vector<std::int64_t>& times() const noexcept { return times_; }
  const std::vector<double>& values() const noexcept { return values_; }
  std::size_t size() const noexcept { return times_.size(); }

  /// Samples with time >= `from`.
  ProbeSeries since(std::int64_t from) const;

private:
  std::vector<std::int64_t> times_;
  std::vector<double> values_;
};

struct ProbeCell {
  std::size_t x;
  std::size_t y;
};

/// 3D downstream of the cylinder centre and 1D above it.
ProbeCell vksProbe(const CaseSpec& spec);

/// Zero crossings of the linearly detrended signal, located by linear
/// interpolation between samples.
std::vector<double> zeroCrossings(const ProbeSeries& series);

/// St = f D / u0 with f from the mean spacing of zero crossings (two per
/// period). Throws NumericalError("no shedding detected") below four crossings.
double strouhal(const ProbeSeries& series, double diameter, double u0);

} // namespace minilb
