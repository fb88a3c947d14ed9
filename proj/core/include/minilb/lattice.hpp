#pragma once

#include <array>
#include <optional>

#include "minilb/d2q9.hpp"

namespace minilb {

/// BGK relaxation parameters. `source` is the optional per-direction forcing
/// term added after relaxation; no built-in case uses it.
struct RelaxationParams {
  double omega = 1.0;
  double nu = 1.0 / 6.0;
  std::optional<std::array<double, d2q9::kQ>> source;

  /// Throws ConfigError unless 0 < omega < 2.
  void validate() const;
};

struct Moments {
  double rho;
  double ux;
  double uy;
};

using Populations = std::array<double, d2q9::kQ>;

/// Density and velocity of a full population set. A zero-density set has zero velocity.
Moments moments(const Populations& f);

/// Second-order BGK equilibrium in lattice units.
Populations equilibrium(double rho, double ux, double uy);

/// One BGK relaxation of a single cell, plus the source term when present.
Populations collide(const Populations& f, const RelaxationParams& params);

/// Kinematic viscosity of a relaxation rate: c_s^2 (1/omega - 1/2).
double viscosityFromOmega(double omega);

/// Maps (Re, u0, L) to nu = u0 L / Re and omega = 1 / (3 nu + 1/2).
RelaxationParams omegaFromReynolds(double re, double u0, double length);

/// Relaxation parameters for a directly prescribed viscosity.
RelaxationParams omegaFromViscosity(double nu);

namespace detail {

// The cell math works on shifted populations d_i = f_i - w_i. Rest fluid is
// exactly zero in this form, which keeps the rest state a bitwise fixed point
// and preserves low-order bits when storage is narrow. The expressions below
// are written out so that the operation count is fixed; flopsPerCell() in
// perfport.hpp itemizes it.

template <class T>
struct CellMoments {
  T drho;
  T rho;
  T ux;
  T uy;
};

// 8 + 1 + 5 + 5 + 2 = 21 operations.
template <class T>
inline CellMoments<T> shiftedMoments(const T* d) {
  const T drho = d[0] + d[1] + d[2] + d[3] + d[4] + d[5] + d[6] + d[7] + d[8];
  const T rho = T(1) + drho;
  const T jx = d[1] - d[3] + d[5] - d[6] - d[7] + d[8];
  const T jy = d[2] - d[4] + d[5] + d[6] - d[7] - d[8];
  T ux = T(0);
  T uy = T(0);
  if (rho != T(0)) {
    // Two divisions rather than j * (1 / rho): just below 1 the reciprocal of
    // a float always rounds up, which would bias every velocity upward.
    ux = jx / rho;
    uy = jy / rho;
  }
  return {drho, rho, ux, uy};
}

// f_i^eq - w_i = w_i (rho - 1) + w_i rho (3 c.u + 9/2 (c.u)^2 - 3/2 u^2).
// 4 (usq) + 2 + 3 + 2 + 9 + 9 + 10 + 10 = 49 operations.
template <class T>
inline void shiftedEquilibrium(T drho, T rho, T ux, T uy, T* eq) {
  // Weights as one rounded division by 9 and exact power-of-two scalings
  // (4/9 = 4 * 1/9, 1/36 = 1/9 / 4). Rounding 1/9 up front would bias the
  // equilibrium momentum by the same factor in every cell.
  const T usq = T(1.5) * (ux * ux + uy * uy);
  const T g = drho - rho * usq;
  const T a1 = g / T(9);
  const T a0 = T(4) * a1;
  const T a2 = T(0.25) * a1;
  const T b1 = rho / T(9);
  const T b2 = T(0.25) * b1;

  eq[0] = a0;

  const T px = T(4.5) * ux * ux;
  const T lx = T(3) * ux;
  eq[1] = a1 + b1 * (px + lx);
  eq[3] = a1 + b1 * (px - lx);

  const T py = T(4.5) * uy * uy;
  const T ly = T(3) * uy;
  eq[2] = a1 + b1 * (py + ly);
  eq[4] = a1 + b1 * (py - ly);

  const T s = ux + uy;
  const T ps = T(4.5) * s * s;
  const T ls = T(3) * s;
  eq[5] = a2 + b2 * (ps + ls);
  eq[7] = a2 + b2 * (ps - ls);

  const T dm = uy - ux;
  const T pd = T(4.5) * dm * dm;
  const T ld = T(3) * dm;
  eq[6] = a2 + b2 * (pd + ld);
  eq[8] = a2 + b2 * (pd - ld);
}

/// In-place BGK update of one cell: d_i <- (1 - omega) d_i + omega d_i^eq.
/// `keep` is 1 - omega, hoisted out of the cell loop by the caller.
template <class T>
inline void relaxShifted(T* d, T omega, T keep) {
  const CellMoments<T> m = shiftedMoments(d);
  T eq[d2q9::kQ];
  shiftedEquilibrium(m.drho, m.rho, m.ux, m.uy, eq);
  for (std::size_t i = 0; i < d2q9::kQ; ++i) {
    d[i] = keep * d[i] + omega * eq[i];
  }
}

} // namespace detail

} // namespace minilb
