#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "minilb/field.hpp"
#include "minilb/lattice.hpp"
#include "minilb/mask.hpp"
#include "minilb/precision.hpp"

namespace minilb {

/// Density and velocity per cell, x-fastest regardless of the population layout.
struct MacroFields {
  std::size_t nx = 0;
  std::size_t ny = 0;
  std::vector<double> rho;
  std::vector<double> ux;
  std::vector<double> uy;

  std::size_t index(std::size_t x, std::size_t y) const noexcept { return x + nx * y; }
};

/// Everything a time step needs. `pre` holds the populations at `timestep`;
/// `post` is scratch that the next step writes into before the two swap.
struct SimState {
  PopulationField pre;
  PopulationField post;
  CellMask mask;
  RelaxationParams params;
  Precision precision = Precision::Single;
  std::int64_t timestep = 0;

  SimState() = default;
  SimState(std::size_t nx, std::size_t ny, Layout layout, Precision precision);

  std::size_t nx() const noexcept { return pre.nx(); }
  std::size_t ny() const noexcept { return pre.ny(); }
  Layout layout() const noexcept { return pre.layout(); }

  void swapPopulations() noexcept { std::swap(pre, post); }
};

/// Fills both population buffers with the equilibrium of `field(x, y)` on every cell.
void initializeEquilibrium(SimState& state, const std::function<Moments(std::size_t, std::size_t)>& field);

/// Velocity derivatives d(u_beta)/d(x_alpha) at a cell.
struct VelocityGradient {
  double dxUx;
  double dyUx;
  double dxUy;
  double dyUy;
};

/// Equilibrium plus the first-order non-equilibrium part of a flow with the
/// given velocity gradient, as the kernel would leave it after a collision:
///   f_i = f_i^eq - (1 - omega) w_i rho / (c_s^2 omega) Q_i : grad u,
/// with Q_i = c_i c_i - c_s^2 I. Mass and momentum equal the equilibrium's.
/// Uses state.params.omega, so set the relaxation parameters first.
void initializeNonEquilibrium(SimState& state, const std::function<Moments(std::size_t, std::size_t)>& field,
                              const std::function<VelocityGradient(std::size_t, std::size_t)>& gradient);

/// Moments of `pre`. Solid cells report rest density and zero velocity,
/// moving walls their wall velocity.
MacroFields macroFields(const SimState& state);

/// Sum of all populations over non-solid cells, accumulated line by line in a fixed order.
double totalMass(const SimState& state);

/// Sum over non-solid cells of rho |u|^2 / 2.
double kineticEnergy(const SimState& state);

} // namespace minilb
