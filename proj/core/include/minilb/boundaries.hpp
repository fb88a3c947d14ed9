#pragma once

#include <cstddef>

#include "minilb/field.hpp"
#include "minilb/lattice.hpp"
#include "minilb/mask.hpp"

namespace minilb {

/// Populations arriving at fluid cell (x, y) under the pull scheme.
///
/// Direction i is read from x - c_i with periodic wrap. When that source is
/// a wall the link is bounced back half-way: the value is the cell's own
/// opposite-direction population, plus the momentum of the wall if it moves.
Populations gatherWithBoundaries(const PopulationField& pre, std::size_t x, std::size_t y, const CellMask& mask);

/// Bounce-back off a moving wall. `i` is the direction that hit the wall;
/// the result is the reflected population travelling along opp(i):
///   value - 2 w_i rho_w (c_i . u_wall) / c_s^2.
double movingWallCorrection(double value, std::size_t i, Velocity2 wall, double rhoWall = 1.0);

/// Post-pass for open channels. Inlet cells are reset to the equilibrium of
/// (rho = 1, inflow velocity). Outlet cells copy every population of their
/// west neighbour (zero-gradient outflow).
void applyInletOutlet(PopulationField& post, const CellMask& mask);

} // namespace minilb
