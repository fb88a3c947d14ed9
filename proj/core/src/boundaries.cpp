#include "minilb/boundaries.hpp"

#include <variant>

#include "boundaries_impl.hpp"
#include "gather_impl.hpp"
#include "minilb/error.hpp"

namespace minilb {

namespace {

template <class S>
Populations gatherTyped(const PopulationField& pre, std::size_t x, std::size_t y, const CellMask& mask) {
  const auto src = detail::sourceCells(pre.grid(), x, y);
  double d[d2q9::kQ];
  detail::gather<double>(pre.values<S>().data(), pre.cells(), mask.types().data(), mask.velocities().data(), src, d);
  Populations f;
  for (std::size_t i = 0; i < d2q9::kQ; ++i) {
    f[i] = d2q9::kWeights[i] + d[i];
  }
  return f;
}

template <class S>
void inletOutletTyped(PopulationField& post, const CellMask& mask) {
  const GridIndexer& grid = post.grid();
  const std::size_t cells = grid.cells();
  S* data = post.values<S>().data();
  const auto types = mask.types();
  const auto velocities = mask.velocities();

  // Inlets first: an outlet column can only neighbour an inlet on a 2-wide grid.
  for (std::size_t y = 0; y < grid.ny; ++y) {
    const std::size_t k = grid(0, y);
    if (types[k] != CellType::Inlet) {
      continue;
    }
    double eq[d2q9::kQ];
    detail::shiftedEquilibrium(0.0, 1.0, velocities[k].x, velocities[k].y, eq);
    for (std::size_t i = 0; i < d2q9::kQ; ++i) {
      detail::store(data + i * cells + k, eq[i]);
    }
  }
  const std::size_t east = grid.nx - 1;
  for (std::size_t y = 0; y < grid.ny; ++y) {
    const std::size_t k = grid(east, y);
    if (types[k] != CellType::Outlet) {
      continue;
    }
    const std::size_t upstream = grid(east - 1, y);
    for (std::size_t i = 0; i < d2q9::kQ; ++i) {
      data[i * cells + k] = data[i * cells + upstream];
    }
  }
}

} // namespace

Populations gatherWithBoundaries(const PopulationField& pre, std::size_t x, std::size_t y, const CellMask& mask) {
  if (!(pre.grid() == mask.grid())) {
    throw ConfigError("mask and population field disagree on grid shape or layout");
  }
  switch (pre.storage()) {
  case StoragePrecision::Half: return gatherTyped<Half>(pre, x, y, mask);
  case StoragePrecision::Single: return gatherTyped<float>(pre, x, y, mask);
  case StoragePrecision::Double: break;
  }
  return gatherTyped<double>(pre, x, y, mask);
}

double movingWallCorrection(double value, std::size_t i, Velocity2 wall, double rhoWall) {
  const double cu = d2q9::kCx[i] * wall.x + d2q9::kCy[i] * wall.y;
  return value - 2.0 * d2q9::kWeights[i] * rhoWall * cu / d2q9::kCsSq;
}

void applyInletOutlet(PopulationField& post, const CellMask& mask) {
  if (!(post.grid() == mask.grid())) {
    throw ConfigError("mask and population field disagree on grid shape or layout");
  }
  mask.validate();
  detail::applyInletOutletUnchecked(post, mask);
}

void detail::applyInletOutletUnchecked(PopulationField& post, const CellMask& mask) {
  switch (post.storage()) {
  case StoragePrecision::Half: inletOutletTyped<Half>(post, mask); break;
  case StoragePrecision::Single: inletOutletTyped<float>(post, mask); break;
  case StoragePrecision::Double: inletOutletTyped<double>(post, mask); break;
  }
}

} // namespace minilb
