#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "minilb/field.hpp"

namespace minilb {

/// One flag per cell. Codes are the on-disk checkpoint encoding.
enum class CellType : std::uint8_t {
  Fluid = 0,
  Solid = 1,
  MovingWall = 2,
  Inlet = 3,
  Outlet = 4,
};

struct Velocity2 {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Velocity2&, const Velocity2&) = default;
};

/// Per-cell boundary flags, indexed in the same layout as the populations.
/// Moving walls and inlets carry a velocity; periodic wrap is implicit for
/// any fluid cell on the grid edge.
class CellMask {
public:
  CellMask() = default;
  CellMask(std::size_t nx, std::size_t ny, Layout layout);

  const GridIndexer& grid() const noexcept { return grid_; }
  std::size_t nx() const noexcept { return grid_.nx; }
  std::size_t ny() const noexcept { return grid_.ny; }

  CellType type(std::size_t x, std::size_t y) const { return types_[grid_(x, y)]; }
  Velocity2 velocity(std::size_t x, std::size_t y) const { return velocities_[grid_(x, y)]; }

  void setFluid(std::size_t x, std::size_t y) { assign(x, y, CellType::Fluid, {}); }
  void setSolid(std::size_t x, std::size_t y) { assign(x, y, CellType::Solid, {}); }
  void setMovingWall(std::size_t x, std::size_t y, Velocity2 wall) { assign(x, y, CellType::MovingWall, wall); }
  void setInlet(std::size_t x, std::size_t y, Velocity2 inflow) { assign(x, y, CellType::Inlet, inflow); }
  void setOutlet(std::size_t x, std::size_t y) { assign(x, y, CellType::Outlet, {}); }

  std::span<const CellType> types() const noexcept { return types_; }
  std::span<const Velocity2> velocities() const noexcept { return velocities_; }

  std::size_t count(CellType t) const;
  bool hasOpenBoundaries() const noexcept { return openCells_ > 0; }

  /// Throws ConfigError if a wall velocity is non-finite or an inlet/outlet
  /// sits outside the west/east column.
  void validate() const;

  friend bool operator==(const CellMask&, const CellMask&) = default;

private:
  void assign(std::size_t x, std::size_t y, CellType t, Velocity2 v);

  GridIndexer grid_;
  std::vector<CellType> types_;
  std::vector<Velocity2> velocities_;
  std::size_t openCells_ = 0;
};

} // namespace minilb
