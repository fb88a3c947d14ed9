#include "minilb/mask.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "minilb/error.hpp"

namespace minilb {

CellMask::CellMask(std::size_t nx, std::size_t ny, Layout layout)
    : grid_{nx, ny, layout}, types_(nx * ny, CellType::Fluid), velocities_(nx * ny) {}

void CellMask::assign(std::size_t x, std::size_t y, CellType t, Velocity2 v) {
  const std::size_t k = grid_(x, y);
  auto isOpen = [](CellType c) { return c == CellType::Inlet || c == CellType::Outlet; };
  openCells_ -= isOpen(types_[k]) ? 1 : 0;
  openCells_ += isOpen(t) ? 1 : 0;
  types_[k] = t;
  velocities_[k] = v;
}

std::size_t CellMask::count(CellType t) const {
  return static_cast<std::size_t>(std::count(types_.begin(), types_.end(), t));
}

void CellMask::validate() const {
  for (std::size_t y = 0; y < ny(); ++y) {
    for (std::size_t x = 0; x < nx(); ++x) {
      const std::size_t k = grid_(x, y);
      const CellType t = types_[k];
      const Velocity2 v = velocities_[k];
      if (!std::isfinite(v.x) || !std::isfinite(v.y)) {
        throw ConfigError("non-finite boundary velocity at (" + std::to_string(x) + ", " + std::to_string(y) + ")");
      }
      if (t == CellType::Inlet && x != 0) {
        throw ConfigError("inlet cell at x=" + std::to_string(x) + " is not on the west column");
      }
      if (t == CellType::Outlet && (x != nx() - 1 || nx() < 2)) {
        throw ConfigError("outlet cell at x=" + std::to_string(x) + " is not on the east column");
      }
    }
  }
}

} // namespace minilb
