#pragma once

// Shared by the fused kernel and the public single-cell gather so both take
// the same boundary path.

#include <cstddef>
#include <type_traits>

#include "minilb/d2q9.hpp"
#include "minilb/field.hpp"
#include "minilb/half.hpp"
#include "minilb/mask.hpp"

namespace minilb::detail {

template <class T, class S>
inline T load(const S* p) {
  if constexpr (std::is_same_v<S, Half>) {
    return static_cast<T>(halfToFloat(*p));
  } else {
    return static_cast<T>(*p);
  }
}

template <class S, class T>
inline void store(S* p, T v) {
  if constexpr (std::is_same_v<S, Half>) {
    *p = floatToHalf(static_cast<float>(v));
  } else {
    *p = static_cast<S>(v);
  }
}

// Shifted momentum injected by a moving wall into incoming direction i
// (reflecting the population that left along opp(i)): 6 w_i (c_i . u_wall).
inline double wallMomentum(std::size_t i, Velocity2 wall) {
  const double cu = d2q9::kCx[i] * wall.x + d2q9::kCy[i] * wall.y;
  return 2.0 * d2q9::kWeights[i] * cu / d2q9::kCsSq;
}

struct Neighbours {
  std::size_t index[d2q9::kQ];
};

template <Layout L>
inline std::size_t flatIndex(const GridIndexer& grid, std::size_t x, std::size_t y) {
  if constexpr (L == Layout::ColumnMajor) {
    return x + grid.nx * y;
  } else {
    return x * grid.ny + y;
  }
}

template <Layout L>
inline Neighbours sourceCells(const GridIndexer& grid, std::size_t x, std::size_t y) {
  const std::size_t xm = x == 0 ? grid.nx - 1 : x - 1;
  const std::size_t xp = x + 1 == grid.nx ? 0 : x + 1;
  const std::size_t ym = y == 0 ? grid.ny - 1 : y - 1;
  const std::size_t yp = y + 1 == grid.ny ? 0 : y + 1;
  auto at = [&grid](std::size_t i, std::size_t j) { return flatIndex<L>(grid, i, j); };
  // source of direction i is x - c_i
  return {{at(x, y), at(xm, y), at(x, ym), at(xp, y), at(x, yp), at(xm, ym), at(xp, ym), at(xp, yp), at(xm, yp)}};
}

inline Neighbours sourceCells(const GridIndexer& grid, std::size_t x, std::size_t y) {
  return grid.layout == Layout::ColumnMajor ? sourceCells<Layout::ColumnMajor>(grid, x, y)
                                            : sourceCells<Layout::RowMajor>(grid, x, y);
}

/// Shifted incoming populations of the cell at `self`, in compute type T.
template <class T, class S>
inline void gather(const S* pre, std::size_t cells, const CellType* types, const Velocity2* velocities,
                   const Neighbours& src, T* d) {
  const std::size_t self = src.index[0];
  d[0] = load<T>(pre + self);
  for (std::size_t i = 1; i < d2q9::kQ; ++i) {
    const std::size_t s = src.index[i];
    const CellType t = types[s];
    if (t == CellType::Solid) {
      d[i] = load<T>(pre + d2q9::kOpposite[i] * cells + self);
    } else if (t == CellType::MovingWall) {
      d[i] = load<T>(pre + d2q9::kOpposite[i] * cells + self) + static_cast<T>(wallMomentum(i, velocities[s]));
    } else {
      d[i] = load<T>(pre + i * cells + s);
    }
  }
}

} // namespace minilb::detail
