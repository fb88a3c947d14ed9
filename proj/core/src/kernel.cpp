#include "minilb/kernel.hpp"

#include <omp.h>

#include <algorithm>
#include <string>

#include "gather_impl.hpp"
#include "minilb/error.hpp"

namespace minilb {

void Schedule::validate(std::size_t nx, std::size_t ny) const {
  if (kind == Kind::Auto) {
    return;
  }
  if (tileX == 0 || tileY == 0) {
    throw ConfigError("tile sizes must be at least 1 (got " + std::to_string(tileX) + "x" + std::to_string(tileY) + ")");
  }
  if (tileX > nx || tileY > ny) {
    throw ConfigError("tile " + std::to_string(tileX) + "x" + std::to_string(tileY) + " exceeds grid " +
                      std::to_string(nx) + "x" + std::to_string(ny));
  }
}

namespace {

template <class S, class T, Layout L, bool Collide, bool WithSource>
class CellUpdater {
public:
  CellUpdater(const PopulationField& pre, PopulationField& post, const RelaxationParams& params, const CellMask& mask)
      : grid_(pre.grid()),
        cells_(pre.cells()),
        pre_(pre.values<S>().data()),
        post_(post.values<S>().data()),
        types_(mask.types().data()),
        velocities_(mask.velocities().data()),
        omega_(static_cast<T>(params.omega)),
        keep_(T(1) - static_cast<T>(params.omega)) {
    if constexpr (WithSource) {
      for (std::size_t i = 0; i < d2q9::kQ; ++i) {
        source_[i] = static_cast<T>((*params.source)[i]);
      }
    }
  }

  void operator()(std::size_t x, std::size_t y) const {
    const auto src = detail::sourceCells<L>(grid_, x, y);
    const std::size_t self = src.index[0];
    if (types_[self] != CellType::Fluid) {
      return;
    }
    T d[d2q9::kQ];
    detail::gather<T>(pre_, cells_, types_, velocities_, src, d);
    if constexpr (Collide) {
      detail::relaxShifted(d, omega_, keep_);
    }
    for (std::size_t i = 0; i < d2q9::kQ; ++i) {
      if constexpr (WithSource) {
        d[i] += source_[i];
      }
      detail::store(post_ + i * cells_ + self, d[i]);
    }
  }

  const GridIndexer& grid() const { return grid_; }

private:
  GridIndexer grid_;
  std::size_t cells_;
  const S* pre_;
  S* post_;
  const CellType* types_;
  const Velocity2* velocities_;
  T omega_;
  T keep_;
  T source_[d2q9::kQ] = {};
};

// Visits the rectangle [x0, x1) x [y0, y1) with the unit-stride direction innermost.
template <class Update>
inline void visitBlock(const Update& update, Layout layout, std::size_t x0, std::size_t x1, std::size_t y0,
                       std::size_t y1) {
  if (layout == Layout::ColumnMajor) {
    for (std::size_t y = y0; y < y1; ++y) {
      for (std::size_t x = x0; x < x1; ++x) {
        update(x, y);
      }
    }
  } else {
    for (std::size_t x = x0; x < x1; ++x) {
      for (std::size_t y = y0; y < y1; ++y) {
        update(x, y);
      }
    }
  }
}

template <class Update>
void runSchedule(const Update& update, const Execution& exec) {
  const GridIndexer& grid = update.grid();
  const int threads = exec.threads > 0 ? exec.threads : omp_get_max_threads();
  const auto nx = static_cast<long long>(grid.nx);
  const auto ny = static_cast<long long>(grid.ny);

  if (exec.schedule.kind == Schedule::Kind::Auto) {
    if (grid.layout == Layout::ColumnMajor) {
#pragma omp parallel for schedule(static) num_threads(threads)
      for (long long y = 0; y < ny; ++y) {
        visitBlock(update, grid.layout, 0, grid.nx, static_cast<std::size_t>(y), static_cast<std::size_t>(y) + 1);
      }
    } else {
#pragma omp parallel for schedule(static) num_threads(threads)
      for (long long x = 0; x < nx; ++x) {
        visitBlock(update, grid.layout, static_cast<std::size_t>(x), static_cast<std::size_t>(x) + 1, 0, grid.ny);
      }
    }
    return;
  }

  const std::size_t tx = exec.schedule.tileX;
  const std::size_t ty = exec.schedule.tileY;
  const std::size_t tilesX = (grid.nx + tx - 1) / tx;
  const std::size_t tilesY = (grid.ny + ty - 1) / ty;
  const auto tiles = static_cast<long long>(tilesX * tilesY);
#pragma omp parallel for schedule(static) num_threads(threads)
  for (long long t = 0; t < tiles; ++t) {
    const auto tile = static_cast<std::size_t>(t);
    // Walk tiles along the unit-stride direction first.
    const std::size_t bx = grid.layout == Layout::ColumnMajor ? tile % tilesX : tile / tilesY;
    const std::size_t by = grid.layout == Layout::ColumnMajor ? tile / tilesX : tile % tilesY;
    const std::size_t x0 = bx * tx;
    const std::size_t y0 = by * ty;
    visitBlock(update, grid.layout, x0, std::min(x0 + tx, grid.nx), y0, std::min(y0 + ty, grid.ny));
  }
}

template <class S, class T, Layout L>
void dispatchVariant(const PopulationField& pre, PopulationField& post, const RelaxationParams& params,
                     const CellMask& mask, const Execution& exec, KernelVariant variant) {
  if (variant == KernelVariant::StreamOnly) {
    runSchedule(CellUpdater<S, T, L, false, false>(pre, post, params, mask), exec);
  } else if (params.source) {
    runSchedule(CellUpdater<S, T, L, true, true>(pre, post, params, mask), exec);
  } else {
    runSchedule(CellUpdater<S, T, L, true, false>(pre, post, params, mask), exec);
  }
}

template <class S, class T>
void dispatchLayout(const PopulationField& pre, PopulationField& post, const RelaxationParams& params,
                    const CellMask& mask, const Execution& exec, KernelVariant variant) {
  if (pre.layout() == Layout::ColumnMajor) {
    dispatchVariant<S, T, Layout::ColumnMajor>(pre, post, params, mask, exec, variant);
  } else {
    dispatchVariant<S, T, Layout::RowMajor>(pre, post, params, mask, exec, variant);
  }
}

} // namespace

void fusedCollideStream(const PopulationField& pre, PopulationField& post, const RelaxationParams& params,
                        const CellMask& mask, Precision precision, const Execution& exec, KernelVariant variant) {
  if (!pre.sameShape(post)) {
    throw ConfigError("pre/post population fields differ in shape, layout or storage precision");
  }
  if (!(pre.grid() == mask.grid())) {
    throw ConfigError("mask and population field disagree on grid shape or layout");
  }
  if (pre.sharesStorageWith(post)) {
    throw ConfigError("pre/post population fields alias the same storage");
  }
  if (pre.storage() != storagePrecision(precision)) {
    throw ConfigError("precision mode " + std::string(toString(precision)) + " does not match " +
                      std::string(toString(pre.storage())) + " storage");
  }
  params.validate();
  exec.schedule.validate(pre.nx(), pre.ny());

  switch (precision) {
  case Precision::Single: dispatchLayout<float, float>(pre, post, params, mask, exec, variant); break;
  case Precision::Double: dispatchLayout<double, double>(pre, post, params, mask, exec, variant); break;
  case Precision::Mixed1: dispatchLayout<Half, float>(pre, post, params, mask, exec, variant); break;
  case Precision::Mixed2: dispatchLayout<float, double>(pre, post, params, mask, exec, variant); break;
  }
}

} // namespace minilb
