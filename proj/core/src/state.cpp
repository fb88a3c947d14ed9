#include "minilb/state.hpp"

#include "minilb/error.hpp"

namespace minilb {

SimState::SimState(std::size_t nx, std::size_t ny, Layout layout, Precision precisionMode)
    : pre(nx, ny, layout, storagePrecision(precisionMode)),
      post(nx, ny, layout, storagePrecision(precisionMode)),
      mask(nx, ny, layout),
      precision(precisionMode) {}

void initializeEquilibrium(SimState& state, const std::function<Moments(std::size_t, std::size_t)>& field) {
  const GridIndexer& grid = state.pre.grid();
  for (std::size_t y = 0; y < grid.ny; ++y) {
    for (std::size_t x = 0; x < grid.nx; ++x) {
      const Moments m = field(x, y);
      double eq[d2q9::kQ];
      detail::shiftedEquilibrium(m.rho - 1.0, m.rho, m.ux, m.uy, eq);
      const std::size_t k = grid(x, y);
      for (std::size_t i = 0; i < d2q9::kQ; ++i) {
        // Round through the compute type so the field is what the kernel would have written.
        const double v = convertPrecision(eq[i], state.precision, ConversionDirection::Compute).value;
        state.pre.setShifted(i, k, v);
        state.post.setShifted(i, k, v);
      }
    }
  }
}

void initializeNonEquilibrium(SimState& state, const std::function<Moments(std::size_t, std::size_t)>& field,
                              const std::function<VelocityGradient(std::size_t, std::size_t)>& gradient) {
  state.params.validate();
  const double omega = state.params.omega;
  const double scale = (1.0 - omega) / (d2q9::kCsSq * omega);
  const GridIndexer& grid = state.pre.grid();
  for (std::size_t y = 0; y < grid.ny; ++y) {
    for (std::size_t x = 0; x < grid.nx; ++x) {
      const Moments m = field(x, y);
      const VelocityGradient g = gradient(x, y);
      const double trace = g.dxUx + g.dyUy;
      double eq[d2q9::kQ];
      detail::shiftedEquilibrium(m.rho - 1.0, m.rho, m.ux, m.uy, eq);
      const std::size_t k = grid(x, y);
      for (std::size_t i = 0; i < d2q9::kQ; ++i) {
        const double cx = d2q9::kCx[i];
        const double cy = d2q9::kCy[i];
        const double q = cx * cx * g.dxUx + cx * cy * (g.dxUy + g.dyUx) + cy * cy * g.dyUy - d2q9::kCsSq * trace;
        const double neq = -scale * d2q9::kWeights[i] * m.rho * q;
        const double v = convertPrecision(eq[i] + neq, state.precision, ConversionDirection::Compute).value;
        state.pre.setShifted(i, k, v);
        state.post.setShifted(i, k, v);
      }
    }
  }
}

namespace {

struct CellMoments {
  double mass;
  double rho;
  double ux;
  double uy;
};

CellMoments cellMoments(const PopulationField& f, std::size_t k) {
  double d[d2q9::kQ];
  double mass = 0.0;
  for (std::size_t i = 0; i < d2q9::kQ; ++i) {
    d[i] = f.shifted(i, k);
    mass += d2q9::kWeights[i] + d[i];
  }
  const auto m = detail::shiftedMoments(d);
  return {mass, m.rho, m.ux, m.uy};
}

} // namespace

MacroFields macroFields(const SimState& state) {
  MacroFields out;
  out.nx = state.nx();
  out.ny = state.ny();
  const std::size_t n = out.nx * out.ny;
  out.rho.assign(n, 1.0);
  out.ux.assign(n, 0.0);
  out.uy.assign(n, 0.0);
  const GridIndexer& grid = state.pre.grid();
  for (std::size_t y = 0; y < out.ny; ++y) {
    for (std::size_t x = 0; x < out.nx; ++x) {
      const std::size_t o = out.index(x, y);
      const CellType t = state.mask.type(x, y);
      if (t == CellType::Solid) {
        continue;
      }
      if (t == CellType::MovingWall) {
        const Velocity2 v = state.mask.velocity(x, y);
        out.ux[o] = v.x;
        out.uy[o] = v.y;
        continue;
      }
      const CellMoments m = cellMoments(state.pre, grid(x, y));
      out.rho[o] = m.rho;
      out.ux[o] = m.ux;
      out.uy[o] = m.uy;
    }
  }
  return out;
}

double totalMass(const SimState& state) {
  const GridIndexer& grid = state.pre.grid();
  double total = 0.0;
  for (std::size_t y = 0; y < grid.ny; ++y) {
    double line = 0.0;
    for (std::size_t x = 0; x < grid.nx; ++x) {
      const CellType t = state.mask.type(x, y);
      if (t == CellType::Solid || t == CellType::MovingWall) {
        continue;
      }
      line += cellMoments(state.pre, grid(x, y)).mass;
    }
    total += line;
  }
  return total;
}

double kineticEnergy(const SimState& state) {
  const GridIndexer& grid = state.pre.grid();
  double total = 0.0;
  for (std::size_t y = 0; y < grid.ny; ++y) {
    double line = 0.0;
    for (std::size_t x = 0; x < grid.nx; ++x) {
      const CellType t = state.mask.type(x, y);
      if (t == CellType::Solid || t == CellType::MovingWall) {
        continue;
      }
      const CellMoments m = cellMoments(state.pre, grid(x, y));
      line += 0.5 * m.rho * (m.ux * m.ux + m.uy * m.uy);
    }
    total += line;
  }
  return total;
}

} // namespace minilb
