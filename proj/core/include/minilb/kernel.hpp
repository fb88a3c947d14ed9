#pragma once

#include <cstddef>

#include "minilb/field.hpp"
#include "minilb/lattice.hpp"
#include "minilb/mask.hpp"
#include "minilb/precision.hpp"

namespace minilb {

/// How destination cells are handed to worker threads.
///
/// Auto leaves chunking to the runtime: whole grid lines, split statically
/// across threads. Tiled fixes a tileX x tileY block as the unit of work.
struct Schedule {
  enum class Kind { Auto, Tiled };

  Kind kind = Kind::Auto;
  std::size_t tileX = 0;
  std::size_t tileY = 0;

  static Schedule automatic() { return {}; }
  static Schedule tiled(std::size_t tx, std::size_t ty) { return {Kind::Tiled, tx, ty}; }

  /// Throws ConfigError for zero tiles or tiles larger than the grid.
  void validate(std::size_t nx, std::size_t ny) const;

  friend bool operator==(const Schedule&, const Schedule&) = default;
};

struct Execution {
  Schedule schedule;
  /// Worker count; 0 uses the OpenMP default.
  int threads = 0;
};

enum class KernelVariant {
  Fused,
  /// Gather only, no collision. Used to check that streaming is a pure
  /// permutation of stored values.
  StreamOnly,
};

/// One fused collide-and-stream pass. Every fluid cell of `post` is written
/// exactly once from values gathered out of `pre`; other cells of `post` are
/// left untouched. `precision` selects the compute type and must agree with
/// the storage of both fields.
void fusedCollideStream(const PopulationField& pre, PopulationField& post, const RelaxationParams& params,
                        const CellMask& mask, Precision precision, const Execution& exec = {},
                        KernelVariant variant = KernelVariant::Fused);

} // namespace minilb
