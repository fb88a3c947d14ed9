#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "minilb/engine.hpp"
#include "minilb/field.hpp"
#include "minilb/mask.hpp"
#include "minilb/state.hpp"

namespace minilb {

/// Little-endian binary layout:
///   "MLB1" | u32 version | u32 nx | u32 ny | u8 precision | u8 layout | u64 timestep
///   | 9 planes of stored populations in the declared layout | 1 mask byte per cell
/// Stored populations are the shifted values f_i - w_i in the storage type
/// (binary16, binary32 or binary64). Precision codes: 0 single, 1 double,
/// 2 mixed1, 3 mixed2. Layout codes: 0 row-major, 1 column-major.
inline constexpr std::uint32_t kCheckpointVersion = 1;
inline constexpr std::size_t kCheckpointHeaderBytes = 4 + 4 + 4 + 4 + 1 + 1 + 8;

struct CheckpointHeader {
  std::uint32_t version = kCheckpointVersion;
  std::uint32_t nx = 0;
  std::uint32_t ny = 0;
  Precision precision = Precision::Single;
  Layout layout = Layout::ColumnMajor;
  std::uint64_t timestep = 0;
};

struct CheckpointData {
  CheckpointHeader header;
  PopulationField populations;
  std::vector<CellType> mask;
};

std::vector<std::byte> encodeCheckpoint(const SimState& state);
CheckpointData decodeCheckpoint(const std::vector<std::byte>& bytes);

void writeCheckpoint(const SimState& state, const std::filesystem::path& path);
CheckpointData readCheckpoint(const std::filesystem::path& path);

/// Loads populations and timestep into an existing state built for the same
/// case. Grid, precision, layout and mask flags must match the file.
void restoreInto(SimState& state, const CheckpointData& data);

/// Rebuilds the case described by `config` and resumes it from `path`.
SimState restoreCheckpoint(const std::filesystem::path& path, const RunConfig& config);

} // namespace minilb
