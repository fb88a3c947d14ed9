#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <vector>

#include "minilb/perfport.hpp"

namespace minilb {

/// Column order of benchmark CSV files. `status` is "OK" or "ERROR: ...".
inline constexpr const char* kBenchCsvHeader =
    "case,nx,ny,precision,layout,schedule,tx,ty,steps,seconds,mlups,flops_per_cell,bytes_per_cell,ai,status";

/// Header plus one row per record. Doubles use the shortest round-trip form
/// with '.' as decimal separator regardless of the global locale.
void writeBenchCsv(std::span<const PerfRecord> records, std::ostream& out);
void writeBenchCsv(std::span<const PerfRecord> records, const std::filesystem::path& path);

std::vector<PerfRecord> readBenchCsv(std::istream& in);
std::vector<PerfRecord> readBenchCsv(const std::filesystem::path& path);

} // namespace minilb
