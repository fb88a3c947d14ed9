#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "minilb/state.hpp"

namespace minilb {

/// Legacy ASCII VTK 3.0 STRUCTURED_POINTS with density (SCALARS) and
/// velocity (VECTORS, z = 0), one value or triplet per line, x fastest.
/// Numbers are printed as the shortest text that round-trips the 32-bit
/// float, so identical states give identical files.
void writeVtk(const SimState& state, std::ostream& out);
void writeVtk(const SimState& state, const std::filesystem::path& path);

/// "<prefix>_<timestep, 8 digits>.vtk"
std::string vtkFileName(const std::string& prefix, std::int64_t timestep);

} // namespace minilb
