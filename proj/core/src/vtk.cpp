#include "minilb/vtk.hpp"

#include <array>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <string>

#include "minilb/error.hpp"

namespace minilb {

namespace {

std::string_view formatFloat(double value, std::array<char, 32>& buf) {
  // Adding +0 turns -0 into +0.
  const float v = static_cast<float>(value) + 0.0f;
  const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return {buf.data(), static_cast<std::size_t>(end - buf.data())};
}

} // namespace

void writeVtk(const SimState& state, std::ostream& out) {
  const MacroFields m = macroFields(state);
  const std::size_t n = m.nx * m.ny;
  // std::to_string is unaffected by whatever locale the stream carries.
  const std::string cells = std::to_string(n);
  out << "# vtk DataFile Version 3.0\n"
      << "miniLB t=" << std::to_string(state.timestep) << "\n"
      << "ASCII\n"
      << "DATASET STRUCTURED_POINTS\n"
      << "DIMENSIONS " << std::to_string(m.nx) << " " << std::to_string(m.ny) << " 1\n"
      << "ORIGIN 0 0 0\n"
      << "SPACING 1 1 1\n"
      << "POINT_DATA " << cells << "\n"
      << "SCALARS density float 1\n"
      << "LOOKUP_TABLE default\n";
  std::array<char, 32> buf{};
  for (std::size_t k = 0; k < n; ++k) {
    out << formatFloat(m.rho[k], buf) << '\n';
  }
  out << "VECTORS velocity float\n";
  for (std::size_t k = 0; k < n; ++k) {
    out << formatFloat(m.ux[k], buf) << ' ';
    out << formatFloat(m.uy[k], buf) << " 0\n";
  }
}

void writeVtk(const SimState& state, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw IoError("cannot open VTK file for writing: " + path.string());
  }
  writeVtk(state, out);
  out.flush();
  if (!out) {
    throw IoError("failed writing VTK file: " + path.string());
  }
}

std::string vtkFileName(const std::string& prefix, std::int64_t timestep) {
  char digits[32];
  std::snprintf(digits, sizeof digits, "%08lld", static_cast<long long>(timestep));
  return prefix + "_" + digits + ".vtk";
}

} // namespace minilb
