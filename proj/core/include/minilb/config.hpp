#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "minilb/engine.hpp"

namespace minilb {

/// Builds a validated RunConfig from command-line style arguments (without
/// the program or subcommand name), optionally layered over an INI/TOML file
/// with the same keys (`precision = "mixed1"`). Flags win over the file.
///
/// Flags: --case {ldc,tgv,vks} --nx --ny --re --u0 --nu --diameter --steps
///        --precision {single,double,mixed1,mixed2} --layout {row,col}
///        --schedule {auto,tiled} --tile-x --tile-y --threads
///        --output-every --checkpoint-every --out-dir --no-safety-check
///
/// Defaults: LDC 128x128, Re 100, u0 0.1, 1000 steps, single precision,
/// column-major, auto schedule. For VKS a lone --diameter sizes the channel
/// to 24D x 8D; otherwise D = ny / 8. A tiled schedule without tile flags
/// uses 16 x 16 clipped to the grid. Throws ConfigError on unknown flags,
/// out-of-range values and tile flags given with the auto schedule.
RunConfig parseRunConfig(const std::vector<std::string>& args,
                         const std::optional<std::filesystem::path>& configFile = std::nullopt);

} // namespace minilb
