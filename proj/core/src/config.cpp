#include "minilb/config.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cstdint>

#include "minilb/error.hpp"

namespace minilb {

namespace {

struct RawOptions {
  std::string caseName = "ldc";
  std::optional<std::size_t> nx;
  std::optional<std::size_t> ny;
  double re = 100.0;
  double u0 = 0.1;
  std::optional<double> nu;
  std::optional<std::size_t> diameter;
  std::int64_t steps = 1000;
  std::string precision = "single";
  std::string layout = "col";
  std::string schedule = "auto";
  std::optional<std::size_t> tileX;
  std::optional<std::size_t> tileY;
  int threads = 0;
  std::int64_t outputEvery = 0;
  std::int64_t checkpointEvery = 0;
  std::string outDir = ".";
  bool noSafetyCheck = false;
};

constexpr std::size_t kDefaultGrid = 128;

const CLI::Validator kAtLeastOne(
    [](std::string& value) {
      std::uint64_t v = 0;
      const auto [end, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
      if (ec != std::errc() || end != value.data() + value.size() || v == 0) {
        return "must be a positive integer, got '" + value + "'";
      }
      return std::string();
    },
    "INT>=1");
constexpr std::size_t kDefaultTile = 16;

RunConfig build(const RawOptions& o) {
  RunConfig c;
  CaseSpec& s = c.caseSpec;
  s.kind = parseCaseKind(o.caseName);
  s.reynolds = o.re;
  s.u0 = o.u0;
  s.viscosity = o.nu;

  if (s.kind == CaseKind::VKS) {
    if (o.diameter && !o.nx && !o.ny) {
      s.nx = 24 * *o.diameter;
      s.ny = 8 * *o.diameter;
    } else {
      s.nx = o.nx.value_or(o.ny ? 3 * *o.ny : kDefaultGrid * 3);
      s.ny = o.ny.value_or(kDefaultGrid);
    }
    s.diameter = static_cast<double>(o.diameter.value_or(s.ny / 8));
  } else {
    if (o.diameter) {
      throw ConfigError("--diameter only applies to --case vks");
    }
    s.nx = o.nx.value_or(kDefaultGrid);
    s.ny = o.ny.value_or(s.kind == CaseKind::TGV ? s.nx : kDefaultGrid);
  }

  c.steps = o.steps;
  c.precision = parsePrecision(o.precision);
  c.layout = parseLayout(o.layout);
  if (o.schedule == "auto") {
    if (o.tileX || o.tileY) {
      throw ConfigError("--tile-x/--tile-y need --schedule tiled");
    }
    c.schedule = Schedule::automatic();
  } else if (o.schedule == "tiled") {
    c.schedule = Schedule::tiled(o.tileX.value_or(std::min(kDefaultTile, s.nx)),
                                 o.tileY.value_or(std::min(kDefaultTile, s.ny)));
  } else {
    throw ConfigError("unknown schedule '" + o.schedule + "' (expected auto or tiled)");
  }
  c.threads = o.threads;
  c.outputEvery = o.outputEvery;
  c.checkpointEvery = o.checkpointEvery;
  c.outDir = o.outDir;
  c.safetyCheck = !o.noSafetyCheck;
  c.validate();
  return c;
}

} // namespace

RunConfig parseRunConfig(const std::vector<std::string>& args, const std::optional<std::filesystem::path>& configFile) {
  RawOptions o;
  CLI::App app{"minilb run configuration", "minilb"};
  app.set_help_flag();
  app.add_option("--case", o.caseName)->check(CLI::IsMember({"ldc", "tgv", "vks"}));
  app.add_option("--nx", o.nx)->check(kAtLeastOne);
  app.add_option("--ny", o.ny)->check(kAtLeastOne);
  app.add_option("--re", o.re)->check(CLI::PositiveNumber);
  app.add_option("--u0", o.u0)->check(CLI::NonNegativeNumber);
  app.add_option("--nu", o.nu)->check(CLI::PositiveNumber);
  app.add_option("--diameter", o.diameter)->check(kAtLeastOne);
  app.add_option("--steps", o.steps)->check(kAtLeastOne);
  app.add_option("--precision", o.precision)->check(CLI::IsMember({"single", "double", "mixed1", "mixed2"}));
  app.add_option("--layout", o.layout)->check(CLI::IsMember({"row", "col"}));
  app.add_option("--schedule", o.schedule)->check(CLI::IsMember({"auto", "tiled"}));
  app.add_option("--tile-x", o.tileX)->check(kAtLeastOne);
  app.add_option("--tile-y", o.tileY)->check(kAtLeastOne);
  app.add_option("--threads", o.threads)->check(CLI::NonNegativeNumber);
  app.add_option("--output-every", o.outputEvery)->check(CLI::NonNegativeNumber);
  app.add_option("--checkpoint-every", o.checkpointEvery)->check(CLI::NonNegativeNumber);
  app.add_option("--out-dir", o.outDir);
  app.add_flag("--no-safety-check", o.noSafetyCheck);
  if (configFile) {
    app.set_config("--config", configFile->string(), "configuration file", true);
  }

  // CLI11 wants the arguments in reverse order.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    throw ConfigError(e.what());
  }
  return build(o);
}

} // namespace minilb
