#include "minilb/perfport.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>

#include "minilb/error.hpp"

namespace minilb {

double mlups(std::size_t nx, std::size_t ny, std::int64_t steps, double seconds) {
  if (!(seconds > 0.0)) {
    throw ConfigError("MLUPs needs a positive elapsed time");
  }
  if (steps < 0) {
    throw ConfigError("MLUPs needs a non-negative step count");
  }
  return static_cast<double>(nx) * static_cast<double>(ny) * static_cast<double>(steps) / (seconds * 1e6);
}

std::uint64_t flopsPerCell(Precision) {
  return 97;
}

std::uint64_t bytesPerCell(StoragePrecision storage) {
  return 18 * storageBytes(storage);
}

double arithmeticIntensity(double flops, double bytes) {
  if (!(bytes > 0.0) || !(flops > 0.0)) {
    throw ConfigError("arithmetic intensity needs positive FLOPs and bytes");
  }
  return flops / bytes;
}

double rooflinePeak(double frPeak, double bwPeak, double ai) {
  if (!(frPeak > 0.0) || !(bwPeak > 0.0) || !(ai > 0.0)) {
    throw ConfigError("roofline inputs must be positive");
  }
  return std::min(frPeak, bwPeak * ai);
}

RooflineEfficiency rooflineEfficiency(double achieved, double peak) {
  if (!(peak > 0.0) || !(achieved > 0.0)) {
    throw ConfigError("roofline efficiency needs positive achieved and peak rates");
  }
  const double e = achieved / peak;
  return {e, e > 1.0};
}

double estimateCrossPlatformFlopRate(double frRef, double timeRef, double timeOther) {
  if (!(timeRef > 0.0) || !(timeOther > 0.0)) {
    throw ConfigError("kernel times must be positive");
  }
  if (!(frRef > 0.0)) {
    throw ConfigError("reference FLOP rate must be positive");
  }
  return frRef * timeRef / timeOther;
}

double ppMetric(std::span<const PlatformEfficiency> entries) {
  if (entries.empty()) {
    throw ConfigError("performance portability needs at least one platform");
  }
  double inverseSum = 0.0;
  double smallest = 1.0;
  double largest = 0.0;
  bool allEqual = true;
  bool allSupported = true;
  for (const PlatformEfficiency& e : entries) {
    if (!e.efficiency) {
      allSupported = false;
      continue;
    }
    const double v = *e.efficiency;
    if (!(v > 0.0 && v <= 1.0)) {
      std::ostringstream msg;
      msg << "efficiency of '" << e.platform << "' is " << v << ", outside (0, 1]";
      throw ConfigError(msg.str());
    }
    inverseSum += 1.0 / v;
    allEqual = allEqual && v == *entries.front().efficiency;
    smallest = std::min(smallest, v);
    largest = std::max(largest, v);
  }
  if (!allSupported) {
    return 0.0;
  }
  // The reciprocal sum rounds, so pin the cases the mean guarantees exactly:
  // PP(e, ..., e) = e and min e <= PP <= max e.
  if (allEqual) {
    return smallest;
  }
  return std::clamp(static_cast<double>(entries.size()) / inverseSum, smallest, largest);
}

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) {
    return {};
  }
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::optional<double> parseDouble(const std::string& text) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    return std::nullopt;
  }
  return v;
}

} // namespace

std::vector<PlatformEfficiency> parsePpCsv(std::istream& in) {
  std::vector<PlatformEfficiency> entries;
  std::string line;
  std::size_t lineNo = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    if (trim(line).empty()) {
      continue;
    }
    const auto comma = line.find(',');
    if (comma == std::string::npos) {
      throw ConfigError("line " + std::to_string(lineNo) + ": expected 'platform,efficiency'");
    }
    const std::string platform = trim(std::string_view(line).substr(0, comma));
    const std::string value = trim(std::string_view(line).substr(comma + 1));
    if (lineNo == 1 && platform == "platform") {
      continue;
    }
    if (value == "NA") {
      entries.push_back({platform, std::nullopt});
      continue;
    }
    const auto v = parseDouble(value);
    if (!v) {
      throw ConfigError("line " + std::to_string(lineNo) + ": bad efficiency '" + value + "'");
    }
    entries.push_back({platform, *v});
  }
  return entries;
}

std::vector<PlatformEfficiency> readPpCsv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open " + path.string());
  }
  return parsePpCsv(in);
}

std::string formatPp(std::span<const PlatformEfficiency> entries) {
  const double pp = ppMetric(entries);
  std::ostringstream out;
  out.imbue(std::locale::classic());
  out.setf(std::ios::fixed);
  out.precision(1);
  out << "PP=" << pp * 100.0 << "%";
  const auto missing = std::find_if(entries.begin(), entries.end(),
                                    [](const PlatformEfficiency& e) { return !e.efficiency; });
  if (missing != entries.end()) {
    out << " (unsupported platform: " << missing->platform << ")";
  }
  return out.str();
}

PerfRecord describe(const RunConfig& config) {
  PerfRecord r;
  r.caseName = std::string(toString(config.caseSpec.kind));
  r.nx = config.caseSpec.nx;
  r.ny = config.caseSpec.ny;
  r.precision = std::string(toString(config.precision));
  r.layout = std::string(toString(config.layout));
  const bool tiled = config.schedule.kind == Schedule::Kind::Tiled;
  r.schedule = tiled ? "tiled" : "auto";
  r.tileX = tiled ? config.schedule.tileX : 0;
  r.tileY = tiled ? config.schedule.tileY : 0;
  r.steps = config.steps;
  r.flopsPerCell = flopsPerCell(config.precision);
  r.bytesPerCell = bytesPerCell(storagePrecision(config.precision));
  r.ai = arithmeticIntensity(static_cast<double>(r.flopsPerCell), static_cast<double>(r.bytesPerCell));
  return r;
}

namespace {

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

std::string sanitize(std::string s) {
  std::replace(s.begin(), s.end(), ',', ';');
  std::replace(s.begin(), s.end(), '\n', ' ');
  std::replace(s.begin(), s.end(), '"', '\'');
  return s;
}

double timedRun(const RunConfig& config) {
  SimState state = makeState(config);
  return run(state, config).kernelSeconds;
}

} // namespace

std::vector<PerfRecord> benchSweep(std::span<const RunConfig> matrix, int repetitions) {
  if (matrix.empty()) {
    throw ConfigError("benchmark matrix is empty");
  }
  if (repetitions < 1) {
    throw ConfigError("repetitions must be at least 1");
  }
  std::vector<PerfRecord> records;
  records.reserve(matrix.size());
  for (const RunConfig& config : matrix) {
    PerfRecord record = describe(config);
    try {
      timedRun(config);
      std::vector<double> seconds;
      for (int rep = 0; rep < repetitions; ++rep) {
        seconds.push_back(timedRun(config));
      }
      record.seconds = median(seconds);
      record.mlups = record.seconds > 0.0 ? mlups(record.nx, record.ny, record.steps, record.seconds) : 0.0;
    } catch (const std::exception& e) {
      record.status = "ERROR: " + sanitize(e.what());
      record.seconds = 0.0;
      record.mlups = 0.0;
    }
    records.push_back(std::move(record));
  }
  return records;
}

} // namespace minilb
