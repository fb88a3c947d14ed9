#include "minilb/bench_csv.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "minilb/error.hpp"

namespace minilb {

namespace {

std::string num(double v) {
  std::array<char, 64> buf{};
  const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), end);
}

template <class I>
std::string num(I v) {
  std::array<char, 32> buf{};
  const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), end);
}

template <class T>
T parse(const std::string& field, std::size_t line, const char* column) {
  T v{};
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw IoError("benchmark CSV line " + std::to_string(line) + ": bad " + column + " '" + field + "'");
  }
  return v;
}

} // namespace

void writeBenchCsv(std::span<const PerfRecord> records, std::ostream& out) {
  if (records.empty()) {
    throw ConfigError("no benchmark records to write");
  }
  out << kBenchCsvHeader << '\n';
  for (const PerfRecord& r : records) {
    out << r.caseName << ',' << num(r.nx) << ',' << num(r.ny) << ',' << r.precision << ',' << r.layout << ','
        << r.schedule << ',' << num(r.tileX) << ',' << num(r.tileY) << ',' << num(r.steps) << ',' << num(r.seconds)
        << ',' << num(r.mlups) << ',' << num(r.flopsPerCell) << ',' << num(r.bytesPerCell) << ',' << num(r.ai)
        << ',' << r.status << '\n';
  }
}

void writeBenchCsv(std::span<const PerfRecord> records, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw IoError("cannot open benchmark CSV for writing: " + path.string());
  }
  writeBenchCsv(records, out);
  out.flush();
  if (!out) {
    throw IoError("failed writing benchmark CSV: " + path.string());
  }
}

std::vector<PerfRecord> readBenchCsv(std::istream& in) {
  std::vector<PerfRecord> records;
  std::string line;
  std::size_t lineNo = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    if (lineNo == 1) {
      if (line != kBenchCsvHeader) {
        throw IoError("benchmark CSV has an unexpected header");
      }
      continue;
    }
    if (line.empty()) {
      continue;
    }
    std::vector<std::string> f;
    std::stringstream row(line);
    std::string cell;
    while (f.size() < 14 && std::getline(row, cell, ',')) {
      f.push_back(cell);
    }
    std::getline(row, cell);
    f.push_back(cell);
    if (f.size() != 15) {
      throw IoError("benchmark CSV line " + std::to_string(lineNo) + ": expected 15 fields");
    }
    PerfRecord r;
    r.caseName = f[0];
    r.nx = parse<std::size_t>(f[1], lineNo, "nx");
    r.ny = parse<std::size_t>(f[2], lineNo, "ny");
    r.precision = f[3];
    r.layout = f[4];
    r.schedule = f[5];
    r.tileX = parse<std::size_t>(f[6], lineNo, "tx");
    r.tileY = parse<std::size_t>(f[7], lineNo, "ty");
    r.steps = parse<std::int64_t>(f[8], lineNo, "steps");
    r.seconds = parse<double>(f[9], lineNo, "seconds");
    r.mlups = parse<double>(f[10], lineNo, "mlups");
    r.flopsPerCell = parse<std::uint64_t>(f[11], lineNo, "flops_per_cell");
    r.bytesPerCell = parse<std::uint64_t>(f[12], lineNo, "bytes_per_cell");
    r.ai = parse<double>(f[13], lineNo, "ai");
    r.status = f[14];
    records.push_back(std::move(r));
  }
  return records;
}

std::vector<PerfRecord> readBenchCsv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open benchmark CSV: " + path.string());
  }
  return readBenchCsv(in);
}

} // namespace minilb
