#include "minilb/checkpoint.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstring>
#include <fstream>
#include <iterator>
#include <string>

#include "minilb/error.hpp"

namespace minilb {

namespace {

constexpr std::array<char, 4> kMagic = {'M', 'L', 'B', '1'};

class Writer {
public:
  explicit Writer(std::vector<std::byte>& out) : out_(out) {}

  template <class U>
  void integer(U value) {
    for (std::size_t i = 0; i < sizeof(U); ++i) {
      out_.push_back(static_cast<std::byte>((static_cast<std::uint64_t>(value) >> (8 * i)) & 0xffu));
    }
  }

  // Elements of `width` bytes in native order, emitted little-endian.
  void elements(std::span<const std::byte> data, std::size_t width) {
    if constexpr (std::endian::native == std::endian::little) {
      out_.insert(out_.end(), data.begin(), data.end());
    } else {
      for (std::size_t e = 0; e < data.size(); e += width) {
        for (std::size_t b = width; b-- > 0;) {
          out_.push_back(data[e + b]);
        }
      }
    }
  }

private:
  std::vector<std::byte>& out_;
};

class Reader {
public:
  explicit Reader(const std::vector<std::byte>& in) : in_(in) {}

  std::size_t offset() const noexcept { return pos_; }

  void need(std::size_t n, const char* what) const {
    if (in_.size() - pos_ < n) {
      throw CheckpointError(std::string("truncated checkpoint while reading ") + what, in_.size());
    }
  }

  template <class U>
  U integer(const char* what) {
    need(sizeof(U), what);
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < sizeof(U); ++i) {
      v |= static_cast<std::uint64_t>(std::to_integer<std::uint8_t>(in_[pos_ + i])) << (8 * i);
    }
    pos_ += sizeof(U);
    return static_cast<U>(v);
  }

  void elements(std::span<std::byte> dst, std::size_t width, const char* what) {
    need(dst.size(), what);
    if constexpr (std::endian::native == std::endian::little) {
      std::memcpy(dst.data(), in_.data() + pos_, dst.size());
    } else {
      for (std::size_t e = 0; e < dst.size(); e += width) {
        for (std::size_t b = 0; b < width; ++b) {
          dst[e + b] = in_[pos_ + e + width - 1 - b];
        }
      }
    }
    pos_ += dst.size();
  }

  std::byte byte(const char* what) {
    need(1, what);
    return in_[pos_++];
  }

private:
  const std::vector<std::byte>& in_;
  std::size_t pos_ = 0;
};

} // namespace

std::vector<std::byte> encodeCheckpoint(const SimState& state) {
  std::vector<std::byte> out;
  const std::size_t width = storageBytes(state.pre.storage());
  out.reserve(kCheckpointHeaderBytes + state.pre.bytes().size() + state.pre.cells());
  Writer w(out);
  for (char c : kMagic) {
    w.integer(static_cast<std::uint8_t>(c));
  }
  w.integer(kCheckpointVersion);
  w.integer(static_cast<std::uint32_t>(state.nx()));
  w.integer(static_cast<std::uint32_t>(state.ny()));
  w.integer(static_cast<std::uint8_t>(state.precision));
  w.integer(static_cast<std::uint8_t>(state.layout()));
  w.integer(static_cast<std::uint64_t>(state.timestep));
  w.elements(state.pre.bytes(), width);
  for (CellType t : state.mask.types()) {
    w.integer(static_cast<std::uint8_t>(t));
  }
  return out;
}

CheckpointData decodeCheckpoint(const std::vector<std::byte>& bytes) {
  Reader r(bytes);
  for (char c : kMagic) {
    const std::size_t at = r.offset();
    if (r.integer<std::uint8_t>("magic") != static_cast<std::uint8_t>(c)) {
      throw CheckpointError("not a checkpoint file (bad magic)", at);
    }
  }
  CheckpointData data;
  CheckpointHeader& h = data.header;

  std::size_t at = r.offset();
  h.version = r.integer<std::uint32_t>("version");
  if (h.version != kCheckpointVersion) {
    throw CheckpointError("unsupported checkpoint version " + std::to_string(h.version) + " (expected " +
                              std::to_string(kCheckpointVersion) + ")",
                          at);
  }
  at = r.offset();
  h.nx = r.integer<std::uint32_t>("nx");
  h.ny = r.integer<std::uint32_t>("ny");
  if (h.nx == 0 || h.ny == 0) {
    throw CheckpointError("checkpoint declares an empty grid", at);
  }
  at = r.offset();
  const auto precision = r.integer<std::uint8_t>("precision");
  if (precision > 3) {
    throw CheckpointError("unknown precision code " + std::to_string(precision), at);
  }
  h.precision = static_cast<Precision>(precision);
  at = r.offset();
  const auto layout = r.integer<std::uint8_t>("layout");
  if (layout > 1) {
    throw CheckpointError("unknown layout code " + std::to_string(layout), at);
  }
  h.layout = static_cast<Layout>(layout);
  h.timestep = r.integer<std::uint64_t>("timestep");

  const StoragePrecision storage = storagePrecision(h.precision);
  data.populations = PopulationField(h.nx, h.ny, h.layout, storage);
  r.elements(data.populations.bytes(), storageBytes(storage), "populations");

  const std::size_t cells = static_cast<std::size_t>(h.nx) * h.ny;
  r.need(cells, "mask");
  data.mask.resize(cells);
  for (std::size_t k = 0; k < cells; ++k) {
    at = r.offset();
    const auto code = std::to_integer<std::uint8_t>(r.byte("mask"));
    if (code > static_cast<std::uint8_t>(CellType::Outlet)) {
      throw CheckpointError("unknown cell type code " + std::to_string(code), at);
    }
    data.mask[k] = static_cast<CellType>(code);
  }
  if (r.offset() != bytes.size()) {
    throw CheckpointError("trailing bytes after mask", r.offset());
  }
  return data;
}

void writeCheckpoint(const SimState& state, const std::filesystem::path& path) {
  const std::vector<std::byte> bytes = encodeCheckpoint(state);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw IoError("cannot open checkpoint for writing: " + path.string());
  }
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) {
    throw IoError("failed writing checkpoint: " + path.string());
  }
}

CheckpointData readCheckpoint(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open checkpoint: " + path.string());
  }
  std::vector<char> raw((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  std::vector<std::byte> bytes(raw.size());
  std::memcpy(bytes.data(), raw.data(), raw.size());
  return decodeCheckpoint(bytes);
}

void restoreInto(SimState& state, const CheckpointData& data) {
  const CheckpointHeader& h = data.header;
  if (h.nx != state.nx() || h.ny != state.ny()) {
    throw CheckpointError("checkpoint grid " + std::to_string(h.nx) + "x" + std::to_string(h.ny) +
                              " does not match " + std::to_string(state.nx()) + "x" + std::to_string(state.ny()),
                          8);
  }
  if (h.precision != state.precision || h.layout != state.layout()) {
    throw CheckpointError("checkpoint precision/layout (" + std::string(toString(h.precision)) + ", " +
                              std::string(toString(h.layout)) + ") does not match the run",
                          16);
  }
  const auto types = state.mask.types();
  if (!std::equal(types.begin(), types.end(), data.mask.begin(), data.mask.end())) {
    throw CheckpointError("checkpoint mask does not match the case geometry",
                          kCheckpointHeaderBytes + data.populations.bytes().size());
  }
  state.pre = data.populations;
  state.post = data.populations;
  state.timestep = static_cast<std::int64_t>(h.timestep);
}

SimState restoreCheckpoint(const std::filesystem::path& path, const RunConfig& config) {
  SimState state = makeState(config);
  restoreInto(state, readCheckpoint(path));
  return state;
}

} // namespace minilb
