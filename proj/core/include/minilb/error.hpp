#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace minilb {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Invalid parameters or case geometry. The CLI maps these to exit code 1.
class ConfigError : public Error {
public:
  using Error::Error;
};

/// Non-finite values or unstable dynamics. The CLI maps these to exit code 2.
class NumericalError : public Error {
public:
  using Error::Error;
};

class IoError : public Error {
public:
  using Error::Error;
};

/// Malformed checkpoint. offset() is the byte position where decoding stopped.
class CheckpointError : public IoError {
public:
  CheckpointError(const std::string& what, std::uint64_t offset)
      : IoError(what + " (at byte offset " + std::to_string(offset) + ")"), offset_(offset) {}

  std::uint64_t offset() const noexcept { return offset_; }

private:
  std::uint64_t offset_;
};

} // namespace minilb
