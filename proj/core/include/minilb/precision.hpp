#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "minilb/half.hpp"

namespace minilb {

/// Storage/compute pairing of a run.
///   Single: float/float, Double: double/double,
///   Mixed1: binary16/float, Mixed2: float/double.
enum class Precision : unsigned char { Single = 0, Double = 1, Mixed1 = 2, Mixed2 = 3 };

enum class StoragePrecision : unsigned char { Half = 0, Single = 1, Double = 2 };

/// Flat-index convention of a 2D field with extents (nx, ny).
///   ColumnMajor: x varies fastest, index = x + nx * y.
///   RowMajor:    y varies fastest, index = x * ny + y.
enum class Layout : unsigned char { RowMajor = 0, ColumnMajor = 1 };

enum class ConversionDirection { Store, Compute };

enum class OverflowPolicy { Strict, Clamp };

template <Precision P>
struct PrecisionTraits;

template <>
struct PrecisionTraits<Precision::Single> {
  using Storage = float;
  using Compute = float;
};
template <>
struct PrecisionTraits<Precision::Double> {
  using Storage = double;
  using Compute = double;
};
template <>
struct PrecisionTraits<Precision::Mixed1> {
  using Storage = Half;
  using Compute = float;
};
template <>
struct PrecisionTraits<Precision::Mixed2> {
  using Storage = float;
  using Compute = double;
};

StoragePrecision storagePrecision(Precision p) noexcept;
std::size_t storageBytes(StoragePrecision s) noexcept;
/// Bytes of the floating-point type arithmetic is carried out in (4 or 8).
std::size_t computeBytes(Precision p) noexcept;

std::string_view toString(Precision p) noexcept;
std::string_view toString(Layout l) noexcept;
std::string_view toString(StoragePrecision s) noexcept;
/// Accepts the CLI spellings (single, double, mixed1, mixed2 / row, col).
Precision parsePrecision(std::string_view text);
Layout parseLayout(std::string_view text);

struct ConvertedValue {
  double value;
  bool clamped = false;
};

/// Rounds `value` to the storage or compute type of `mode` and returns it
/// widened back to double. Overflow of the target range throws NumericalError
/// under OverflowPolicy::Strict and saturates to the largest finite value
/// (with `clamped` set) under OverflowPolicy::Clamp.
ConvertedValue convertPrecision(double value, Precision mode, ConversionDirection direction,
                                OverflowPolicy policy = OverflowPolicy::Strict);

} // namespace minilb
