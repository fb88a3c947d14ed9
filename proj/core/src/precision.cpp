#include "minilb/precision.hpp"

#include <cmath>
#include <limits>

#include "minilb/error.hpp"

namespace minilb {

StoragePrecision storagePrecision(Precision p) noexcept {
  switch (p) {
  case Precision::Double: return StoragePrecision::Double;
  case Precision::Mixed1: return StoragePrecision::Half;
  case Precision::Single:
  case Precision::Mixed2: break;
  }
  return StoragePrecision::Single;
}

std::size_t storageBytes(StoragePrecision s) noexcept {
  switch (s) {
  case StoragePrecision::Half: return 2;
  case StoragePrecision::Single: return 4;
  case StoragePrecision::Double: break;
  }
  return 8;
}

std::size_t computeBytes(Precision p) noexcept {
  return (p == Precision::Double || p == Precision::Mixed2) ? 8 : 4;
}

std::string_view toString(Precision p) noexcept {
  switch (p) {
  case Precision::Single: return "single";
  case Precision::Double: return "double";
  case Precision::Mixed1: return "mixed1";
  case Precision::Mixed2: break;
  }
  return "mixed2";
}

std::string_view toString(Layout l) noexcept {
  return l == Layout::RowMajor ? "row" : "col";
}

std::string_view toString(StoragePrecision s) noexcept {
  switch (s) {
  case StoragePrecision::Half: return "half";
  case StoragePrecision::Single: return "single";
  case StoragePrecision::Double: break;
  }
  return "double";
}

Precision parsePrecision(std::string_view text) {
  if (text == "single") return Precision::Single;
  if (text == "double") return Precision::Double;
  if (text == "mixed1") return Precision::Mixed1;
  if (text == "mixed2") return Precision::Mixed2;
  throw ConfigError("unknown precision '" + std::string(text) + "' (expected single, double, mixed1 or mixed2)");
}

Layout parseLayout(std::string_view text) {
  if (text == "row") return Layout::RowMajor;
  if (text == "col") return Layout::ColumnMajor;
  throw ConfigError("unknown layout '" + std::string(text) + "' (expected row or col)");
}

namespace {

ConvertedValue overflowed(double value, double maxFinite, OverflowPolicy policy, std::string_view target) {
  if (policy == OverflowPolicy::Strict) {
    throw NumericalError("value " + std::to_string(value) + " overflows " + std::string(target) + " storage");
  }
  return {std::copysign(maxFinite, value), true};
}

ConvertedValue toFloat(double value, OverflowPolicy policy) {
  const auto narrowed = static_cast<float>(value);
  if (std::isinf(narrowed) && std::isfinite(value)) {
    return overflowed(value, std::numeric_limits<float>::max(), policy, "32-bit");
  }
  return {static_cast<double>(narrowed)};
}

} // namespace

ConvertedValue convertPrecision(double value, Precision mode, ConversionDirection direction,
                                OverflowPolicy policy) {
  if (!std::isfinite(value)) {
    throw NumericalError("non-finite value passed to precision conversion");
  }
  const bool computeIsDouble = computeBytes(mode) == 8;
  if (direction == ConversionDirection::Compute) {
    return computeIsDouble ? ConvertedValue{value} : toFloat(value, policy);
  }

  switch (storagePrecision(mode)) {
  case StoragePrecision::Double:
    return {value};
  case StoragePrecision::Single:
    return toFloat(value, policy);
  case StoragePrecision::Half: {
    // Mixed1 stores values that were computed in float, so narrow through it.
    const ConvertedValue asFloat = toFloat(value, policy);
    if (asFloat.clamped) {
      return overflowed(value, kHalfMax, policy, "16-bit");
    }
    const Half h = floatToHalf(static_cast<float>(asFloat.value));
    const float back = halfToFloat(h);
    if (std::isinf(back)) {
      return overflowed(value, kHalfMax, policy, "16-bit");
    }
    return {static_cast<double>(back)};
  }
  }
  return {value};
}

} // namespace minilb
