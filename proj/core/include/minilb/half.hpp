#pragma once

#include <bit>
#include <cstdint>

namespace minilb {

/// IEEE 754 binary16 storage value. Arithmetic is never done on Half directly;
/// values are widened to float for computation.
struct Half {
  std::uint16_t bits = 0;

  friend constexpr bool operator==(Half, Half) = default;
};

/// Round-to-nearest-even narrowing. Values beyond the binary16 range become
/// infinity, NaN stays NaN.
inline Half floatToHalf(float value) noexcept {
  std::uint32_t f = std::bit_cast<std::uint32_t>(value);
  const std::uint32_t sign = (f >> 16) & 0x8000u;
  f &= 0x7fffffffu;

  if (f >= 0x7f800000u) {
    const std::uint32_t nanBits = f > 0x7f800000u ? (0x200u | ((f >> 13) & 0x3ffu)) : 0u;
    return Half{static_cast<std::uint16_t>(sign | 0x7c00u | nanBits)};
  }
  // 65520 and above round to infinity.
  if (f >= 0x477ff000u) {
    return Half{static_cast<std::uint16_t>(sign | 0x7c00u)};
  }
  if (f < 0x38800000u) {
    // Subnormal or zero: let the FPU do the rounding by aligning the mantissa
    // against 0.5f.
    const float shifted = std::bit_cast<float>(f) + 0.5f;
    const std::uint32_t h = std::bit_cast<std::uint32_t>(shifted) - std::bit_cast<std::uint32_t>(0.5f);
    return Half{static_cast<std::uint16_t>(sign | h)};
  }
  const std::uint32_t mantOdd = (f >> 13) & 1u;
  f += (static_cast<std::uint32_t>(15 - 127) << 23) + 0xfffu;
  f += mantOdd;
  return Half{static_cast<std::uint16_t>(sign | (f >> 13))};
}

inline float halfToFloat(Half h) noexcept {
  const std::uint32_t sign = static_cast<std::uint32_t>(h.bits & 0x8000u) << 16;
  const std::uint32_t exponent = (h.bits >> 10) & 0x1fu;
  const std::uint32_t mantissa = h.bits & 0x3ffu;

  if (exponent == 0) {
    if (mantissa == 0) {
      return std::bit_cast<float>(sign);
    }
    const float magnitude = static_cast<float>(mantissa) * 0x1p-24f;
    return sign ? -magnitude : magnitude;
  }
  if (exponent == 31) {
    return std::bit_cast<float>(sign | 0x7f800000u | (mantissa << 13));
  }
  return std::bit_cast<float>(sign | ((exponent + 112u) << 23) | (mantissa << 13));
}

inline constexpr float kHalfMax = 65504.0f;

} // namespace minilb
