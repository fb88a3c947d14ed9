#pragma once

#include <array>
#include <cstddef>
#include <cstdint>

namespace minilb::d2q9 {

inline constexpr std::size_t kQ = 9;

// 0: rest, 1-4: E N W S, 5-8: NE NW SW SE
inline constexpr std::array<int, kQ> kCx = {0, 1, 0, -1, 0, 1, -1, -1, 1};
inline constexpr std::array<int, kQ> kCy = {0, 0, 1, 0, -1, 1, 1, -1, -1};
inline constexpr std::array<std::size_t, kQ> kOpposite = {0, 3, 4, 1, 2, 7, 8, 5, 6};

struct Rational {
  std::int64_t num;
  std::int64_t den;
};

inline constexpr std::array<Rational, kQ> kWeightsExact = {{
    {4, 9},
    {1, 9}, {1, 9}, {1, 9}, {1, 9},
    {1, 36}, {1, 36}, {1, 36}, {1, 36},
}};
inline constexpr Rational kCsSqExact = {1, 3};

inline constexpr double kW0 = 4.0 / 9.0;
inline constexpr double kW1 = 1.0 / 9.0;
inline constexpr double kW2 = 1.0 / 36.0;
inline constexpr std::array<double, kQ> kWeights = {kW0, kW1, kW1, kW1, kW1, kW2, kW2, kW2, kW2};
inline constexpr double kCsSq = 1.0 / 3.0;

} // namespace minilb::d2q9
