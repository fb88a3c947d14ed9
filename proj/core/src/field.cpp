#include "minilb/field.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>

#include "minilb/error.hpp"

namespace minilb {

PopulationField::PopulationField(std::size_t nx, std::size_t ny, Layout layout, StoragePrecision storage)
    : grid_{nx, ny, layout}, storage_(storage) {
  if (nx == 0 || ny == 0) {
    throw ConfigError("population field needs a non-empty grid");
  }
  const std::size_t n = d2q9::kQ * nx * ny;
  switch (storage) {
  case StoragePrecision::Half: data_ = std::vector<Half>(n); break;
  case StoragePrecision::Single: data_ = std::vector<float>(n, 0.0f); break;
  case StoragePrecision::Double: data_ = std::vector<double>(n, 0.0); break;
  }
}

double PopulationField::shifted(std::size_t i, std::size_t index) const {
  const std::size_t k = i * cells() + index;
  return std::visit(
      [k](const auto& v) -> double {
        using S = typename std::decay_t<decltype(v)>::value_type;
        if constexpr (std::is_same_v<S, Half>) {
          return halfToFloat(v[k]);
        } else {
          return static_cast<double>(v[k]);
        }
      },
      data_);
}

void PopulationField::setShifted(std::size_t i, std::size_t index, double value) {
  const std::size_t k = i * cells() + index;
  std::visit(
      [k, value](auto& v) {
        using S = typename std::decay_t<decltype(v)>::value_type;
        if constexpr (std::is_same_v<S, Half>) {
          v[k] = floatToHalf(static_cast<float>(value));
        } else {
          v[k] = static_cast<S>(value);
        }
      },
      data_);
}

double PopulationField::get(std::size_t i, std::size_t x, std::size_t y) const {
  return d2q9::kWeights[i] + shifted(i, grid_(x, y));
}

void PopulationField::set(std::size_t i, std::size_t x, std::size_t y, double f) {
  setShifted(i, grid_(x, y), f - d2q9::kWeights[i]);
}

std::span<const std::byte> PopulationField::bytes() const {
  return std::visit([](const auto& v) { return std::as_bytes(std::span(v)); }, data_);
}

std::span<std::byte> PopulationField::bytes() {
  return std::visit([](auto& v) { return std::as_writable_bytes(std::span(v)); }, data_);
}

bool PopulationField::allFinite() const {
  return std::visit(
      [](const auto& v) {
        using S = typename std::decay_t<decltype(v)>::value_type;
        return std::all_of(v.begin(), v.end(), [](S s) {
          if constexpr (std::is_same_v<S, Half>) {
            return (s.bits & 0x7c00u) != 0x7c00u;
          } else {
            return std::isfinite(s);
          }
        });
      },
      data_);
}

bool PopulationField::sharesStorageWith(const PopulationField& other) const noexcept {
  const auto a = bytes();
  const auto b = other.bytes();
  if (a.empty() || b.empty()) {
    return false;
  }
  return a.data() < b.data() + b.size() && b.data() < a.data() + a.size();
}

bool operator==(const PopulationField& a, const PopulationField& b) {
  if (!a.sameShape(b)) {
    return false;
  }
  const auto x = a.bytes();
  const auto y = b.bytes();
  return x.size() == y.size() && std::memcmp(x.data(), y.data(), x.size()) == 0;
}

} // namespace minilb
