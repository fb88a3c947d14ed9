#pragma once

#include <cstddef>
#include <span>
#include <variant>
#include <vector>

#include "minilb/d2q9.hpp"
#include "minilb/half.hpp"
#include "minilb/precision.hpp"

namespace minilb {

/// Maps (x, y) to a flat index under one of the two layouts.
struct GridIndexer {
  std::size_t nx = 0;
  std::size_t ny = 0;
  Layout layout = Layout::ColumnMajor;

  std::size_t cells() const noexcept { return nx * ny; }

  std::size_t operator()(std::size_t x, std::size_t y) const noexcept {
    return layout == Layout::ColumnMajor ? x + nx * y : x * ny + y;
  }

  std::size_t x(std::size_t index) const noexcept {
    return layout == Layout::ColumnMajor ? index % nx : index / ny;
  }
  std::size_t y(std::size_t index) const noexcept {
    return layout == Layout::ColumnMajor ? index / nx : index % ny;
  }

  friend bool operator==(const GridIndexer&, const GridIndexer&) = default;
};

/// Nine population planes over an nx x ny grid, structure-of-arrays: plane i
/// holds direction i for every cell contiguously in the declared layout.
///
/// Values are kept shifted by the lattice weight (stored = f_i - w_i); get()
/// and set() work with the physical population f_i.
class PopulationField {
public:
  PopulationField() = default;
  PopulationField(std::size_t nx, std::size_t ny, Layout layout, StoragePrecision storage);

  std::size_t nx() const noexcept { return grid_.nx; }
  std::size_t ny() const noexcept { return grid_.ny; }
  std::size_t cells() const noexcept { return grid_.cells(); }
  Layout layout() const noexcept { return grid_.layout; }
  StoragePrecision storage() const noexcept { return storage_; }
  const GridIndexer& grid() const noexcept { return grid_; }

  double get(std::size_t i, std::size_t x, std::size_t y) const;
  void set(std::size_t i, std::size_t x, std::size_t y, double f);

  double shifted(std::size_t i, std::size_t index) const;
  void setShifted(std::size_t i, std::size_t index, double value);

  /// Whole storage, planes back to back. S must match storage().
  template <class S>
  std::span<S> values() {
    return std::span<S>(std::get<std::vector<S>>(data_));
  }
  template <class S>
  std::span<const S> values() const {
    return std::span<const S>(std::get<std::vector<S>>(data_));
  }
  template <class S>
  std::span<S> plane(std::size_t i) {
    return values<S>().subspan(i * cells(), cells());
  }
  template <class S>
  std::span<const S> plane(std::size_t i) const {
    return values<S>().subspan(i * cells(), cells());
  }

  /// Raw storage bytes, native (little-endian) encoding.
  std::span<const std::byte> bytes() const;
  std::span<std::byte> bytes();

  bool allFinite() const;
  bool sharesStorageWith(const PopulationField& other) const noexcept;
  bool sameShape(const PopulationField& other) const noexcept {
    return grid_ == other.grid_ && storage_ == other.storage_;
  }

  /// Bitwise equality of shape and contents.
  friend bool operator==(const PopulationField& a, const PopulationField& b);

private:
  GridIndexer grid_;
  StoragePrecision storage_ = StoragePrecision::Single;
  std::variant<std::vector<Half>, std::vector<float>, std::vector<double>> data_;
};

} // namespace minilb
