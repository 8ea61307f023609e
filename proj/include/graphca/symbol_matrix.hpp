#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace graphca {

using Symbol = std::uint32_t;

/// Dense row-major matrix over Z_g.
class SymbolMatrix {
 public:
  SymbolMatrix() = default;
  SymbolMatrix(std::size_t rows, std::size_t cols, Symbol fill = 0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Symbol& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Symbol at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Symbol> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Symbol> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  friend bool operator==(const SymbolMatrix&, const SymbolMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Symbol> data_;
};

}  // namespace graphca
