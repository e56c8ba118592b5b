#ifndef RSLM_ALGEBRA_BITMATRIX_HPP_
#define RSLM_ALGEBRA_BITMATRIX_HPP_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "rslm/algebra/matrix.hpp"

namespace rslm {

/// Packed dense matrix over F_2 with word-parallel elimination.
class BitMatrix {
 public:
  BitMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), words_((cols + 63) / 64), bits_(rows * words_, 0) {}

  static BitMatrix from(const FqMatrix& m) {
    if (m.field().order() != 2) throw std::invalid_argument("BitMatrix: field must be F_2");
    BitMatrix b(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        if (m(i, j)) b.set(i, j);
    return b;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t i, std::size_t j) const { return (bits_[i * words_ + j / 64] >> (j % 64)) & 1u; }
  void set(std::size_t i, std::size_t j) { bits_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64); }
  void flip(std::size_t i, std::size_t j) { bits_[i * words_ + j / 64] ^= std::uint64_t{1} << (j % 64); }

  /// In-place reduced row echelon form; returns pivot columns.
  std::vector<std::size_t> reduce() {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
      const std::size_t w = c / 64;
      const std::uint64_t mask = std::uint64_t{1} << (c % 64);
      std::size_t p = r;
      while (p < rows_ && !(bits_[p * words_ + w] & mask)) ++p;
      if (p == rows_) continue;
      if (p != r)
        for (std::size_t k = 0; k < words_; ++k) std::swap(bits_[p * words_ + k], bits_[r * words_ + k]);
      const std::uint64_t* src = &bits_[r * words_];
      for (std::size_t i = 0; i < rows_; ++i) {
        if (i == r) continue;
        std::uint64_t* dst = &bits_[i * words_];
        if (dst[w] & mask)
          for (std::size_t k = w; k < words_; ++k) dst[k] ^= src[k];
      }
      pivots.push_back(c);
      ++r;
    }
    return pivots;
  }

  std::size_t rank() const {
    BitMatrix copy = *this;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
      const std::size_t w = c / 64;
      const std::uint64_t mask = std::uint64_t{1} << (c % 64);
      std::size_t p = r;
      while (p < rows_ && !(copy.bits_[p * words_ + w] & mask)) ++p;
      if (p == rows_) continue;
      if (p != r)
        for (std::size_t k = w; k < words_; ++k) std::swap(copy.bits_[p * words_ + k], copy.bits_[r * words_ + k]);
      const std::uint64_t* src = &copy.bits_[r * words_];
      for (std::size_t i = r + 1; i < rows_; ++i) {
        std::uint64_t* dst = &copy.bits_[i * words_];
        if (dst[w] & mask)
          for (std::size_t k = w; k < words_; ++k) dst[k] ^= src[k];
      }
      ++r;
    }
    return r;
  }

  /// Right kernel basis as rows of a (cols - rank) x cols matrix over F_2.
  std::vector<std::vector<std::uint8_t>> kernel() const {
    BitMatrix red = *this;
    const auto pivots = red.reduce();
    std::vector<bool> is_pivot(cols_, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::vector<std::uint8_t>> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
      if (is_pivot[free]) continue;
      std::vector<std::uint8_t> v(cols_, 0);
      v[free] = 1;
      for (std::size_t i = 0; i < pivots.size(); ++i)
        if (red.get(i, free)) v[pivots[i]] = 1;
      basis.push_back(std::move(v));
    }
    return basis;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
};

}  // namespace rslm

#endif  // RSLM_ALGEBRA_BITMATRIX_HPP_
