#ifndef RSLM_ALGEBRA_MATRIX_HPP_
#define RSLM_ALGEBRA_MATRIX_HPP_

#include <concepts>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "rslm/algebra/extension_field.hpp"
#include "rslm/algebra/prime_field.hpp"

namespace rslm {

template <class F>
concept FiniteField = requires(const F& f, Elem a) {
  { f.zero() } -> std::convertible_to<Elem>;
  { f.one() } -> std::convertible_to<Elem>;
  { f.add(a, a) } -> std::convertible_to<Elem>;
  { f.sub(a, a) } -> std::convertible_to<Elem>;
  { f.neg(a) } -> std::convertible_to<Elem>;
  { f.mul(a, a) } -> std::convertible_to<Elem>;
  { f.inv(a) } -> std::convertible_to<Elem>;
  { f.contains(a) } -> std::convertible_to<bool>;
  { f.order() } -> std::convertible_to<std::uint64_t>;
};

/// Dense row-major matrix over a finite field; entries are element tokens.
template <FiniteField Field>
class Matrix {
 public:
  Matrix(Field field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  Matrix(Field field, std::size_t rows, std::size_t cols, std::vector<Elem> data)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) throw std::invalid_argument("Matrix: entry count does not match shape");
    for (Elem e : data_)
      if (!field_.contains(e)) throw std::invalid_argument("Matrix: entry outside the field");
  }

  static Matrix identity(const Field& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
  }

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Elem& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  Elem operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<Elem> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const Elem> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  const std::vector<Elem>& data() const { return data_; }

  bool is_zero() const {
    for (Elem e : data_)
      if (e != 0) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix submatrix(std::span<const std::size_t> row_idx, std::span<const std::size_t> col_idx) const {
    Matrix s(field_, row_idx.size(), col_idx.size());
    for (std::size_t i = 0; i < row_idx.size(); ++i)
      for (std::size_t j = 0; j < col_idx.size(); ++j) s(i, j) = (*this)(row_idx[i], col_idx[j]);
    return s;
  }

  Matrix col_range(std::size_t first, std::size_t last) const {
    Matrix s(field_, rows_, last - first);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = first; j < last; ++j) s(i, j - first) = (*this)(i, j);
    return s;
  }

  Matrix row_range(std::size_t first, std::size_t last) const {
    Matrix s(field_, last - first, cols_);
    for (std::size_t i = first; i < last; ++i)
      for (std::size_t j = 0; j < cols_; ++j) s(i - first, j) = (*this)(i, j);
    return s;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Elem> data_;
};

template <FiniteField Field>
Matrix<Field> operator*(const Matrix<Field>& a, const Matrix<Field>& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("Matrix product: inner dimensions differ");
  const auto& F = a.field();
  Matrix<Field> c(F, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t l = 0; l < a.cols(); ++l) {
      const Elem x = a(i, l);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = F.add(c(i, j), F.mul(x, b(l, j)));
    }
  return c;
}

using FqMatrix = Matrix<PrimeField>;
using FqmMatrix = Matrix<ExtensionField>;

/// Lifts a matrix over F_q into F_{q^m}.
inline FqmMatrix embed(const ExtensionField& L, const FqMatrix& a) {
  FqmMatrix out(L, a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = L.embed(a(i, j));
  return out;
}

/// Expands a row vector over F_{q^m} into the m x n coordinate matrix over F_q.
inline FqMatrix unfold_vector(const ExtensionField& L, std::span<const Elem> x) {
  FqMatrix out(L.base(), L.degree(), x.size());
  for (std::size_t j = 0; j < x.size(); ++j)
    for (unsigned l = 0; l < L.degree(); ++l) out(l, j) = L.coord(x[j], l);
  return out;
}

/// Inverse of unfold_vector: column j of the coordinate matrix becomes entry j.
inline std::vector<Elem> fold_columns(const ExtensionField& L, const FqMatrix& coords) {
  if (coords.rows() != L.degree()) throw std::invalid_argument("fold_columns: row count must equal m");
  std::vector<Elem> out(coords.cols());
  std::vector<Elem> col(L.degree());
  for (std::size_t j = 0; j < coords.cols(); ++j) {
    for (unsigned l = 0; l < L.degree(); ++l) col[l] = coords(l, j);
    out[j] = L.fold(col);
  }
  return out;
}

}  // namespace rslm

#endif  // RSLM_ALGEBRA_MATRIX_HPP_
