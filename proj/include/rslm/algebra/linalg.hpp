#ifndef RSLM_ALGEBRA_LINALG_HPP_
#define RSLM_ALGEBRA_LINALG_HPP_

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "rslm/algebra/matrix.hpp"
#include "rslm/algebra/subsets.hpp"

namespace rslm {

template <FiniteField Field>
struct RrefResult {
  Matrix<Field> reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
  Matrix<Field> transform;  // transform * input == reduced
};

namespace detail {

// row_dst -= factor * row_src, starting at column `from`
template <FiniteField Field>
inline void axpy_row(const Field& F, std::span<Elem> dst, std::span<const Elem> src, Elem factor,
                     std::size_t from = 0) {
  if (factor == 0) return;
  const Elem neg = F.neg(factor);
  for (std::size_t j = from; j < dst.size(); ++j) {
    const Elem s = src[j];
    if (s != 0) dst[j] = F.add(dst[j], F.mul(neg, s));
  }
}

template <FiniteField Field>
inline void scale_row(const Field& F, std::span<Elem> row, Elem factor) {
  for (Elem& e : row)
    if (e != 0) e = F.mul(e, factor);
}

}  // namespace detail

/// Reduced row echelon form with the accumulated left transform.
template <FiniteField Field>
RrefResult<Field> rref(const Matrix<Field>& input) {
  const auto& F = input.field();
  Matrix<Field> a = input;
  Matrix<Field> t = Matrix<Field>::identity(F, input.rows());
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != r) {
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
      for (std::size_t j = 0; j < t.cols(); ++j) std::swap(t(p, j), t(r, j));
    }
    const Elem inv = F.inv(a(r, c));
    detail::scale_row(F, a.row(r), inv);
    detail::scale_row(F, t.row(r), inv);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r) continue;
      const Elem f = a(i, c);
      if (f == 0) continue;
      detail::axpy_row(F, a.row(i), a.row(r), f, c);
      detail::axpy_row(F, t.row(i), t.row(r), f);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(a), r, std::move(pivots), std::move(t)};
}

/// Rank by forward elimination; consumes a copy.
template <FiniteField Field>
std::size_t rank(Matrix<Field> a) {
  const auto& F = a.field();
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != r)
      for (std::size_t j = c; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    const Elem inv = F.inv(a(r, c));
    detail::scale_row(F, a.row(r), inv);
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      const Elem f = a(i, c);
      if (f != 0) detail::axpy_row(F, a.row(i), a.row(r), f, c);
    }
    ++r;
  }
  return r;
}

/// Basis of the right kernel {x : A x = 0}, one basis vector per row.
template <FiniteField Field>
Matrix<Field> kernel(const Matrix<Field>& a) {
  const auto& F = a.field();
  auto red = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : red.pivots) is_pivot[p] = true;
  const std::size_t dim = a.cols() - red.rank;
  Matrix<Field> basis(F, dim, a.cols());
  std::size_t b = 0;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    basis(b, free) = F.one();
    for (std::size_t i = 0; i < red.rank; ++i) basis(b, red.pivots[i]) = F.neg(red.reduced(i, free));
    ++b;
  }
  return basis;
}

/// One solution of A x = rhs, or nullopt when the system is inconsistent.
template <FiniteField Field>
std::optional<std::vector<Elem>> solve(const Matrix<Field>& a, std::span<const Elem> rhs) {
  if (rhs.size() != a.rows()) throw std::invalid_argument("solve: rhs length must equal row count");
  const auto& F = a.field();
  Matrix<Field> aug(F, a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = rhs[i];
  }
  auto red = rref(aug);
  std::vector<Elem> x(a.cols(), 0);
  for (std::size_t i = 0; i < red.rank; ++i) {
    if (red.pivots[i] == a.cols()) return std::nullopt;
    x[red.pivots[i]] = red.reduced(i, a.cols());
  }
  return x;
}

/// Row space equality via reduced echelon forms.
template <FiniteField Field>
bool same_row_space(const Matrix<Field>& a, const Matrix<Field>& b) {
  if (a.cols() != b.cols()) return false;
  auto ra = rref(a);
  auto rb = rref(b);
  if (ra.rank != rb.rank) return false;
  for (std::size_t i = 0; i < ra.rank; ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (ra.reduced(i, j) != rb.reduced(i, j)) return false;
  return true;
}

/// Determinant of a square matrix: direct formulas up to 3x3, elimination beyond.
template <FiniteField Field>
Elem determinant(const Matrix<Field>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix must be square");
  const auto& F = m.field();
  const std::size_t n = m.rows();
  if (n == 0) return F.one();
  if (n == 1) return m(0, 0);
  if (n == 2) return F.sub(F.mul(m(0, 0), m(1, 1)), F.mul(m(0, 1), m(1, 0)));
  if (n == 3) {
    Elem d = F.mul(m(0, 0), F.sub(F.mul(m(1, 1), m(2, 2)), F.mul(m(1, 2), m(2, 1))));
    d = F.sub(d, F.mul(m(0, 1), F.sub(F.mul(m(1, 0), m(2, 2)), F.mul(m(1, 2), m(2, 0)))));
    d = F.add(d, F.mul(m(0, 2), F.sub(F.mul(m(1, 0), m(2, 1)), F.mul(m(1, 1), m(2, 0)))));
    return d;
  }
  Matrix<Field> a = m;
  Elem det = F.one();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) return F.zero();
    if (p != c) {
      for (std::size_t j = c; j < n; ++j) std::swap(a(p, j), a(c, j));
      det = F.neg(det);
    }
    const Elem piv = a(c, c);
    det = F.mul(det, piv);
    const Elem inv = F.inv(piv);
    for (std::size_t i = c + 1; i < n; ++i) {
      const Elem f = a(i, c);
      if (f != 0) detail::axpy_row(F, a.row(i), a.row(c), F.mul(f, inv), c);
    }
  }
  return det;
}

/// Determinant of the square submatrix on the given rows and columns.
template <FiniteField Field>
Elem submatrix_det(const Matrix<Field>& m, std::span<const std::size_t> rows, std::span<const std::size_t> cols) {
  return determinant(m.submatrix(rows, cols));
}

/// All maximal minors of a matrix with rows <= cols, indexed by column subsets
/// in lexicographic order (0-based column indices).
template <FiniteField Field>
std::vector<std::pair<Subset, Elem>> maximal_minors(const Matrix<Field>& m) {
  if (m.rows() > m.cols()) throw std::invalid_argument("maximal_minors: rows must not exceed cols");
  std::vector<std::size_t> all_rows(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) all_rows[i] = i;
  std::vector<std::pair<Subset, Elem>> out;
  for_each_subset(static_cast<std::uint32_t>(m.cols()), static_cast<std::uint32_t>(m.rows()),
                  [&](const Subset& s) {
                    std::vector<std::size_t> cols(s.begin(), s.end());
                    out.emplace_back(s, submatrix_det(m, all_rows, cols));
                  });
  return out;
}

}  // namespace rslm

#endif  // RSLM_ALGEBRA_LINALG_HPP_
