#ifndef RSLM_CORE_SUPPORT_HPP_
#define RSLM_CORE_SUPPORT_HPP_

#include <cstdint>
#include <vector>

#include "rslm/algebra/linalg.hpp"
#include "rslm/core/instance.hpp"

namespace rslm {

/// True iff every syndrome admits an error with all entries in span(V).
///
/// Unknowns are the coordinates x_{j,l} with e_j = sum_l x_{j,l} v_l; the
/// unfolded system has m(n-k) equations in n*d unknowns.
inline bool verify_support(const RslInstance& inst, const FqMatrix& V) {
  const auto& L = inst.field;
  const auto& K = L.base();
  const std::uint32_t m = L.degree(), n = inst.n(), nk = inst.redundancy();
  const std::size_t d = V.cols();
  if (V.rows() != m || d == 0) throw std::invalid_argument("verify_support: basis must be m x d with d >= 1");
  const auto v = fold_columns(L, V);

  FqMatrix A(K, std::size_t{m} * nk, std::size_t{n} * d);
  for (std::uint32_t row = 0; row < nk; ++row)
    for (std::uint32_t j = 0; j < n; ++j) {
      if (inst.H(row, j) == 0) continue;
      for (std::size_t l = 0; l < d; ++l) {
        const auto c = L.unfold(L.mul(inst.H(row, j), v[l]));
        for (std::uint32_t t = 0; t < m; ++t) A(std::size_t{row} * m + t, j * d + l) = c[t];
      }
    }
  auto red = rref(A);
  std::vector<Elem> rhs(A.rows());
  for (std::uint32_t i = 0; i < inst.num_errors(); ++i) {
    for (std::uint32_t row = 0; row < nk; ++row) {
      const auto c = L.unfold(inst.S(row, i));
      for (std::uint32_t t = 0; t < m; ++t) rhs[std::size_t{row} * m + t] = c[t];
    }
    // consistent iff the transformed rhs vanishes beyond the rank
    for (std::size_t r = red.rank; r < A.rows(); ++r) {
      Elem acc = 0;
      for (std::size_t c = 0; c < A.rows(); ++c)
        if (red.transform(r, c)) acc = K.add(acc, K.mul(red.transform(r, c), rhs[c]));
      if (acc != 0) return false;
    }
  }
  return true;
}

/// Reduced basis of the column span, as the rows of the RREF of the transpose.
inline FqMatrix reduced_span(const FqMatrix& basis) {
  auto r = rref(basis.transpose());
  return r.reduced.row_range(0, r.rank);
}

inline bool same_span(const FqMatrix& a, const FqMatrix& b) { return reduced_span(a) == reduced_span(b); }

/// Reduced basis (as columns) of span(a) + span(b).
inline FqMatrix span_sum(const FqMatrix& a, const FqMatrix& b) {
  FqMatrix both(a.field(), a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) both(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) both(i, a.cols() + j) = b(i, j);
  }
  return reduced_span(both).transpose();
}

/// span(a) is contained in span(b).
inline bool span_contains(const FqMatrix& b, const FqMatrix& a) {
  FqMatrix both(b.field(), b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) both(i, j) = b(i, j);
    for (std::size_t j = 0; j < a.cols(); ++j) both(i, b.cols() + j) = a(i, j);
  }
  return rank(both) == rank(b);
}

}  // namespace rslm

#endif  // RSLM_CORE_SUPPORT_HPP_
