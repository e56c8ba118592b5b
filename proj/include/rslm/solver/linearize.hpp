#ifndef RSLM_SOLVER_LINEARIZE_HPP_
#define RSLM_SOLVER_LINEARIZE_HPP_

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "rslm/algebra/bitmatrix.hpp"
#include "rslm/algebra/linalg.hpp"
#include "rslm/modeling/macaulay.hpp"

namespace rslm {

class ExtractionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class KernelStatus {
  unique,          // kernel dimension 1
  none,            // only the zero vector
  underdetermined, // kernel dimension > 1
  degenerate,      // every row is zero
};

inline const char* to_string(KernelStatus s) {
  switch (s) {
    case KernelStatus::unique: return "unique";
    case KernelStatus::none: return "no solution at this weight/strategy";
    case KernelStatus::underdetermined: return "insufficient equations, increase b or shorten more";
    case KernelStatus::degenerate: return "degenerate system (all equations vanish)";
  }
  return "?";
}

/// Right kernel of the linearized system; values holds the kernel vector when unique.
struct KernelSolution {
  KernelStatus status = KernelStatus::none;
  std::size_t rank = 0;
  std::size_t kernel_dim = 0;
  std::vector<Elem> values;
  std::vector<std::vector<Elem>> basis;  // full kernel basis, kept for small-kernel enumeration
};

inline KernelSolution solve_linearized(const MacaulayMatrix<PrimeField>& M) {
  KernelSolution out;
  const std::size_t cols = M.num_cols();
  std::vector<std::vector<Elem>> basis;
  if (M.field.order() == 2) {
    BitMatrix B(M.num_rows(), cols);
    for (std::size_t i = 0; i < M.num_rows(); ++i)
      for (const auto& e : M.rows[i]) B.set(i, e.first);
    for (auto& v : B.kernel()) basis.emplace_back(v.begin(), v.end());
  } else {
    const auto K = kernel(M.dense());
    for (std::size_t i = 0; i < K.rows(); ++i) basis.emplace_back(K.row(i).begin(), K.row(i).end());
  }
  out.kernel_dim = basis.size();
  out.rank = cols - basis.size();
  if (out.rank == 0 && cols > 0) {
    out.status = KernelStatus::degenerate;
  } else if (basis.empty()) {
    out.status = KernelStatus::none;
  } else if (basis.size() > 1) {
    out.status = KernelStatus::underdetermined;
  } else {
    out.status = KernelStatus::unique;
    out.values = basis.front();
  }
  out.basis = std::move(basis);
  return out;
}

struct Rank1Point {
  std::vector<Elem> lambda;
  std::map<Subset, Elem> r;
};

/// Reads Z[i][T] = value(lambda_i r_T) off the degree-(1,1) columns and splits
/// it as lambda r^T, normalising the first nonzero lambda to one.
template <FiniteField Field>
Rank1Point rank1_extract(const Field& F, const std::vector<Monomial>& columns, const std::vector<Elem>& values,
                         std::uint32_t num_lambda) {
  std::map<Subset, std::vector<Elem>> Z;  // T -> column of Z
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].lam.size() != 1) continue;
    auto& col = Z[columns[c].T];
    col.resize(num_lambda, 0);
    col[columns[c].lam[0]] = values[c];
  }
  const std::vector<Elem>* pivot = nullptr;
  for (const auto& [T, col] : Z)
    for (Elem v : col)
      if (v && !pivot) pivot = &col;
  if (!pivot) throw ExtractionError("no nonzero solution in the bilinear block");

  Rank1Point p;
  std::size_t i0 = 0;
  while ((*pivot)[i0] == 0) ++i0;
  const Elem inv = F.inv((*pivot)[i0]);
  p.lambda.resize(num_lambda);
  for (std::uint32_t i = 0; i < num_lambda; ++i) p.lambda[i] = F.mul((*pivot)[i], inv);
  for (const auto& [T, col] : Z) {
    const Elem rt = col[i0];
    for (std::uint32_t i = 0; i < num_lambda; ++i)
      if (col[i] != F.mul(p.lambda[i], rt)) throw ExtractionError("kernel vector is not rank one (Z has rank >= 2)");
    if (rt) p.r.emplace(T, rt);
  }
  return p;
}

/// Matrix whose maximal minors are proportional to r. The pivot set T0 is the
/// smallest T (lexicographically) with r_T != 0, so the result is in reduced
/// echelon form: entry (i, j) = (-1)^{p-i} r_{(T0 - t_i) + j} / r_{T0}, p the
/// position of j in that set.
template <FiniteField Field>
Matrix<Field> plucker_reconstruct(const Field& F, const std::map<Subset, Elem>& r, std::uint32_t w,
                                  std::uint32_t n_cols) {
  auto lookup = [&](const Subset& T) {
    auto it = r.find(T);
    return it == r.end() ? Elem{0} : it->second;
  };
  const Subset* T0 = nullptr;
  for (const auto& [T, v] : r)
    if (v && T.size() == w) {
      T0 = &T;
      break;
    }
  if (!T0) throw ExtractionError("no nonzero Plucker coordinate");
  const Elem inv0 = F.inv(lookup(*T0));
  Matrix<Field> R(F, w, n_cols);
  for (std::uint32_t i = 0; i < w; ++i)
    for (std::uint32_t j = 0; j < n_cols; ++j) {
      if (contains(*T0, j)) {
        R(i, j) = (*T0)[i] == j ? F.one() : F.zero();
        continue;
      }
      const Subset T = insert_sorted(erase_value(*T0, (*T0)[i]), j);
      const std::uint32_t p = position(j, T) - 1;
      Elem v = F.mul(lookup(T), inv0);
      if ((p + i) % 2) v = F.neg(v);
      R(i, j) = v;
    }
  const Elem scale = lookup(*T0);
  for (const auto& [T, v] : maximal_minors(R))
    if (F.mul(v, scale) != lookup(T)) throw ExtractionError("not a Plucker point");
  return R;
}

}  // namespace rslm

#endif  // RSLM_SOLVER_LINEARIZE_HPP_
