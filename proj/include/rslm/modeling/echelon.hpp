#ifndef RSLM_MODELING_ECHELON_HPP_
#define RSLM_MODELING_ECHELON_HPP_

#include <string>
#include <vector>

#include "rslm/algebra/subsets.hpp"
#include "rslm/modeling/system.hpp"

namespace rslm {

class AssumptionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct TildeQ {
  FqmSystem system;                  // transformed equations, lambdas relabelled
  std::vector<Monomial> leading;     // leading monomial of each transformed equation
  std::vector<std::uint32_t> perm;   // new lambda l is old lambda perm[l]
  FqmMatrix lower;                   // T with T * S_top = U
};

namespace detail {

// T lower triangular with T * S_top = U, U[j][p_j] = 1 and U[j][p_l] = 0 for l < j.
inline std::pair<FqmMatrix, std::vector<std::uint32_t>> column_pivoted_lu(const FqmMatrix& top) {
  const auto& L = top.field();
  const std::size_t rho = top.rows(), N = top.cols();
  FqmMatrix T(L, rho, rho);
  FqmMatrix U = top;
  std::vector<std::uint32_t> pivots;
  for (std::size_t j = 0; j < rho; ++j) {
    T(j, j) = 1;
    for (std::size_t l = 0; l < j; ++l) {
      const Elem f = U(j, pivots[l]);
      if (f == 0) continue;
      detail::axpy_row(L, U.row(j), U.row(l), f);
      detail::axpy_row(L, T.row(j), T.row(l), f);
    }
    std::size_t p = 0;
    while (p < N && (U(j, p) == 0 || std::find(pivots.begin(), pivots.end(), p) != pivots.end())) ++p;
    if (p == N)
      throw AssumptionError("rows 1.." + std::to_string(rho) + " of S have rank " + std::to_string(j) +
                            " < n-k-w = " + std::to_string(rho));
    const Elem inv = L.inv(U(j, p));
    detail::scale_row(L, U.row(j), inv);
    detail::scale_row(L, T.row(j), inv);
    pivots.push_back(static_cast<std::uint32_t>(p));
  }
  return {T, pivots};
}

}  // namespace detail

/// lambda_{min J} r_{(J - min J) + k}, the leading monomial the recombination should produce.
inline Monomial expected_leading(const Subset& J, std::uint32_t k) {
  Subset T;
  for (std::size_t i = 1; i < J.size(); ++i) T.push_back(J[i] + k);
  return Monomial{{J.front()}, T};
}

/// Triangular recombination of the equations so that each one gets a distinct
/// leading monomial lambda_{min J} r_{(J - min J) + k}. Lambdas are relabelled
/// by the column pivots of the LU step (identity when no pivoting is needed).
inline TildeQ echelonize_tildeQ(const FqmSystem& sys, const RslInstance& inst, std::uint32_t w) {
  const auto& L = sys.field;
  const std::uint32_t nk = inst.redundancy(), k = inst.k();
  if (w + 1 > nk) throw std::invalid_argument("echelonize_tildeQ: need w < n-k");
  const std::uint32_t rho = nk - w;
  if (inst.num_errors() < rho)
    throw AssumptionError("only " + std::to_string(inst.num_errors()) + " syndromes, need n-k-w = " + std::to_string(rho));
  auto [T, pivots] = detail::column_pivoted_lu(inst.S.row_range(0, rho));

  std::vector<std::uint32_t> perm = pivots;
  for (std::uint32_t i = 0; i < sys.num_lambda; ++i)
    if (std::find(pivots.begin(), pivots.end(), i) == pivots.end()) perm.push_back(i);
  std::vector<std::uint32_t> relabel(sys.num_lambda);
  for (std::uint32_t l = 0; l < perm.size(); ++l) relabel[perm[l]] = l;

  std::map<Subset, std::size_t> index;
  for (std::size_t e = 0; e < sys.size(); ++e) index[sys.labels[e]] = e;

  TildeQ out{FqmSystem{L, sys.num_lambda, sys.num_cols, w, {}, {}, {}}, {}, perm, T};
  for (std::size_t e = 0; e < sys.size(); ++e) {
    const Subset& J = sys.labels[e];
    const std::uint32_t j = J.front();
    const Subset I(J.begin() + 1, J.end());
    Polynomial acc;
    for (std::uint32_t l = 0; l <= j; ++l) {
      const Elem c = T(j, l);
      if (c) acc.add_scaled(L, sys.eqs[index.at(insert_sorted(I, l))], c);
    }
    Polynomial renamed;
    for (const auto& [mono, c] : acc.terms()) {
      Monomial m{mono.lam, mono.T};
      for (auto& v : m.lam) v = relabel[v];
      std::sort(m.lam.begin(), m.lam.end());
      renamed.add_term(L, m, c);
    }
    auto lead = renamed.leading();
    if (!lead) throw AssumptionError("transformed equation vanished");
    out.leading.push_back(*lead);
    out.system.labels.push_back(J);
    out.system.coords.push_back(0);
    out.system.eqs.push_back(std::move(renamed));
  }
  return out;
}

}  // namespace rslm

#endif  // RSLM_MODELING_ECHELON_HPP_
