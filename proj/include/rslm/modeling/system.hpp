#ifndef RSLM_MODELING_SYSTEM_HPP_
#define RSLM_MODELING_SYSTEM_HPP_

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <type_traits>
#include <vector>

#include "rslm/algebra/linalg.hpp"
#include "rslm/core/instance.hpp"
#include "rslm/modeling/polynomial.hpp"

namespace rslm {

/// Equations in lambda_1..lambda_{num_lambda} and r_T, T a w-subset of the
/// num_cols columns. Before unfolding there is one equation per J; after
/// unfolding each J carries m equations, one per coordinate.
template <FiniteField Field>
struct System {
  Field field;
  std::uint32_t num_lambda = 0;
  std::uint32_t num_cols = 0;
  std::uint32_t w = 0;
  std::vector<Subset> labels;
  std::vector<unsigned> coords;
  std::vector<Polynomial> eqs;

  std::size_t size() const { return eqs.size(); }
};

using FqmSystem = System<ExtensionField>;
using FqSystem = System<PrimeField>;

/// Bilinear equation for the maximal minor on column set J of the syndrome
/// matrix stacked over R H^T. The instance must be systematic; J is a 0-based
/// (w+1)-subset of {0..n-k-1}.
///
/// coeff(lambda_i r_T) = sum_{t notin T} y_{i,t} (-1)^{1+Pos(t, T+t)} |H|_{J, T+t}
inline Polynomial build_QJ(const RslInstance& inst, const Subset& J, std::uint32_t w) {
  const auto& L = inst.field;
  const std::uint32_t k = inst.k(), nk = inst.redundancy();
  if (J.size() != w + 1) throw std::invalid_argument("build_QJ: J must have w+1 elements");
  for (auto j : J)
    if (j >= nk) throw std::invalid_argument("build_QJ: J outside {0..n-k-1}");

  // columns where H_{J,*} can be nonzero: the A block and the identity columns of J
  std::vector<std::uint32_t> allowed(k);
  std::iota(allowed.begin(), allowed.end(), 0u);
  for (auto j : J) allowed.push_back(k + j);
  const std::vector<std::size_t> rows(J.begin(), J.end());

  Polynomial q;
  const auto N = inst.num_errors();
  for_each_subset(static_cast<std::uint32_t>(allowed.size()), w + 1, [&](const Subset& pick) {
    std::vector<std::size_t> U(pick.size());
    for (std::size_t i = 0; i < pick.size(); ++i) U[i] = allowed[pick[i]];
    const Elem d = submatrix_det(inst.H, rows, U);
    if (d == 0) return;
    for (std::size_t p = 0; p < U.size(); ++p) {
      const std::size_t t = U[p];
      if (t < k) continue;  // preimages vanish on the first k positions
      Subset T;
      T.reserve(w);
      for (std::size_t x = 0; x < U.size(); ++x)
        if (x != p) T.push_back(static_cast<std::uint32_t>(U[x]));
      const Elem signed_d = (p % 2 == 0) ? d : L.neg(d);
      for (std::uint32_t i = 0; i < N; ++i) {
        const Elem y = inst.S(t - k, i);
        if (y) q.add_term(L, Monomial{{i}, T}, L.mul(signed_d, y));
      }
    }
  });
  return q;
}

/// One equation per J in lexicographic order.
inline FqmSystem build_system(const RslInstance& inst, std::uint32_t w) {
  if (w < 1 || w + 1 > inst.redundancy()) throw std::invalid_argument("build_system: need 1 <= w < n-k");
  FqmSystem sys{inst.field, inst.num_errors(), inst.n(), w, {}, {}, {}};
  for_each_subset(inst.redundancy(), w + 1, [&](const Subset& J) {
    sys.labels.push_back(J);
    sys.coords.push_back(0);
    sys.eqs.push_back(build_QJ(inst, J, w));
  });
  return sys;
}

/// Expands every equation into its m coordinate equations over F_q.
inline FqSystem unfold_system(const FqmSystem& sys) {
  const auto& L = sys.field;
  const unsigned m = L.degree();
  FqSystem out{L.base(), sys.num_lambda, sys.num_cols, sys.w, {}, {}, {}};
  for (std::size_t e = 0; e < sys.size(); ++e) {
    std::vector<Polynomial> parts(m);
    for (const auto& [mono, c] : sys.eqs[e].terms())
      for (unsigned j = 0; j < m; ++j) parts[j].add_term(L.base(), mono, L.coord(c, j));
    for (unsigned j = 0; j < m; ++j) {
      out.labels.push_back(sys.labels[e]);
      out.coords.push_back(j);
      out.eqs.push_back(std::move(parts[j]));
    }
  }
  return out;
}

/// Values of the r_T variables as the maximal minors of a w x n matrix.
template <FiniteField Field>
std::map<Subset, Elem> minor_values(const Matrix<Field>& R) {
  std::map<Subset, Elem> out;
  for (auto& [T, v] : maximal_minors(R)) out.emplace(T, v);
  return out;
}

/// Evaluates every equation; returns true iff all vanish. lambda and the
/// r_T values are tokens valid in sys.field.
template <FiniteField Field>
bool vanishes_at(const System<Field>& sys, const std::vector<Elem>& lambda, const std::map<Subset, Elem>& r) {
  auto lookup = [&](const Subset& T) {
    auto it = r.find(T);
    return it == r.end() ? Elem{0} : it->second;
  };
  for (const auto& eq : sys.eqs)
    if (evaluate(sys.field, eq, lambda, lookup) != 0) return false;
  return true;
}

/// One line per equation: J=<1-based indices> : <coeff>*l<i>^<e>*r{T} + ...
template <FiniteField Field>
void dump_system(std::ostream& os, const System<Field>& sys) {
  for (std::size_t e = 0; e < sys.size(); ++e) {
    os << "J=";
    for (std::size_t i = 0; i < sys.labels[e].size(); ++i) os << (i ? "," : "") << sys.labels[e][i] + 1;
    if constexpr (std::is_same_v<Field, PrimeField>) os << " [" << sys.coords[e] << "]";
    os << " :";
    bool first = true;
    for (auto it = sys.eqs[e].terms().rbegin(); it != sys.eqs[e].terms().rend(); ++it) {
      os << (first ? " " : " + ") << it->second << "*" << to_string(it->first);
      first = false;
    }
    if (first) os << " 0";
    os << '\n';
  }
}

}  // namespace rslm

#endif  // RSLM_MODELING_SYSTEM_HPP_
