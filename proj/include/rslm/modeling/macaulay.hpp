#ifndef RSLM_MODELING_MACAULAY_HPP_
#define RSLM_MODELING_MACAULAY_HPP_

#include <cstdint>
#include <map>
#include <type_traits>
#include <unordered_map>
#include <vector>

#include "rslm/algebra/bitmatrix.hpp"
#include "rslm/algebra/linalg.hpp"
#include "rslm/modeling/system.hpp"

namespace rslm {

/// exact: multipliers of degree b-1 only. cumulative: all degrees 0..b-1.
enum class MacaulayMode { exact, cumulative };

using SparseRow = std::vector<std::pair<std::uint32_t, Elem>>;

template <FiniteField Field>
struct MacaulayMatrix {
  Field field;
  std::uint32_t b = 1;
  MacaulayMode mode = MacaulayMode::exact;
  std::vector<Monomial> columns;  // descending
  std::vector<std::pair<LambdaMonomial, std::size_t>> row_labels;  // (multiplier, equation index)
  std::vector<SparseRow> rows;

  std::size_t num_rows() const { return rows.size(); }
  std::size_t num_cols() const { return columns.size(); }
  std::size_t nnz() const {
    std::size_t s = 0;
    for (const auto& r : rows) s += r.size();
    return s;
  }

  /// Dense copy; with compact=true, columns never touched by a row are dropped.
  Matrix<Field> dense(bool compact = false) const {
    std::vector<std::uint32_t> remap(columns.size(), 0);
    std::size_t width = columns.size();
    if (compact) {
      std::vector<bool> used(columns.size(), false);
      for (const auto& r : rows)
        for (const auto& e : r) used[e.first] = true;
      width = 0;
      for (std::size_t c = 0; c < used.size(); ++c)
        if (used[c]) remap[c] = static_cast<std::uint32_t>(width++);
    } else {
      for (std::size_t c = 0; c < remap.size(); ++c) remap[c] = static_cast<std::uint32_t>(c);
    }
    Matrix<Field> out(field, rows.size(), width);
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (const auto& [c, v] : rows[i]) out(i, remap[c]) = v;
    return out;
  }

  std::size_t rank() const {
    if constexpr (std::is_same_v<Field, PrimeField>) {
      if (field.order() == 2) {
        std::vector<bool> used(columns.size(), false);
        for (const auto& r : rows)
          for (const auto& e : r) used[e.first] = true;
        std::vector<std::uint32_t> remap(columns.size());
        std::size_t width = 0;
        for (std::size_t c = 0; c < used.size(); ++c)
          if (used[c]) remap[c] = static_cast<std::uint32_t>(width++);
        BitMatrix B(rows.size(), width);
        for (std::size_t i = 0; i < rows.size(); ++i)
          for (const auto& e : rows[i]) B.set(i, remap[e.first]);
        return B.rank();
      }
    }
    return rslm::rank(dense(true));
  }

  /// Value of every column monomial at a point.
  std::vector<Elem> evaluate_columns(const std::vector<Elem>& lambda, const std::map<Subset, Elem>& r) const {
    std::vector<Elem> v(columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
      auto it = r.find(columns[c].T);
      Elem x = it == r.end() ? 0 : it->second;
      for (auto i : columns[c].lam) x = field.mul(x, lambda[i]);
      v[c] = x;
    }
    return v;
  }

  /// True iff every row annihilates the column vector x.
  bool annihilates(const std::vector<Elem>& x) const {
    for (const auto& r : rows) {
      Elem acc = 0;
      for (const auto& [c, v] : r) acc = field.add(acc, field.mul(v, x[c]));
      if (acc != 0) return false;
    }
    return true;
  }
};

namespace detail {

template <FiniteField Field>
constexpr bool over_base_field() {
  return std::is_same_v<Field, PrimeField>;
}

}  // namespace detail

class DegreeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Column count: all lambda-monomials of the relevant degrees times all r_T.
/// For a system over F_q the field equations lambda^q = lambda are applied;
/// over F_2 products can drop in degree, so exact mode then keeps the
/// columns of every degree 1..b.
template <FiniteField Field>
MacaulayMatrix<Field> build_macaulay(const System<Field>& sys, std::uint32_t b, MacaulayMode mode) {
  if (b < 1) throw DegreeError("build_macaulay: b must be >= 1");
  std::uint32_t max_exp = b;
  std::uint32_t field_q = 0;
  if constexpr (detail::over_base_field<Field>()) {
    field_q = static_cast<std::uint32_t>(sys.field.order());
    if (field_q > 2 && b >= field_q)
      throw DegreeError("build_macaulay: b = " + std::to_string(b) + " must be < q = " + std::to_string(field_q));
    max_exp = std::min(b, field_q - 1);
  }

  MacaulayMatrix<Field> M{sys.field, b, mode, {}, {}, {}};
  const auto Ts = all_subsets(sys.num_cols, sys.w);
  const std::uint32_t lowest = (mode == MacaulayMode::exact && field_q != 2) ? b : 1;
  for (std::uint32_t d = b; d >= lowest; --d) {
    const auto lams = lambda_monomials(sys.num_lambda, d, max_exp);
    for (auto t = Ts.rbegin(); t != Ts.rend(); ++t)
      for (const auto& lam : lams) M.columns.push_back(Monomial{lam, *t});
  }
  std::unordered_map<Monomial, std::uint32_t, MonomialHash> col_of;
  col_of.reserve(M.columns.size() * 2);
  for (std::uint32_t c = 0; c < M.columns.size(); ++c) col_of.emplace(M.columns[c], c);

  std::vector<LambdaMonomial> multipliers;
  for (std::uint32_t d = b - 1;; --d) {
    auto lams = lambda_monomials(sys.num_lambda, d, max_exp);
    multipliers.insert(multipliers.end(), lams.begin(), lams.end());
    if (mode == MacaulayMode::exact || d == 0) break;
  }

  for (std::size_t e = 0; e < sys.size(); ++e) {
    for (const auto& mult : multipliers) {
      const Polynomial p = multiply(sys.field, mult, sys.eqs[e], field_q);
      SparseRow row;
      row.reserve(p.size());
      for (const auto& [mono, c] : p.terms()) {
        auto it = col_of.find(mono);
        if (it == col_of.end()) throw std::logic_error("build_macaulay: product monomial outside the column set");
        row.emplace_back(it->second, c);
      }
      std::sort(row.begin(), row.end());
      M.row_labels.emplace_back(mult, e);
      M.rows.push_back(std::move(row));
    }
  }
  return M;
}

}  // namespace rslm

#endif  // RSLM_MODELING_MACAULAY_HPP_
