#ifndef RSLM_CORE_INSTANCE_HPP_
#define RSLM_CORE_INSTANCE_HPP_

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rslm/algebra/extension_field.hpp"
#include "rslm/algebra/linalg.hpp"
#include "rslm/algebra/matrix.hpp"
#include "rslm/core/params.hpp"

namespace rslm {

/// Planted secret: the support basis C (m x r, rank r) and the coordinate
/// matrices R_i (r x n) with e_i = beta * C * R_i.
struct SecretWitness {
  FqMatrix C;
  std::vector<FqMatrix> R;

  /// Coordinate matrix C * R_i of error i (m x n over F_q).
  FqMatrix error_coords(std::size_t i) const { return C * R[i]; }
};

/// H in systematic form [A | I_{n-k}], syndromes S (column i is s_i), and
/// preimages y_i = (0_k, s_i) stored as the rows of Y.
///
/// Shortened instances remember which original columns and errors they keep.
struct RslInstance {
  RslParams params;
  ExtensionField field;
  FqmMatrix H;
  FqmMatrix S;
  FqmMatrix Y;
  std::optional<SecretWitness> secret;
  std::vector<std::uint32_t> columns;  // original column index of each column of H
  std::vector<std::uint32_t> errors;   // original index of each syndrome column

  std::uint32_t n() const { return params.n; }
  std::uint32_t k() const { return params.k; }
  std::uint32_t redundancy() const { return params.n - params.k; }
  std::uint32_t num_errors() const { return params.N; }

  /// Column i of S.
  std::vector<Elem> syndrome(std::size_t i) const {
    std::vector<Elem> s(S.rows());
    for (std::size_t j = 0; j < S.rows(); ++j) s[j] = S(j, i);
    return s;
  }
};

class InstanceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline FqmMatrix preimages_from_syndromes(const ExtensionField& L, const FqmMatrix& S, std::uint32_t n,
                                          std::uint32_t k) {
  FqmMatrix Y(L, S.cols(), n);
  for (std::size_t i = 0; i < S.cols(); ++i)
    for (std::size_t j = 0; j < S.rows(); ++j) Y(i, k + j) = S(j, i);
  return Y;
}

inline std::vector<std::uint32_t> iota_u32(std::uint32_t count) {
  std::vector<std::uint32_t> v(count);
  std::iota(v.begin(), v.end(), 0u);
  return v;
}

}  // namespace detail

/// Error vectors e_i = beta * C * R_i as the rows of an N x n matrix over F_{q^m}.
inline FqmMatrix planted_errors(const ExtensionField& L, const SecretWitness& w) {
  const std::size_t N = w.R.size();
  const std::size_t n = N ? w.R[0].cols() : 0;
  FqmMatrix E(L, N, n);
  for (std::size_t i = 0; i < N; ++i) {
    const auto folded = fold_columns(L, w.error_coords(i));
    for (std::size_t j = 0; j < n; ++j) E(i, j) = folded[j];
  }
  return E;
}

/// Syndromes H e_i^T as the columns of an (n-k) x N matrix.
inline FqmMatrix syndromes_of(const FqmMatrix& H, const FqmMatrix& E) { return H * E.transpose(); }

/// Builds an instance from its public part; preimages are (0_k, s_i).
inline RslInstance make_instance(const RslParams& p, const ExtensionField& L, FqmMatrix H, FqmMatrix S,
                                 std::optional<SecretWitness> secret = std::nullopt) {
  p.validate();
  if (H.rows() != p.n - p.k || H.cols() != p.n) throw InstanceError("H must be (n-k) x n");
  if (S.rows() != p.n - p.k || S.cols() != p.N) throw InstanceError("S must be (n-k) x N");
  for (std::uint32_t i = 0; i < p.n - p.k; ++i)
    for (std::uint32_t j = 0; j < p.n - p.k; ++j)
      if (H(i, p.k + j) != (i == j ? 1u : 0u)) throw InstanceError("H is not in systematic form [A | I]");
  FqmMatrix Y = detail::preimages_from_syndromes(L, S, p.n, p.k);
  return RslInstance{p, L, std::move(H), std::move(S), std::move(Y), std::move(secret), detail::iota_u32(p.n),
                     detail::iota_u32(p.N)};
}

/// Random instance with a planted support; deterministic in (params, seed).
inline RslInstance generate_instance(const RslParams& p, std::uint64_t seed,
                                     std::optional<std::vector<Elem>> modulus = std::nullopt) {
  p.validate();
  const PrimeField K(p.q);
  const ExtensionField L = modulus ? ExtensionField(K, *modulus) : ExtensionField(K, p.m);
  if (L.degree() != p.m) throw ParameterError("modulus degree does not match m");
  Rng rng(seed);

  constexpr int kRejectionBudget = 1000;
  FqMatrix C(K, p.m, p.r);
  bool full_rank = false;
  for (int attempt = 0; attempt < kRejectionBudget && !full_rank; ++attempt) {
    for (std::uint32_t i = 0; i < p.m; ++i)
      for (std::uint32_t j = 0; j < p.r; ++j) C(i, j) = rng.below(p.q);
    full_rank = rank(C) == p.r;
  }
  if (!full_rank) throw InstanceError("rejection budget exceeded while sampling a full-rank support basis");

  FqmMatrix H(L, p.n - p.k, p.n);
  for (std::uint32_t i = 0; i < p.n - p.k; ++i) {
    for (std::uint32_t j = 0; j < p.k; ++j) H(i, j) = rng.below(L.order());
    H(i, p.k + i) = 1;
  }

  SecretWitness w{C, {}};
  w.R.reserve(p.N);
  for (std::uint32_t i = 0; i < p.N; ++i) {
    FqMatrix R(K, p.r, p.n);
    for (std::uint32_t a = 0; a < p.r; ++a)
      for (std::uint32_t b = 0; b < p.n; ++b) R(a, b) = rng.below(p.q);
    w.R.push_back(std::move(R));
  }
  FqmMatrix S = syndromes_of(H, planted_errors(L, w));
  return make_instance(p, L, std::move(H), std::move(S), std::move(w));
}

/// Checks H systematic, H y_i^T = s_i^T, and the witness (when present).
inline void validate_instance(const RslInstance& inst) {
  const auto& p = inst.params;
  for (std::uint32_t i = 0; i < p.n - p.k; ++i)
    for (std::uint32_t j = 0; j < p.n - p.k; ++j)
      if (inst.H(i, p.k + j) != (i == j ? 1u : 0u)) throw InstanceError("H is not systematic");
  if (!(syndromes_of(inst.H, inst.Y) == inst.S)) throw InstanceError("preimages do not reproduce the syndromes");
  if (inst.secret) {
    const auto& w = *inst.secret;
    if (w.C.rows() != p.m || w.C.cols() != p.r) throw InstanceError("secret C has wrong shape");
    if (rank(w.C) != p.r) throw InstanceError("secret C is not full rank");
    if (w.R.size() != p.N) throw InstanceError("secret has wrong number of R blocks");
    if (!(syndromes_of(inst.H, planted_errors(inst.field, w)) == inst.S))
      throw InstanceError("secret errors do not match the syndromes");
  }
}

/// rank_{F_q} of the errors, computed on the stacked coordinate matrices.
inline std::size_t error_space_dimension(const RslInstance& inst) {
  if (!inst.secret) throw InstanceError("error_space_dimension needs the secret");
  const auto& w = *inst.secret;
  const auto& p = inst.params;
  FqMatrix stacked(inst.field.base(), p.N, static_cast<std::size_t>(p.m) * p.n);
  for (std::uint32_t i = 0; i < p.N; ++i) {
    const auto E = w.error_coords(i);
    for (std::size_t a = 0; a < E.rows(); ++a)
      for (std::size_t b = 0; b < E.cols(); ++b) stacked(i, a * E.cols() + b) = E(a, b);
  }
  return rank(stacked);
}

/// rank of the first n-k-w rows of S equals n-k-w.
inline bool check_assumption1(const RslInstance& inst, std::uint32_t w) {
  const std::uint32_t nk = inst.redundancy();
  if (w >= nk) throw ParameterError("check_assumption1: need w < n-k");
  const std::uint32_t rows = nk - w;
  if (inst.S.cols() < rows) return false;
  return rank(inst.S.row_range(0, rows)) == rows;
}

/// Removes the given columns (all inside the first k positions) from H and the
/// preimages. The identity block and S are untouched.
inline RslInstance shorten_columns(const RslInstance& inst, std::vector<std::uint32_t> drop) {
  std::sort(drop.begin(), drop.end());
  drop.erase(std::unique(drop.begin(), drop.end()), drop.end());
  const std::uint32_t k = inst.k();
  for (auto c : drop)
    if (c >= k) throw ParameterError("shorten: cannot remove column " + std::to_string(c) + " of the identity block");
  std::vector<std::size_t> keep;
  for (std::uint32_t j = 0; j < inst.n(); ++j)
    if (!std::binary_search(drop.begin(), drop.end(), j)) keep.push_back(j);
  std::vector<std::size_t> all_rows(inst.H.rows());
  std::iota(all_rows.begin(), all_rows.end(), 0);
  std::vector<std::size_t> all_err(inst.Y.rows());
  std::iota(all_err.begin(), all_err.end(), 0);

  RslInstance out = inst;
  out.params.n -= static_cast<std::uint32_t>(drop.size());
  out.params.k -= static_cast<std::uint32_t>(drop.size());
  out.H = inst.H.submatrix(all_rows, keep);
  out.Y = inst.Y.submatrix(all_err, keep);
  out.columns.clear();
  for (auto j : keep) out.columns.push_back(inst.columns[j]);
  out.secret.reset();
  return out;
}

/// Shortening on the first a coordinates.
inline RslInstance shorten(const RslInstance& inst, std::uint32_t a) {
  if (a > inst.k()) throw ParameterError("shorten: a = " + std::to_string(a) + " exceeds k = " + std::to_string(inst.k()));
  return shorten_columns(inst, detail::iota_u32(a));
}

/// Keeps only the listed syndromes (in the given order).
inline RslInstance select_errors(const RslInstance& inst, const std::vector<std::uint32_t>& idx) {
  if (idx.empty()) throw ParameterError("select_errors: empty selection");
  std::vector<std::size_t> cols;
  for (auto i : idx) {
    if (i >= inst.num_errors()) throw ParameterError("select_errors: index out of range");
    cols.push_back(i);
  }
  std::vector<std::size_t> all_rows(inst.S.rows());
  std::iota(all_rows.begin(), all_rows.end(), 0);
  std::vector<std::size_t> all_cols(inst.Y.cols());
  std::iota(all_cols.begin(), all_cols.end(), 0);

  RslInstance out = inst;
  out.params.N = static_cast<std::uint32_t>(idx.size());
  out.S = inst.S.submatrix(all_rows, cols);
  out.Y = inst.Y.submatrix(cols, all_cols);
  out.errors.clear();
  for (auto i : idx) out.errors.push_back(inst.errors[i]);
  if (out.secret) {
    SecretWitness w{inst.secret->C, {}};
    for (auto i : idx) w.R.push_back(inst.secret->R[i]);
    out.secret = std::move(w);
  }
  return out;
}

}  // namespace rslm

#endif  // RSLM_CORE_INSTANCE_HPP_
