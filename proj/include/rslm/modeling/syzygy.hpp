#ifndef RSLM_MODELING_SYZYGY_HPP_
#define RSLM_MODELING_SYZYGY_HPP_

#include <map>
#include <vector>

#include "rslm/modeling/system.hpp"

namespace rslm {

/// Relation between the Q_J: entry at J = K - {k_u} is the linear form
/// (-1)^{w+u} sum_i s_{i,k_u} lambda_i, every other entry is zero.
struct Syzygy {
  Subset K;
  std::map<Subset, std::vector<Elem>> forms;  // J -> coefficients of lambda_1..lambda_N
};

inline std::vector<Syzygy> build_syzygies(const RslInstance& inst, std::uint32_t w) {
  const auto& L = inst.field;
  const std::uint32_t N = inst.num_errors();
  std::vector<Syzygy> out;
  if (w + 2 > inst.redundancy()) return out;
  for_each_subset(inst.redundancy(), w + 2, [&](const Subset& K) {
    Syzygy g{K, {}};
    for (std::size_t u = 0; u < K.size(); ++u) {
      // u is 0-based here, so (-1)^{w+u+1}
      const bool negate = (w + u + 1) % 2 == 1;
      std::vector<Elem> form(N);
      for (std::uint32_t i = 0; i < N; ++i) {
        const Elem s = inst.S(K[u], i);
        form[i] = negate ? L.neg(s) : s;
      }
      g.forms.emplace(erase_value(K, K[u]), std::move(form));
    }
    out.push_back(std::move(g));
  });
  return out;
}

/// sum_J form_J * Q_J, computed without field-equation reduction.
inline Polynomial apply_syzygy(const Syzygy& g, const FqmSystem& sys) {
  const auto& L = sys.field;
  Polynomial acc;
  for (std::size_t e = 0; e < sys.size(); ++e) {
    auto it = g.forms.find(sys.labels[e]);
    if (it == g.forms.end()) continue;
    for (std::uint32_t i = 0; i < it->second.size(); ++i)
      if (it->second[i]) acc.add_scaled(L, multiply(L, LambdaMonomial{i}, sys.eqs[e]), it->second[i]);
  }
  return acc;
}

/// Coefficient stack: one row per syzygy, columns indexed by (J, lambda_i).
inline FqmMatrix syzygy_matrix(const std::vector<Syzygy>& gs, const RslInstance& inst, std::uint32_t w) {
  const std::uint32_t N = inst.num_errors();
  const auto Js = all_subsets(inst.redundancy(), w + 1);
  std::map<Subset, std::size_t> pos;
  for (std::size_t j = 0; j < Js.size(); ++j) pos[Js[j]] = j;
  FqmMatrix M(inst.field, gs.size(), Js.size() * N);
  for (std::size_t r = 0; r < gs.size(); ++r)
    for (const auto& [J, form] : gs[r].forms)
      for (std::uint32_t i = 0; i < N; ++i) M(r, pos.at(J) * N + i) = form[i];
  return M;
}

}  // namespace rslm

#endif  // RSLM_MODELING_SYZYGY_HPP_
