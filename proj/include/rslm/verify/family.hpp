#ifndef RSLM_VERIFY_FAMILY_HPP_
#define RSLM_VERIFY_FAMILY_HPP_

#include <cstdint>

#include "rslm/core/instance.hpp"

namespace rslm {

struct FamilyInstance {
  RslInstance inst;
  std::uint32_t w = 0;
  std::uint64_t seed = 0;          // seed that produced inst
  std::uint32_t regenerations = 0;  // seeds skipped because rank(S_top) was short
};

/// Generates with seed, seed+1, ... until the first n-k-w syndrome rows are independent.
inline FamilyInstance generate_with_assumption1(const RslParams& p, std::uint32_t w, std::uint64_t seed,
                                                std::uint32_t max_tries = 1000) {
  for (std::uint32_t t = 0; t < max_tries; ++t) {
    auto inst = generate_instance(p, seed + t);
    if (check_assumption1(inst, w)) return FamilyInstance{std::move(inst), w, seed + t, t};
  }
  throw InstanceError("no instance satisfying the syndrome rank condition within " + std::to_string(max_tries) +
                      " seeds");
}

/// Random member of the family used for the rank-law checks: 6 <= m <= 12,
/// 8 <= n <= 14, w in {1,2,3}, n-k in w+2..w+4 and N a little above n-k-w.
/// Larger w gets smaller n and n-k so dense elimination stays cheap.
inline FamilyInstance theorem_instance(std::uint32_t q, std::uint32_t w, Rng& pick, std::uint64_t seed) {
  static constexpr std::uint32_t kMaxN[] = {0, 14, 12, 10};
  static constexpr std::uint32_t kExtraRedundancy[] = {0, 2, 2, 1};
  RslParams p;
  p.q = q;
  p.m = 6 + static_cast<std::uint32_t>(pick.below(7));
  p.n = 8 + static_cast<std::uint32_t>(pick.below(kMaxN[w] - 7));
  const std::uint32_t nk = w + 2 + static_cast<std::uint32_t>(pick.below(kExtraRedundancy[w] + 1));
  p.k = p.n - nk;
  p.r = w;
  p.N = nk - w + static_cast<std::uint32_t>(pick.below(w == 3 ? 2 : 3));
  return generate_with_assumption1(p, w, seed);
}

}  // namespace rslm

#endif  // RSLM_VERIFY_FAMILY_HPP_
