#ifndef RSLM_CORE_STRATEGY_HPP_
#define RSLM_CORE_STRATEGY_HPP_

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>

#include "rslm/core/params.hpp"

namespace rslm {

/// Attack strategy: target weight w = r - delta, a shortened coordinates, N' errors used.
struct StrategyParams {
  std::uint32_t delta = 0;
  std::uint32_t w = 0;
  std::uint32_t a = 0;
  std::uint32_t N_prime = 0;

  friend bool operator==(const StrategyParams&, const StrategyParams&) = default;
};

/// Minimal number of errors for a weight-(r-delta) word to exist, delta(n-r+delta).
inline std::uint64_t delta_floor(const RslParams& p, std::uint32_t delta) {
  return std::uint64_t{delta} * (std::uint64_t{p.n} - p.r + delta);
}

inline StrategyParams strategy_params(const RslParams& p, std::uint32_t delta,
                                      std::optional<std::uint32_t> a_override = std::nullopt) {
  p.validate();
  StrategyParams s;
  s.delta = delta;
  if (delta == 0) {
    s.w = p.r;
    // a r < N <= (a+1) r
    // capped at k: past that there is nothing left to shorten (large-N regime)
    s.a = a_override.value_or(std::min((p.N + p.r - 1) / p.r - 1, p.k));
    if (std::uint64_t{s.a} * p.r + 1 > p.N)
      throw ParameterError("strategy: a*r+1 = " + std::to_string(std::uint64_t{s.a} * p.r + 1) + " exceeds N = " +
                           std::to_string(p.N));
    s.N_prime = s.a * p.r + 1;
  } else {
    if (delta >= p.r) throw ParameterError("strategy: delta must be < r");
    s.w = p.r - delta;
    const std::uint64_t base = delta_floor(p, delta);
    if (p.N < base)
      throw ParameterError("strategy: infeasible delta=" + std::to_string(delta) + ", need N >= delta(n-r+delta) = " +
                           std::to_string(base));
    const std::uint64_t amax = (p.N - base) / s.w;
    if (a_override && *a_override > amax)
      throw ParameterError("strategy: a=" + std::to_string(*a_override) + " exceeds the largest feasible a=" +
                           std::to_string(amax));
    s.a = a_override.value_or(static_cast<std::uint32_t>(std::min<std::uint64_t>(amax, p.k)));
    s.N_prime = static_cast<std::uint32_t>(base + std::uint64_t{s.a} * s.w);
  }
  if (s.a + s.w > p.n) throw ParameterError("strategy: a + w exceeds n");
  return s;
}

}  // namespace rslm

#endif  // RSLM_CORE_STRATEGY_HPP_
