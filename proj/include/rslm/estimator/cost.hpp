#ifndef RSLM_ESTIMATOR_COST_HPP_
#define RSLM_ESTIMATOR_COST_HPP_

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "rslm/estimator/counts.hpp"

namespace rslm {

enum class Algorithm { strassen, wiedemann };

inline const char* to_string(Algorithm a) { return a == Algorithm::strassen ? "strassen" : "wiedemann"; }

constexpr double kStrassenOmega = 2.807;

struct CostReport {
  StrategyParams strategy;
  std::uint32_t b = 0;
  std::uint32_t alpha_C = 0;
  std::uint32_t alpha_lambda = 0;
  Algorithm algorithm = Algorithm::strassen;
  double log2_cost = 0;
  double log2_strassen = 0;
  double log2_wiedemann = 0;
  double omega = kStrassenOmega;
  bool feasible = false;
  CountSet counts;
};

/// Both linear-algebra costs at bi-degree b. Strassen: M^omega (useful rows
/// capped at the column count). Wiedemann: 3 N' C(k-a+1+w, w) M^2, the row
/// weight times M^2. Without a hybrid guess the delta = 0 strategy is costed
/// with Strassen; otherwise the cheaper of the two is selected.
inline CostReport bit_cost(const RslParams& p, const StrategyParams& s, std::uint32_t b, std::uint32_t alpha_C = 0,
                           std::uint32_t alpha_lambda = 0) {
  CostReport rep;
  rep.strategy = s;
  rep.b = b;
  rep.alpha_C = alpha_C;
  rep.alpha_lambda = alpha_lambda;
  const std::int64_t Np = std::int64_t{s.N_prime} - alpha_lambda;
  const std::int64_t a = std::int64_t{s.a} + alpha_C;  // guessed columns leave the system like shortened ones
  if (Np < 1 || a + s.w > p.n) return rep;
  rep.counts = compute_counts(p.n, p.k, s.w, Np, a, b);
  rep.feasible = linearization_feasible(p.m, rep.counts) && !(p.q > 2 && b >= p.q);
  const double lg_M = log2_big(rep.counts.M_leq_b);
  const double guess = (alpha_lambda + double{s.w} * alpha_C) * std::log2(double(p.q));
  rep.log2_strassen = rep.omega * lg_M + guess;
  const BigInt weight = 3 * BigInt(Np) * binom(std::int64_t{p.k} - a + 1 + s.w, s.w);
  rep.log2_wiedemann = log2_big(weight) + 2 * lg_M + guess;
  if (s.delta == 0 && alpha_C == 0 && alpha_lambda == 0) {
    rep.algorithm = Algorithm::strassen;
  } else {
    rep.algorithm = rep.log2_wiedemann < rep.log2_strassen ? Algorithm::wiedemann : Algorithm::strassen;
  }
  rep.log2_cost = rep.algorithm == Algorithm::strassen ? rep.log2_strassen : rep.log2_wiedemann;
  return rep;
}

/// Largest delta < r with N >= delta(n-r+delta), i.e. E[X] >= 1 roughly.
inline std::uint32_t delta_max(const RslParams& p) {
  std::uint32_t d = 0;
  while (d + 1 < p.r && delta_floor(p, d + 1) <= p.N) ++d;
  return d;
}

struct SearchSpace {
  std::optional<std::uint32_t> delta_max;  // default: from the feasibility bound
  std::uint32_t b_max = 16;
  bool hybrid = false;
  std::uint32_t alpha_max = 4;
};

struct OptimizeResult {
  bool feasible = false;
  CostReport best;
  std::optional<CostReport> best_delta0;
  std::optional<CostReport> best_positive;
  std::vector<CostReport> table;  // one row per (delta, a, alpha) candidate, at its min b
};

namespace detail {

inline std::optional<CostReport> cheapest_b(const RslParams& p, const StrategyParams& s, std::uint32_t b_max,
                                            std::uint32_t alpha_C, std::uint32_t alpha_lambda) {
  for (std::uint32_t b = 1; b <= b_max; ++b) {
    if (p.q > 2 && b >= p.q) break;
    auto rep = bit_cost(p, s, b, alpha_C, alpha_lambda);
    if (rep.feasible) return rep;
  }
  return std::nullopt;
}

}  // namespace detail

/// Exhaustive search over delta, a and (optionally) the hybrid guesses.
inline OptimizeResult optimize(const RslParams& p, const SearchSpace& space = {}) {
  OptimizeResult out;
  const std::uint32_t dmax = std::min(space.delta_max.value_or(delta_max(p)), p.r - 1);
  const std::uint32_t amax_hybrid = space.hybrid ? space.alpha_max : 0;
  auto consider = [&](const CostReport& rep) {
    out.table.push_back(rep);
    auto better = [](const std::optional<CostReport>& cur, const CostReport& c) {
      return !cur || c.log2_cost < cur->log2_cost;
    };
    if (!out.feasible || rep.log2_cost < out.best.log2_cost) out.best = rep;
    out.feasible = true;
    if (rep.strategy.delta == 0) {
      if (better(out.best_delta0, rep)) out.best_delta0 = rep;
    } else if (better(out.best_positive, rep)) {
      out.best_positive = rep;
    }
  };
  for (std::uint32_t delta = 0; delta <= dmax; ++delta) {
    std::vector<StrategyParams> strategies;
    if (delta == 0) {
      try {
        auto s = strategy_params(p, 0);
        if (s.a <= p.k) strategies.push_back(s);
      } catch (const ParameterError&) {
      }
    } else {
      if (delta_floor(p, delta) > p.N) break;
      const std::uint32_t w = p.r - delta;
      const std::uint64_t amax = std::min<std::uint64_t>((p.N - delta_floor(p, delta)) / w, p.k);
      for (std::uint32_t a = 0; a <= amax; ++a) strategies.push_back(strategy_params(p, delta, a));
    }
    for (const auto& s : strategies)
      for (std::uint32_t ac = 0; ac <= amax_hybrid; ++ac)
        for (std::uint32_t al = 0; al <= amax_hybrid; ++al)
          if (auto rep = detail::cheapest_b(p, s, space.b_max, ac, al)) consider(*rep);
  }
  return out;
}

/// Combinatorial attack exponent q^{min(e-, e+)} with K = km + N, in bits.
/// Negative exponents (large N) are clamped to zero.
inline double ghpt_cost(std::int64_t m, std::int64_t n, std::int64_t k, std::int64_t r, std::int64_t N, std::int64_t w,
                        std::uint32_t q = 2) {
  (void)r;
  const std::int64_t K = k * m + N;
  const std::int64_t fN = N / n, fK = K / n;
  const std::int64_t e_minus = (w - fN) * (fK - fN);
  const std::int64_t e_plus = (w - fN - 1) * (fK - fN - 1) + n * (fK - fN - 1);
  const std::int64_t e = std::max<std::int64_t>(0, std::min(e_minus, e_plus));
  return double(e) * std::log2(double(q));
}

inline std::int64_t ghpt_e_minus(std::int64_t m, std::int64_t n, std::int64_t k, std::int64_t N, std::int64_t w) {
  return (w - N / n) * ((k * m + N) / n - N / n);
}

inline std::int64_t ghpt_e_plus(std::int64_t m, std::int64_t n, std::int64_t k, std::int64_t N, std::int64_t w) {
  const std::int64_t fN = N / n, fK = (k * m + N) / n;
  return (w - fN - 1) * (fK - fN - 1) + n * (fK - fN - 1);
}

}  // namespace rslm

#endif  // RSLM_ESTIMATOR_COST_HPP_
