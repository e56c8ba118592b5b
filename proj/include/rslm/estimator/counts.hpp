#ifndef RSLM_ESTIMATOR_COUNTS_HPP_
#define RSLM_ESTIMATOR_COUNTS_HPP_

#include <cstdint>
#include <optional>
#include <string>

#include "rslm/algebra/counting.hpp"
#include "rslm/core/params.hpp"
#include "rslm/core/strategy.hpp"

namespace rslm {

/// general: polynomial ring without field equations. f2: lambda^2 = lambda.
enum class CountVariant { general, f2 };

/// Number of independent equations at bi-degree (b,1):
/// sum_{d=2}^{n-k-w+1} C(n-k-d, w-1) sum_{j=1}^{d-1} C(N-j+b-1, b-1)
/// with C(N-j+1, b-1) as the inner term for f2. The inner sums are
/// collapsed with the hockey-stick identity.
inline BigInt count_Nb(std::int64_t n, std::int64_t k, std::int64_t w, std::int64_t N, std::int64_t b,
                       CountVariant v = CountVariant::general) {
  if (b < 1 || w < 1 || n - k <= w) throw std::invalid_argument("count_Nb: need b >= 1, w >= 1, n-k > w");
  const std::int64_t nk = n - k;
  BigInt s = 0;
  for (std::int64_t d = 2; d <= nk - w + 1; ++d) {
    const BigInt outer = binom(nk - d, w - 1);
    if (outer == 0) continue;
    // sum_{x = lo}^{hi} C(x, b-1) = C(hi+1, b) - C(lo, b)
    const std::int64_t hi = v == CountVariant::general ? N + b - 2 : N;
    const std::int64_t lo = hi - (d - 2);
    const BigInt inner = hi < 0 ? BigInt(0) : binom(hi + 1, b) - (lo < 0 ? BigInt(0) : binom(lo, b));
    s += outer * inner;
  }
  return s;
}

enum class MbVariant { general, f2, cumulative_f2 };

/// Column counts C(n,w) C(N+b-1,b), C(n,w) C(N,b), or the f2 count summed over 1..b.
inline BigInt count_Mb(std::int64_t n_eff, std::int64_t w, std::int64_t N_eff, std::int64_t b, MbVariant v) {
  switch (v) {
    case MbVariant::general:
      return binom(n_eff, w) * binom(N_eff + b - 1, b);
    case MbVariant::f2:
      return binom(n_eff, w) * binom(N_eff, b);
    case MbVariant::cumulative_f2: {
      BigInt s = 0;
      for (std::int64_t j = 1; j <= b; ++j) s += binom(N_eff, j);
      return binom(n_eff, w) * s;
    }
  }
  return 0;
}

/// Cumulative F_2 count of independent equations, sum_{j=1}^{b} N_j^{f2}.
inline BigInt count_Nleq_f2(std::int64_t n, std::int64_t k, std::int64_t w, std::int64_t N, std::int64_t b) {
  BigInt s = 0;
  for (std::int64_t j = 1; j <= b; ++j) s += count_Nb(n, k, w, N, j, CountVariant::f2);
  return s;
}

struct CountSet {
  std::int64_t n = 0, k = 0, w = 0, N_prime = 0, a = 0, b = 0;
  BigInt N_b, M_b, N_b_f2, M_b_f2, N_leq_b, M_leq_b;
};

/// Counts for a strategy; M uses the shortened length n-a, N uses n-k and N'.
inline CountSet compute_counts(std::int64_t n, std::int64_t k, std::int64_t w, std::int64_t N_prime, std::int64_t a,
                               std::int64_t b) {
  CountSet c{n, k, w, N_prime, a, b, 0, 0, 0, 0, 0, 0};
  c.N_b = count_Nb(n, k, w, N_prime, b, CountVariant::general);
  c.M_b = count_Mb(n - a, w, N_prime, b, MbVariant::general);
  c.N_b_f2 = count_Nb(n, k, w, N_prime, b, CountVariant::f2);
  c.M_b_f2 = count_Mb(n - a, w, N_prime, b, MbVariant::f2);
  c.N_leq_b = count_Nleq_f2(n, k, w, N_prime, b);
  c.M_leq_b = count_Mb(n - a, w, N_prime, b, MbVariant::cumulative_f2);
  return c;
}

/// m N_{<=b} >= M_{<=b} - 1
inline bool linearization_feasible(std::uint64_t m, const CountSet& c) {
  return BigInt(m) * c.N_leq_b >= c.M_leq_b - 1;
}

struct MinB {
  bool feasible = false;
  std::uint32_t b = 0;
  CountSet counts;  // at b, or at the last b tried when infeasible
};

/// Smallest b <= b_max with m N_{<=b} >= M_{<=b} - 1; for q > 2 also b < q.
inline MinB min_b(const RslParams& p, const StrategyParams& s, std::uint32_t b_max = 16) {
  MinB out;
  if (s.w + 1 > p.n - p.k) return out;
  for (std::uint32_t b = 1; b <= b_max; ++b) {
    if (p.q > 2 && b >= p.q) break;
    out.counts = compute_counts(p.n, p.k, s.w, s.N_prime, s.a, b);
    out.b = b;
    if (linearization_feasible(p.m, out.counts)) {
      out.feasible = true;
      return out;
    }
  }
  return out;
}

}  // namespace rslm

#endif  // RSLM_ESTIMATOR_COUNTS_HPP_
