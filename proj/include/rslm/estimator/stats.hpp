#ifndef RSLM_ESTIMATOR_STATS_HPP_
#define RSLM_ESTIMATOR_STATS_HPP_

#include <boost/multiprecision/cpp_int.hpp>

#include "rslm/algebra/counting.hpp"
#include "rslm/core/params.hpp"
#include "rslm/core/strategy.hpp"

namespace rslm {

using Rational = boost::multiprecision::cpp_rational;

/// Number X of weight-w words in the F_q-linear code spanned by N random
/// errors inside F_q^{r x n}: E[X] = S_{w,r,n} / q^{rn-N} and
/// Var[X] = S_{w,r,n} (q-1) (q^{-(rn-N)} - q^{-2(rn-N)}).
struct CodewordStats {
  std::uint32_t q = 2, r = 0, n = 0, N = 0, w = 0;
  BigInt sphere;
  Rational expectation;
  Rational variance;
  bool delta_feasible = false;  // N >= delta(n-r+delta) for delta = r-w
};

namespace detail {

// q^e for a possibly negative exponent
inline Rational qpow(std::uint32_t q, std::int64_t e) {
  if (e >= 0) return Rational(ipow(q, static_cast<std::uint64_t>(e)));
  return Rational(BigInt(1), ipow(q, static_cast<std::uint64_t>(-e)));
}

}  // namespace detail

inline CodewordStats codeword_stats(std::uint32_t q, std::uint32_t r, std::uint32_t n, std::uint32_t N,
                                    std::uint32_t w) {
  if (w > r) throw std::invalid_argument("codeword_stats: need w <= r");
  CodewordStats s{q, r, n, N, w, sphere_size(w, r, n, q), 0, 0, false};
  const std::int64_t gap = std::int64_t{r} * n - N;
  s.expectation = Rational(s.sphere) * detail::qpow(q, -gap);
  s.variance = Rational(s.sphere) * (q - 1) * (detail::qpow(q, -gap) - detail::qpow(q, -2 * gap));
  const std::uint64_t delta = r - w;
  s.delta_feasible = N >= delta * (std::uint64_t{n} - r + delta);
  return s;
}

inline double to_double(const Rational& x) { return x.convert_to<double>(); }

}  // namespace rslm

#endif  // RSLM_ESTIMATOR_STATS_HPP_
