#ifndef RSLM_CORE_PARAMS_HPP_
#define RSLM_CORE_PARAMS_HPP_

#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>

#include "rslm/algebra/prime_field.hpp"

namespace rslm {

class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// RSL instance parameters (q, m, n, k, r, N).
struct RslParams {
  std::uint32_t q = 2;
  std::uint32_t m = 1;
  std::uint32_t n = 2;
  std::uint32_t k = 1;
  std::uint32_t r = 1;
  std::uint32_t N = 1;

  void validate() const {
    if (!is_prime(q)) throw ParameterError("q must be prime");
    if (m < 1 || n < 2 || r < 1 || N < 1) throw ParameterError("m, r, N must be >= 1 and n >= 2");
    if (k < 1 || k >= n) throw ParameterError("need 1 <= k < n");
    if (r > m || r > n) throw ParameterError("need r <= min(m, n)");
  }

  /// N >= kr: the large-N regime where RSL is known to be easy.
  bool easy_regime() const { return std::uint64_t{N} >= std::uint64_t{k} * r; }

  std::string summary() const {
    return "q=" + std::to_string(q) + " m=" + std::to_string(m) + " n=" + std::to_string(n) +
           " k=" + std::to_string(k) + " r=" + std::to_string(r) + " N=" + std::to_string(N);
  }

  friend bool operator==(const RslParams&, const RslParams&) = default;
};

/// Seeded generator; mt19937_64 output is fully specified by the standard, and
/// bounded draws use rejection so streams are identical across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t below(std::uint64_t bound) {
    if (bound <= 1) return 0;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t v;
    do {
      v = engine_();
    } while (v >= limit);
    return v % bound;
  }

  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace rslm

#endif  // RSLM_CORE_PARAMS_HPP_
