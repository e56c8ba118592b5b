#ifndef RSLM_ALGEBRA_COUNTING_HPP_
#define RSLM_ALGEBRA_COUNTING_HPP_

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace rslm {

using BigInt = boost::multiprecision::cpp_int;

/// C(n, k) with the convention C(n, k) = 0 for n < 0, k < 0 or k > n.
inline BigInt binom(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r *= (n - k + i);
    r /= i;
  }
  return r;
}

inline BigInt ipow(std::uint64_t base, std::uint64_t e) {
  BigInt r = 1;
  BigInt b = base;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

/// Number of k-dimensional subspaces of F_q^n.
inline BigInt gauss_binom(std::uint64_t n, std::uint64_t k, std::uint64_t q) {
  if (k > n) return 0;
  BigInt num = 1;
  BigInt den = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    num *= ipow(q, n - i) - 1;
    den *= ipow(q, i + 1) - 1;
  }
  return num / den;
}

/// Number of r x n matrices over F_q of rank exactly w.
inline BigInt sphere_size(std::uint64_t w, std::uint64_t r, std::uint64_t n, std::uint64_t q) {
  if (w > r || w > n) throw std::invalid_argument("sphere_size: w exceeds min(r, n)");
  BigInt s = gauss_binom(n, w, q);
  const BigInt qr = ipow(q, r);
  for (std::uint64_t i = 0; i < w; ++i) s *= qr - ipow(q, i);
  return s;
}

/// log2 of a positive big integer; -inf for zero.
inline double log2_big(const BigInt& x) {
  if (x < 0) throw std::domain_error("log2_big: negative argument");
  if (x == 0) return -std::numeric_limits<double>::infinity();
  const std::size_t bits = boost::multiprecision::msb(x) + 1;
  if (bits <= 60) return std::log2(x.convert_to<double>());
  const std::size_t shift = bits - 60;
  const BigInt top = x >> shift;
  return std::log2(top.convert_to<double>()) + static_cast<double>(shift);
}

inline std::string to_string(const BigInt& x) { return x.str(); }

}  // namespace rslm

#endif  // RSLM_ALGEBRA_COUNTING_HPP_
