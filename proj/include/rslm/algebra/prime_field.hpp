#ifndef RSLM_ALGEBRA_PRIME_FIELD_HPP_
#define RSLM_ALGEBRA_PRIME_FIELD_HPP_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace rslm {

/// Field elements are carried as canonical integer tokens. For F_q this is the
/// residue in [0, q); for F_{q^m} the base-q digits are the coordinates in the
/// polynomial basis, least significant first.
using Elem = std::uint64_t;

class FieldError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

inline bool is_prime(std::uint64_t v) {
  if (v < 2) return false;
  for (std::uint64_t d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

/// F_q for a small prime q.
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t q) : q_(q) {
    if (!is_prime(q)) throw FieldError("PrimeField: modulus " + std::to_string(q) + " is not prime");
  }

  std::uint32_t characteristic() const { return q_; }
  std::uint64_t order() const { return q_; }
  bool contains(Elem a) const { return a < q_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }

  Elem add(Elem a, Elem b) const {
    Elem s = a + b;
    return s >= q_ ? s - q_ : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + q_ - b; }
  Elem neg(Elem a) const { return a == 0 ? 0 : q_ - a; }
  Elem mul(Elem a, Elem b) const { return (a * b) % q_; }

  std::optional<Elem> try_inv(Elem a) const {
    if (a == 0) return std::nullopt;
    // extended Euclid on (a, q)
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = q_, new_r = static_cast<std::int64_t>(a);
    while (new_r != 0) {
      std::int64_t quot = r / new_r;
      std::int64_t tmp = t - quot * new_t;
      t = new_t;
      new_t = tmp;
      tmp = r - quot * new_r;
      r = new_r;
      new_r = tmp;
    }
    if (t < 0) t += q_;
    return static_cast<Elem>(t);
  }

  Elem inv(Elem a) const {
    auto r = try_inv(a);
    if (!r) throw FieldError("inverse of zero in F_" + std::to_string(q_));
    return *r;
  }

  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  /// Reduces an arbitrary signed integer into the field.
  Elem from_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(q_);
    if (r < 0) r += q_;
    return static_cast<Elem>(r);
  }

  Elem pow(Elem a, std::uint64_t e) const {
    Elem result = 1;
    while (e) {
      if (e & 1) result = mul(result, a);
      a = mul(a, a);
      e >>= 1;
    }
    return result;
  }

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.q_ == b.q_; }

 private:
  std::uint64_t q_;
};

}  // namespace rslm

#endif  // RSLM_ALGEBRA_PRIME_FIELD_HPP_
