#ifndef RSLM_ALGEBRA_EXTENSION_FIELD_HPP_
#define RSLM_ALGEBRA_EXTENSION_FIELD_HPP_

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rslm/algebra/prime_field.hpp"

namespace rslm {

/// Dense univariate polynomials over F_q, coefficients in ascending degree.
/// Only what the irreducibility sieve needs.
namespace fq_poly {

using Poly = std::vector<Elem>;

inline void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline Poly mod(Poly a, const Poly& f, const PrimeField& F) {
  trim(a);
  const std::size_t df = f.size() - 1;
  const Elem lead_inv = F.inv(f.back());
  while (a.size() >= f.size()) {
    const Elem c = F.mul(a.back(), lead_inv);
    const std::size_t shift = a.size() - f.size();
    for (std::size_t i = 0; i <= df; ++i) a[shift + i] = F.sub(a[shift + i], F.mul(c, f[i]));
    trim(a);
  }
  return a;
}

inline Poly mulmod(const Poly& a, const Poly& b, const Poly& f, const PrimeField& F) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  }
  return mod(std::move(r), f, F);
}

inline Poly powmod(Poly base, std::uint64_t e, const Poly& f, const PrimeField& F) {
  Poly result{1};
  base = mod(std::move(base), f, F);
  while (e) {
    if (e & 1) result = mulmod(result, base, f, F);
    base = mulmod(base, base, f, F);
    e >>= 1;
  }
  return result;
}

inline Poly sub(Poly a, const Poly& b, const PrimeField& F) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = F.sub(a[i], b[i]);
  trim(a);
  return a;
}

inline Poly gcd(Poly a, Poly b, const PrimeField& F) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = mod(a, b, F);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

inline std::vector<std::uint64_t> prime_factors(std::uint64_t v) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= v; ++d) {
    if (v % d == 0) {
      out.push_back(d);
      while (v % d == 0) v /= d;
    }
  }
  if (v > 1) out.push_back(v);
  return out;
}

/// Rabin's test for a monic polynomial f of degree m >= 1.
inline bool is_irreducible(const Poly& f, const PrimeField& F) {
  const std::size_t m = f.size() - 1;
  if (m == 0) return false;
  if (m == 1) return true;
  const std::uint64_t q = F.order();
  // x^{q^j} mod f for j = 0..m
  std::vector<Poly> frob(m + 1);
  frob[0] = mod(Poly{0, 1}, f, F);
  for (std::size_t j = 1; j <= m; ++j) frob[j] = powmod(frob[j - 1], q, f, F);
  const Poly x = mod(Poly{0, 1}, f, F);
  if (!sub(frob[m], x, F).empty()) return false;
  for (std::uint64_t p : prime_factors(m)) {
    Poly g = gcd(f, sub(frob[m / p], x, F), F);
    if (g.size() != 1) return false;
  }
  return true;
}

}  // namespace fq_poly

/// F_{q^m} = F_q[z]/(f) with the polynomial basis beta_j = z^(j-1).
///
/// Elements are integer tokens in [0, q^m) whose base-q digits are the basis
/// coordinates. Multiplication goes through log/antilog tables when the field
/// has at most 2^22 elements, otherwise through schoolbook reduction.
class ExtensionField {
 public:
  static constexpr std::uint64_t kTableLimit = std::uint64_t{1} << 22;

  /// Uses the smallest irreducible monic modulus (by integer encoding of the
  /// lower coefficients).
  ExtensionField(PrimeField base, unsigned m) : ExtensionField(base, smallest_irreducible(base, m)) {}

  ExtensionField(PrimeField base, std::vector<Elem> modulus) : base_(base) {
    if (modulus.size() < 2) throw FieldError("ExtensionField: modulus must have degree >= 1");
    for (Elem c : modulus)
      if (!base.contains(c)) throw FieldError("ExtensionField: modulus coefficient out of range");
    if (modulus.back() != 1) throw FieldError("ExtensionField: modulus must be monic");
    if (!fq_poly::is_irreducible(modulus, base)) throw FieldError("ExtensionField: modulus is reducible");
    m_ = static_cast<unsigned>(modulus.size() - 1);
    const std::uint64_t q = base.order();
    std::uint64_t order = 1;
    for (unsigned i = 0; i < m_; ++i) {
      if (order > (std::uint64_t{1} << 62) / q) throw FieldError("ExtensionField: q^m exceeds token range");
      order *= q;
    }
    auto impl = std::make_shared<Impl>();
    impl->modulus = std::move(modulus);
    impl->order = order;
    impl->pow_q.resize(m_ + 1);
    impl->pow_q[0] = 1;
    for (unsigned i = 1; i <= m_; ++i) impl->pow_q[i] = impl->pow_q[i - 1] * q;
    if (q == 2) {
      for (unsigned i = 0; i < m_; ++i)
        if (impl->modulus[i]) impl->mod_bits |= Elem{1} << i;
    }
    impl_ = impl;
    if (order <= kTableLimit) build_tables(*impl);
  }

  const PrimeField& base() const { return base_; }
  unsigned degree() const { return m_; }
  std::uint64_t order() const { return impl_->order; }
  const std::vector<Elem>& modulus() const { return impl_->modulus; }
  bool contains(Elem a) const { return a < impl_->order; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }

  Elem add(Elem a, Elem b) const {
    if (base_.order() == 2) return a ^ b;
    if (a == 0) return b;
    if (b == 0) return a;
    if (!impl_->zech.empty()) {
      // a + b = a * (1 + b/a) with 1 + g^d = g^zech[d]
      const auto& t = *impl_;
      const std::uint64_t n = t.order - 1;
      const std::uint32_t la = t.log[a];
      const std::uint32_t lb = t.log[b];
      const std::uint32_t d = lb >= la ? lb - la : static_cast<std::uint32_t>(lb + n - la);
      const std::uint32_t z = t.zech[d];
      if (z == kNoLog) return 0;
      return t.exp[la + z];
    }
    return add_digits(a, b);
  }

  Elem neg(Elem a) const {
    if (base_.order() == 2 || a == 0) return a;
    if (!impl_->zech.empty()) {
      const auto& t = *impl_;
      return t.exp[t.log[a] + (t.order - 1) / 2];
    }
    const std::uint64_t q = base_.order();
    Elem r = 0;
    for (unsigned j = 0; j < m_ && a; ++j) {
      r += base_.neg(a % q) * impl_->pow_q[j];
      a /= q;
    }
    return r;
  }

  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    if (!impl_->log.empty()) {
      const auto& t = *impl_;
      return t.exp[t.log[a] + t.log[b]];
    }
    return mul_slow(a, b);
  }

  std::optional<Elem> try_inv(Elem a) const {
    if (a == 0) return std::nullopt;
    if (!impl_->log.empty()) {
      const auto& t = *impl_;
      const std::uint64_t n = t.order - 1;
      return t.exp[(n - t.log[a]) % n];
    }
    // a^(q^m - 2)
    return pow(a, impl_->order - 2);
  }

  Elem inv(Elem a) const {
    auto r = try_inv(a);
    if (!r) throw FieldError("inverse of zero in F_{q^m}");
    return *r;
  }

  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  Elem pow(Elem a, std::uint64_t e) const {
    Elem result = 1;
    while (e) {
      if (e & 1) result = mul(result, a);
      a = mul(a, a);
      e >>= 1;
    }
    return result;
  }

  /// Multiplies by an element of the base field.
  Elem scale(Elem c, Elem x) const {
    if (c == 0 || x == 0) return 0;
    if (c == 1) return x;
    const std::uint64_t q = base_.order();
    Elem r = 0;
    for (unsigned j = 0; j < m_ && x; ++j) {
      r += base_.mul(c, x % q) * impl_->pow_q[j];
      x /= q;
    }
    return r;
  }

  /// Base-field element viewed in the extension (beta_1 = 1).
  Elem embed(Elem c) const { return c; }

  Elem coord(Elem x, unsigned j) const { return (x / impl_->pow_q[j]) % base_.order(); }

  std::vector<Elem> unfold(Elem x) const {
    std::vector<Elem> out(m_);
    const std::uint64_t q = base_.order();
    for (unsigned j = 0; j < m_; ++j) {
      out[j] = x % q;
      x /= q;
    }
    return out;
  }

  Elem fold(std::span<const Elem> coords) const {
    if (coords.size() != m_) throw FieldError("fold: expected " + std::to_string(m_) + " coordinates");
    Elem r = 0;
    for (unsigned j = 0; j < m_; ++j) {
      if (!base_.contains(coords[j])) throw FieldError("fold: coordinate out of range");
      r += coords[j] * impl_->pow_q[j];
    }
    return r;
  }

  /// The basis element beta_j (0-based j).
  Elem basis(unsigned j) const { return impl_->pow_q[j]; }

  friend bool operator==(const ExtensionField& a, const ExtensionField& b) {
    return a.base_ == b.base_ && a.impl_->modulus == b.impl_->modulus;
  }

  static std::vector<Elem> smallest_irreducible(const PrimeField& base, unsigned m) {
    if (m == 0) throw FieldError("ExtensionField: degree must be >= 1");
    const std::uint64_t q = base.order();
    std::uint64_t limit = 1;
    for (unsigned i = 0; i < m; ++i) limit *= q;
    for (std::uint64_t code = 0; code < limit; ++code) {
      std::vector<Elem> f(m + 1);
      std::uint64_t c = code;
      for (unsigned i = 0; i < m; ++i) {
        f[i] = c % q;
        c /= q;
      }
      f[m] = 1;
      if (m > 1 && f[0] == 0) continue;
      if (fq_poly::is_irreducible(f, base)) return f;
    }
    throw FieldError("no irreducible polynomial found");  // unreachable
  }

 private:
  struct Impl {
    std::vector<Elem> modulus;
    std::uint64_t order = 0;
    std::vector<std::uint64_t> pow_q;
    Elem mod_bits = 0;  // q = 2: low m coefficients as a bit mask
    std::vector<std::uint32_t> log;
    std::vector<Elem> exp;  // doubled length, no reduction needed after log addition
    std::vector<std::uint32_t> zech;  // odd q only
  };

  static constexpr std::uint32_t kNoLog = 0xffffffffu;

  Elem add_digits(Elem a, Elem b) const {
    const std::uint64_t q = base_.order();
    Elem r = 0;
    for (unsigned j = 0; j < m_ && (a | b); ++j) {
      r += base_.add(a % q, b % q) * impl_->pow_q[j];
      a /= q;
      b /= q;
    }
    return r;
  }

  Elem mul_slow(Elem a, Elem b) const {
    const auto& t = *impl_;
    if (base_.order() == 2) {
      const Elem top = Elem{1} << m_;
      Elem r = 0;
      for (int i = static_cast<int>(m_) - 1; i >= 0; --i) {
        r <<= 1;
        if (r & top) r = (r ^ top) ^ t.mod_bits;
        if ((b >> i) & 1) r ^= a;
      }
      return r;
    }
    const auto da = unfold(a);
    const auto db = unfold(b);
    std::vector<Elem> prod(2 * m_ - 1, 0);
    for (unsigned i = 0; i < m_; ++i) {
      if (da[i] == 0) continue;
      for (unsigned j = 0; j < m_; ++j) prod[i + j] = base_.add(prod[i + j], base_.mul(da[i], db[j]));
    }
    for (std::size_t d = prod.size() - 1; d >= m_; --d) {
      const Elem c = prod[d];
      if (c == 0) continue;
      prod[d] = 0;
      for (unsigned i = 0; i < m_; ++i) prod[d - m_ + i] = base_.sub(prod[d - m_ + i], base_.mul(c, t.modulus[i]));
    }
    prod.resize(m_);
    return fold(prod);
  }

  void build_tables(Impl& t) {
    const std::uint64_t n = t.order - 1;
    if (n == 0) return;
    const auto factors = fq_poly::prime_factors(n);
    Elem g = 0;
    for (Elem cand = 1; cand < t.order; ++cand) {
      bool primitive = true;
      for (auto p : factors) {
        if (pow_slow(cand, n / p) == 1) {
          primitive = false;
          break;
        }
      }
      if (primitive) {
        g = cand;
        break;
      }
    }
    std::vector<std::uint32_t> log(t.order, 0);
    std::vector<Elem> exp(2 * n + 1);
    Elem x = 1;
    for (std::uint64_t i = 0; i < n; ++i) {
      exp[i] = x;
      log[x] = static_cast<std::uint32_t>(i);
      x = mul_slow(x, g);
    }
    for (std::uint64_t i = n; i < exp.size(); ++i) exp[i] = exp[i - n];
    if (base_.order() != 2) {
      std::vector<std::uint32_t> zech(n);
      for (std::uint64_t d = 0; d < n; ++d) {
        const Elem s = add_digits(1, exp[d]);
        zech[d] = s == 0 ? kNoLog : log[s];
      }
      t.zech = std::move(zech);
    }
    t.exp = std::move(exp);
    t.log = std::move(log);
  }

  Elem pow_slow(Elem a, std::uint64_t e) const {
    Elem result = 1;
    while (e) {
      if (e & 1) result = mul_slow(result, a);
      a = mul_slow(a, a);
      e >>= 1;
    }
    return result;
  }

  PrimeField base_;
  unsigned m_ = 0;
  std::shared_ptr<const Impl> impl_;
};

}  // namespace rslm

#endif  // RSLM_ALGEBRA_EXTENSION_FIELD_HPP_
