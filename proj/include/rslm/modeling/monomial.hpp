#ifndef RSLM_MODELING_MONOMIAL_HPP_
#define RSLM_MODELING_MONOMIAL_HPP_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "rslm/algebra/subsets.hpp"

namespace rslm {

/// Product of lambda variables as a sorted multiset of 0-based indices.
/// Index 0 is lambda_1, the largest variable.
using LambdaMonomial = std::vector<std::uint32_t>;

/// grevlex on lambda-monomials of any degree: degree first, then the monomial
/// carrying more of the smallest variable is smaller.
inline bool lambda_less(const LambdaMonomial& a, const LambdaMonomial& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  // compare from the largest index down; larger index present means smaller
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] > b[i];
  return false;
}

inline LambdaMonomial lambda_mul(const LambdaMonomial& a, const LambdaMonomial& b) {
  LambdaMonomial out;
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

/// Applies lambda^q = lambda (variables range over F_q).
inline void reduce_field_equations(LambdaMonomial& a, std::uint32_t q) {
  LambdaMonomial out;
  out.reserve(a.size());
  for (std::size_t i = 0; i < a.size();) {
    std::size_t j = i;
    while (j < a.size() && a[j] == a[i]) ++j;
    std::size_t e = j - i;
    while (e >= q) e -= q - 1;
    out.insert(out.end(), e, a[i]);
    i = j;
  }
  a = std::move(out);
}

/// lambda-monomials of degree d in N variables, each exponent at most max_exp,
/// sorted descending.
inline std::vector<LambdaMonomial> lambda_monomials(std::uint32_t N, std::uint32_t d, std::uint32_t max_exp) {
  std::vector<LambdaMonomial> out;
  LambdaMonomial cur;
  std::function<void(std::uint32_t)> rec = [&](std::uint32_t from) {
    if (cur.size() == d) {
      out.push_back(cur);
      return;
    }
    for (std::uint32_t v = from; v < N; ++v) {
      const auto used = static_cast<std::uint32_t>(std::count(cur.begin(), cur.end(), v));
      if (used >= max_exp) continue;
      cur.push_back(v);
      rec(v);
      cur.pop_back();
    }
  };
  rec(0);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return lambda_less(b, a); });
  return out;
}

/// lambda^alpha * r_T; T is a 0-based column subset of size w.
struct Monomial {
  LambdaMonomial lam;
  Subset T;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// grevlex with r_T below every lambda and r_T ordered lexicographically on T.
/// Every monomial has r-degree one, so the total degree is the lambda degree;
/// within a degree the smallest variable (the r_T) decides first.
struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.lam.size() != b.lam.size()) return a.lam.size() < b.lam.size();
    if (a.T != b.T) return a.T < b.T;
    return lambda_less(a.lam, b.lam);
  }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    auto mix = [&](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2); };
    for (auto v : m.lam) mix(v);
    mix(0xffff);
    for (auto v : m.T) mix(v);
    return h;
  }
};

/// 1-based text form, e.g. l1^2*l3*r{2,5}.
inline std::string to_string(const Monomial& m) {
  std::string s;
  for (std::size_t i = 0; i < m.lam.size();) {
    std::size_t j = i;
    while (j < m.lam.size() && m.lam[j] == m.lam[i]) ++j;
    s += "l" + std::to_string(m.lam[i] + 1);
    if (j - i > 1) s += "^" + std::to_string(j - i);
    s += "*";
    i = j;
  }
  s += "r{";
  for (std::size_t i = 0; i < m.T.size(); ++i) s += (i ? "," : "") + std::to_string(m.T[i] + 1);
  return s + "}";
}

}  // namespace rslm

#endif  // RSLM_MODELING_MONOMIAL_HPP_
