#ifndef RSLM_MODELING_POLYNOMIAL_HPP_
#define RSLM_MODELING_POLYNOMIAL_HPP_

#include <map>
#include <optional>
#include <vector>

#include "rslm/algebra/matrix.hpp"
#include "rslm/modeling/monomial.hpp"

namespace rslm {

/// Sparse polynomial in the lambda and r_T variables; zero coefficients are never stored.
class Polynomial {
 public:
  using Terms = std::map<Monomial, Elem, MonomialLess>;

  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  template <FiniteField Field>
  void add_term(const Field& F, const Monomial& mono, Elem c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(mono, c);
    if (!inserted) {
      it->second = F.add(it->second, c);
      if (it->second == 0) terms_.erase(it);
    }
  }

  template <FiniteField Field>
  void add_scaled(const Field& F, const Polynomial& other, Elem c) {
    if (c == 0) return;
    for (const auto& [mono, v] : other.terms_) add_term(F, mono, F.mul(c, v));
  }

  /// Leading term under MonomialLess, if any.
  std::optional<Monomial> leading() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.rbegin()->first;
  }

  Elem coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? 0 : it->second;
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  Terms terms_;
};

/// lam * p, optionally reducing lambda^q -> lambda.
template <FiniteField Field>
Polynomial multiply(const Field& F, const LambdaMonomial& lam, const Polynomial& p, std::uint32_t field_eq_q = 0) {
  Polynomial out;
  for (const auto& [mono, c] : p.terms()) {
    Monomial m{lambda_mul(lam, mono.lam), mono.T};
    if (field_eq_q) reduce_field_equations(m.lam, field_eq_q);
    out.add_term(F, m, c);
  }
  return out;
}

/// Evaluates at lambda values and an r_T lookup.
template <FiniteField Field, class RLookup>
Elem evaluate(const Field& F, const Polynomial& p, const std::vector<Elem>& lambda, RLookup&& r) {
  Elem acc = 0;
  for (const auto& [mono, c] : p.terms()) {
    Elem v = F.mul(c, r(mono.T));
    for (auto i : mono.lam) v = F.mul(v, lambda[i]);
    acc = F.add(acc, v);
  }
  return acc;
}

}  // namespace rslm

#endif  // RSLM_MODELING_POLYNOMIAL_HPP_
