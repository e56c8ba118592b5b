#ifndef RSLM_SOLVER_ATTACK_HPP_
#define RSLM_SOLVER_ATTACK_HPP_

#include <algorithm>
#include <chrono>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "rslm/core/strategy.hpp"
#include "rslm/core/support.hpp"
#include "rslm/estimator/counts.hpp"
#include "rslm/modeling/macaulay.hpp"
#include "rslm/solver/linearize.hpp"

namespace rslm {

struct RecoveredSupport {
  FqMatrix C;  // m x d, reduced basis as columns
  std::size_t d = 0;
  StrategyParams strategy;
  std::uint32_t b = 0;
};

/// Solves sum lambda_i s_i = c R~ H~^T for c in F_{q^m}^w and unfolds c.
/// Same solution set as the m*w unknowns of C over F_q, since the system is
/// F_{q^m}-linear in c.
inline FqMatrix recover_support(const RslInstance& inst, const std::vector<Elem>& lambda, const FqMatrix& Rt) {
  const auto& L = inst.field;
  if (lambda.size() != inst.num_errors()) throw std::invalid_argument("recover_support: lambda length mismatch");
  bool nonzero = false;
  for (Elem v : lambda) nonzero |= v != 0;
  if (!nonzero) throw ExtractionError("recover_support: lambda is zero");
  const std::uint32_t nk = inst.redundancy();
  std::vector<Elem> x(nk, 0);
  for (std::uint32_t i = 0; i < lambda.size(); ++i)
    if (lambda[i])
      for (std::uint32_t j = 0; j < nk; ++j) x[j] = L.add(x[j], L.scale(lambda[i], inst.S(j, i)));
  const FqmMatrix G = embed(L, Rt) * inst.H.transpose();  // w x (n-k)
  auto c = solve(G.transpose(), x);
  if (!c) throw ExtractionError("recover_support: inconsistent system, extraction was spurious");
  return reduced_span(unfold_vector(L, *c)).transpose();
}

struct AttackStep {
  std::uint32_t b = 0;
  std::size_t rows = 0, cols = 0, rank = 0, kernel_dim = 0;
  KernelStatus status = KernelStatus::none;
  std::optional<bool> planted_in_kernel;
  std::string N_leq_b, M_leq_b;
  std::uint64_t enumerated = 0;  // kernel combinations walked before success (0: unique kernel)
  double seconds_build = 0, seconds_solve = 0;
};

struct AttackAttempt {
  std::vector<std::uint32_t> dropped_columns;  // original indices shortened away
  std::vector<std::uint32_t> errors;           // original error indices used
  std::vector<AttackStep> steps;
  std::optional<FqMatrix> found;               // recovered basis for this attempt
  std::string failure;
};

struct AttackReport {
  RslParams params;
  StrategyParams strategy;
  std::uint32_t b_max = 0;
  bool success = false;       // verify_support passed on the original instance
  bool infeasible = false;    // b_max exhausted (or zero) without a unique kernel
  std::optional<RecoveredSupport> support;
  std::optional<bool> matches_planted;  // equal span (delta = 0) or containment (delta > 0)
  std::vector<AttackAttempt> attempts;
  double seconds_total = 0;
  std::string message;
};

struct AttackOptions {
  std::uint32_t max_attempts = 8;  // shortening sets tried when delta > 0
  bool check_planted = true;       // kernel membership of the planted point (delta = 0, secret known)
  std::uint32_t max_enumerated_kernel = 12;  // F_2 only
};

namespace detail {

inline double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

/// For delta = 0: lambda in the left kernel of the dropped-column blocks of the
/// R_i, and R = sum lambda_i R_i on the kept columns.
inline std::optional<std::pair<std::vector<Elem>, FqMatrix>> planted_point(const RslInstance& inst,
                                                                           const std::vector<std::uint32_t>& errors,
                                                                           const std::vector<std::uint32_t>& dropped) {
  if (!inst.secret) return std::nullopt;
  const auto& K = inst.field.base();
  const auto& W = *inst.secret;
  const std::uint32_t r = inst.params.r;
  const std::size_t Np = errors.size();
  FqMatrix A(K, Np, std::size_t{r} * dropped.size());
  for (std::size_t i = 0; i < Np; ++i)
    for (std::uint32_t a = 0; a < r; ++a)
      for (std::size_t c = 0; c < dropped.size(); ++c) A(i, a * dropped.size() + c) = W.R[errors[i]](a, dropped[c]);
  const auto ker = kernel(A.transpose());
  if (ker.rows() == 0) return std::nullopt;
  std::vector<Elem> lambda(ker.row(0).begin(), ker.row(0).end());
  std::vector<std::size_t> kept;
  for (std::uint32_t j = 0; j < inst.n(); ++j)
    if (std::find(dropped.begin(), dropped.end(), j) == dropped.end()) kept.push_back(j);
  FqMatrix R(K, r, kept.size());
  for (std::size_t i = 0; i < Np; ++i)
    if (lambda[i])
      for (std::uint32_t a = 0; a < r; ++a)
        for (std::size_t c = 0; c < kept.size(); ++c)
          R(a, c) = K.add(R(a, c), K.mul(lambda[i], W.R[errors[i]](a, kept[c])));
  return std::make_pair(lambda, R);
}

// Shortening set for attempt t: a cyclic block of the first k columns starting at t.
inline std::vector<std::uint32_t> rotated_columns(std::uint32_t k, std::uint32_t a, std::uint32_t t) {
  std::vector<std::uint32_t> cols;
  for (std::uint32_t j = 0; j < a; ++j) cols.push_back((t + j) % k);
  std::sort(cols.begin(), cols.end());
  return cols;
}

}  // namespace detail

/// Kernel vector -> (lambda, r) -> R~ -> basis of the support.
inline FqMatrix extract_support(const RslInstance& sub, const MacaulayMatrix<PrimeField>& M, const FqSystem& sys,
                                std::uint32_t w, const std::vector<Elem>& values) {
  const auto& K = sub.field.base();
  auto pt = rank1_extract(K, M.columns, values, sys.num_lambda);
  auto Rt = plucker_reconstruct(K, pt.r, w, sys.num_cols);
  return recover_support(sub, pt.lambda, Rt);
}

/// One shortening set: build, iterate b, solve, extract, recover.
inline AttackAttempt attack_once(const RslInstance& inst, const StrategyParams& s, std::uint32_t b_max,
                                 const std::vector<std::uint32_t>& dropped, const std::vector<std::uint32_t>& errors,
                                 const AttackOptions& opt) {
  using clock = std::chrono::steady_clock;
  AttackAttempt at{dropped, errors, {}, std::nullopt, {}};
  const auto sub = shorten_columns(select_errors(inst, errors), dropped);
  const auto sys = unfold_system(build_system(sub, s.w));
  std::optional<std::pair<std::vector<Elem>, FqMatrix>> planted;
  if (opt.check_planted && s.delta == 0) planted = detail::planted_point(inst, errors, dropped);

  for (std::uint32_t b = 1; b <= b_max; ++b) {
    if (inst.params.q > 2 && b >= inst.params.q) {
      at.failure = "b must stay below q";
      break;
    }
    AttackStep step;
    step.b = b;
    auto t0 = clock::now();
    const auto M = build_macaulay(sys, b, MacaulayMode::cumulative);
    step.seconds_build = detail::seconds_since(t0);
    step.rows = M.num_rows();
    step.cols = M.num_cols();
    const auto counts = compute_counts(inst.n(), inst.k(), s.w, s.N_prime, static_cast<std::int64_t>(dropped.size()), b);
    step.N_leq_b = to_string(counts.N_leq_b);
    step.M_leq_b = to_string(counts.M_leq_b);
    if (planted) step.planted_in_kernel = M.annihilates(M.evaluate_columns(planted->first, minor_values(planted->second)));
    t0 = clock::now();
    const auto sol = solve_linearized(M);
    step.seconds_solve = detail::seconds_since(t0);
    step.rank = sol.rank;
    step.kernel_dim = sol.kernel_dim;
    step.status = sol.status;
    at.steps.push_back(step);
    if (sol.status == KernelStatus::unique) {
      try {
        at.found = extract_support(sub, M, sys, s.w, sol.values);
      } catch (const ExtractionError& e) {
        at.failure = e.what();
      }
      return at;
    }
    // Over F_2 a short kernel is cheap to walk: extra planted-like solutions
    // or a rank defect at the threshold leave the true point among 2^dim - 1 vectors.
    if (sol.status == KernelStatus::underdetermined && inst.params.q == 2 &&
        sol.kernel_dim <= opt.max_enumerated_kernel) {
      for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << sol.kernel_dim); ++mask) {
        std::vector<Elem> v(M.num_cols(), 0);
        for (std::size_t j = 0; j < sol.kernel_dim; ++j)
          if ((mask >> j) & 1u)
            for (std::size_t c = 0; c < v.size(); ++c) v[c] ^= sol.basis[j][c];
        try {
          auto C = extract_support(sub, M, sys, s.w, v);
          // the shortened syndromes are only explained in combination, so a
          // full-weight candidate is checked against the original instance
          if (s.delta > 0) {
            // every low-weight word in the kernel adds to the subspace
            at.found = at.found ? span_sum(*at.found, C) : C;
            at.steps.back().enumerated = mask;
          } else if (verify_support(inst, C)) {
            at.found = std::move(C);
            at.steps.back().enumerated = mask;
            return at;
          }
        } catch (const ExtractionError&) {
        }
      }
      if (at.found) return at;
    }
  }
  if (at.failure.empty()) at.failure = at.steps.empty() ? "b_max = 0" : to_string(at.steps.back().status);
  return at;
}

/// End-to-end attack. Attempt t shortens on a cyclic block of a columns and
/// uses a cyclic window of N' errors, both starting at t. delta = 0 stops at the
/// first recovered support; delta > 0 sums the weight-w subspaces until they
/// reach dimension r or attempts run out.
inline AttackReport attack(const RslInstance& inst, const StrategyParams& s, std::uint32_t b_max,
                           const AttackOptions& opt = {}) {
  const auto t0 = std::chrono::steady_clock::now();
  AttackReport rep;
  rep.params = inst.params;
  rep.strategy = s;
  rep.b_max = b_max;
  if (s.N_prime > inst.num_errors() || s.a > inst.k() || s.w + 1 > inst.redundancy())
    throw ParameterError("attack: strategy does not fit the instance");

  std::optional<FqMatrix> acc;
  std::uint32_t best_b = 0;
  const std::uint32_t attempts = b_max == 0 ? 1 : std::max<std::uint32_t>(1, opt.max_attempts);
  for (std::uint32_t t = 0; t < attempts; ++t) {
    const auto dropped = detail::rotated_columns(inst.k(), s.a, t);
    std::vector<std::uint32_t> errors(s.N_prime);
    for (std::uint32_t i = 0; i < s.N_prime; ++i) errors[i] = (t + i) % inst.num_errors();
    auto at = attack_once(inst, s, b_max, dropped, errors, opt);
    if (at.found) {
      best_b = std::max(best_b, at.steps.back().b);
      acc = acc ? span_sum(*acc, *at.found) : reduced_span(*at.found).transpose();
    }
    rep.attempts.push_back(std::move(at));
    if (acc && acc->cols() >= inst.params.r) break;
  }

  if (!acc) {
    rep.infeasible = true;
    rep.message = rep.attempts.empty() ? "no attempt" : rep.attempts.back().failure;
  } else {
    rep.support = RecoveredSupport{*acc, acc->cols(), s, best_b};
    if (acc->cols() < inst.params.r) {
      // a proper subspace cannot explain the syndromes; report it as partial
      rep.message = "recovered a " + std::to_string(acc->cols()) + "-dimensional subspace";
    } else {
      rep.success = verify_support(inst, *acc);
      rep.message = rep.success ? "support recovered and verified" : "recovered basis failed verification";
    }
    if (inst.secret) {
      rep.matches_planted = acc->cols() == inst.params.r ? same_span(*acc, inst.secret->C)
                                                         : span_contains(inst.secret->C, *acc);
    }
  }
  rep.seconds_total = detail::seconds_since(t0);
  return rep;
}

}  // namespace rslm

#endif  // RSLM_SOLVER_ATTACK_HPP_
