#ifndef RSLM_VERIFY_SUITES_HPP_
#define RSLM_VERIFY_SUITES_HPP_

#include <chrono>
#include <cmath>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "rslm/algebra/bitmatrix.hpp"
#include "rslm/estimator/counts.hpp"
#include "rslm/estimator/stats.hpp"
#include "rslm/modeling/echelon.hpp"
#include "rslm/modeling/macaulay.hpp"
#include "rslm/modeling/syzygy.hpp"
#include "rslm/verify/family.hpp"

namespace rslm {

enum class Suite { assumption1, thm1, thm2, lemma3, assumption2, prop1 };

inline const std::vector<std::pair<std::string, Suite>>& suite_names() {
  static const std::vector<std::pair<std::string, Suite>> names{
      {"assumption1", Suite::assumption1}, {"thm1", Suite::thm1},   {"thm2", Suite::thm2},
      {"lemma3", Suite::lemma3},           {"assumption2", Suite::assumption2}, {"prop1", Suite::prop1}};
  return names;
}

struct SuiteConfig {
  std::uint32_t trials = 20;
  std::uint64_t seed = 1;
  std::vector<std::uint32_t> qs{2, 3};  // thm1, thm2, lemma3, assumption1
  std::vector<std::uint32_t> bs;        // thm2 default {2,3}; assumption2 default {1,2}
};

/// One line per check. Hard suites pass iff every check passes; the two
/// statistical suites compare a rate or a mean against a threshold.
struct SuiteReport {
  std::string suite;
  std::size_t checks = 0;
  std::size_t passed = 0;
  bool ok = false;
  std::vector<std::string> lines;
  std::optional<RslInstance> offending;  // first failing instance, for quarantine
  std::string summary;
  double seconds = 0;
};

namespace detail {

inline std::string params_tag(const RslInstance& inst, std::uint32_t w) {
  return inst.params.summary() + " w=" + std::to_string(w);
}

inline void record(SuiteReport& rep, bool ok, const std::string& line, const RslInstance* inst = nullptr) {
  ++rep.checks;
  if (ok) ++rep.passed;
  rep.lines.push_back(std::string(ok ? "ok   " : "FAIL ") + line);
  if (!ok && inst && !rep.offending) rep.offending = *inst;
}

}  // namespace detail

/// Fresh instances with N >= n-k-w have S_top of full rank; threshold 99%.
inline SuiteReport verify_assumption1(const SuiteConfig& cfg) {
  SuiteReport rep{"assumption1"};
  Rng pick(cfg.seed);
  for (auto q : cfg.qs)
    for (std::uint32_t t = 0; t < cfg.trials; ++t) {
      const std::uint32_t w = 1 + t % 3;
      auto fam = theorem_instance(q, w, pick, cfg.seed * 1000 + t);
      auto p = fam.inst.params;
      auto inst = generate_instance(p, pick.next());
      const bool ok = check_assumption1(inst, w);
      detail::record(rep, ok, detail::params_tag(inst, w));
    }
  rep.ok = rep.checks > 0 && rep.passed * 100 >= rep.checks * 99;
  rep.summary = std::to_string(rep.passed) + "/" + std::to_string(rep.checks) + " full rank (threshold 99%)";
  return rep;
}

/// rank Macaulay(1,1) over F_{q^m} = C(n-k, w+1); tilde-Q leading monomials distinct and as predicted.
inline SuiteReport verify_thm1(const SuiteConfig& cfg) {
  SuiteReport rep{"thm1"};
  Rng pick(cfg.seed);
  for (auto q : cfg.qs)
    for (std::uint32_t t = 0; t < cfg.trials; ++t) {
      const std::uint32_t w = 1 + t % 3;
      auto fam = theorem_instance(q, w, pick, cfg.seed * 1000 + t);
      const auto& inst = fam.inst;
      auto sys = build_system(inst, w);
      const std::size_t rk = build_macaulay(sys, 1, MacaulayMode::exact).rank();
      const std::uint64_t want = binom_u64(inst.redundancy(), w + 1);
      bool distinct = true;
      try {
        auto tq = echelonize_tildeQ(sys, inst, w);
        std::set<std::string> seen;
        for (std::size_t e = 0; e < tq.leading.size(); ++e) {
          distinct &= tq.leading[e] == expected_leading(tq.system.labels[e], inst.k());
          distinct &= seen.insert(to_string(tq.leading[e])).second;
        }
      } catch (const AssumptionError&) {
        distinct = false;
      }
      std::ostringstream line;
      line << detail::params_tag(inst, w) << " seed=" << fam.seed << " rank=" << rk << " expected=" << want
           << " leading=" << (distinct ? "distinct" : "clash");
      detail::record(rep, rk == want && distinct, line.str(), &inst);
    }
  rep.ok = rep.checks > 0 && rep.passed == rep.checks;
  rep.summary = std::to_string(rep.passed) + "/" + std::to_string(rep.checks) + " exact rank matches";
  return rep;
}

/// rank Macaulay(b,1) over F_{q^m} = N_b, plus the b = 2 identity.
inline SuiteReport verify_thm2(const SuiteConfig& cfg) {
  SuiteReport rep{"thm2"};
  const std::vector<std::uint32_t> bs = cfg.bs.empty() ? std::vector<std::uint32_t>{2, 3} : cfg.bs;
  Rng pick(cfg.seed);
  for (auto b : bs)
    for (auto q : cfg.qs)
      for (std::uint32_t t = 0; t < cfg.trials; ++t) {
        const std::uint32_t w = 1 + t % 3;
        auto fam = theorem_instance(q, w, pick, cfg.seed * 1000 + b * 100 + t);
        const auto& inst = fam.inst;
        const std::int64_t n = inst.n(), k = inst.k(), N = inst.num_errors(), nk = n - k;
        const BigInt want = count_Nb(n, k, w, N, b);
        const std::size_t rk = build_macaulay(build_system(inst, w), b, MacaulayMode::exact).rank();
        bool ok = BigInt(rk) == want;
        if (b == 2) ok &= count_Nb(n, k, w, N, 2) == N * binom(nk, w + 1) - binom(nk, w + 2);
        std::ostringstream line;
        line << detail::params_tag(inst, w) << " b=" << b << " seed=" << fam.seed << " rank=" << rk
             << " N_b=" << want;
        detail::record(rep, ok, line.str(), &inst);
      }
  rep.ok = rep.checks > 0 && rep.passed == rep.checks;
  rep.summary = std::to_string(rep.passed) + "/" + std::to_string(rep.checks) + " ranks equal N_b";
  return rep;
}

/// All C(n-k, w+2) syzygies vanish on the system and their stack has full rank.
inline SuiteReport verify_lemma3(const SuiteConfig& cfg) {
  SuiteReport rep{"lemma3"};
  Rng pick(cfg.seed);
  for (auto q : cfg.qs)
    for (std::uint32_t t = 0; t < cfg.trials; ++t) {
      const std::uint32_t w = 1 + t % 3;
      auto fam = theorem_instance(q, w, pick, cfg.seed * 1000 + t);
      const auto& inst = fam.inst;
      auto sys = build_system(inst, w);
      auto gs = build_syzygies(inst, w);
      std::size_t vanish = 0;
      for (const auto& g : gs) vanish += apply_syzygy(g, sys).is_zero();
      const std::size_t rk = gs.empty() ? 0 : rank(syzygy_matrix(gs, inst, w));
      const std::uint64_t want = binom_u64(inst.redundancy(), w + 2);
      std::ostringstream line;
      line << detail::params_tag(inst, w) << " syzygies=" << gs.size() << " vanishing=" << vanish << " rank=" << rk
           << " expected=" << want;
      detail::record(rep, gs.size() == want && vanish == gs.size() && rk == want, line.str(), &inst);
    }
  rep.ok = rep.checks > 0 && rep.passed == rep.checks;
  rep.summary = std::to_string(rep.passed) + "/" + std::to_string(rep.checks) + " syzygy sets complete";
  return rep;
}

/// Random q = 2 instance shortened for delta = 0, drawn so that the planted
/// solution is the only one (the premise of the rank statement) and the row
/// and column counts are not within a few units of each other at b = 1, 2.
struct Assumption2Instance {
  RslInstance sub;  // shortened, N' errors
  std::uint32_t w = 0;
  std::uint32_t redraws = 0;
};

inline Assumption2Instance assumption2_instance(Rng& pick, std::uint32_t margin = 8) {
  for (std::uint32_t redraw = 0;; ++redraw) {
    RslParams p;
    p.q = 2;
    p.r = 2 + static_cast<std::uint32_t>(pick.below(2));
    p.m = 6 + static_cast<std::uint32_t>(pick.below(11));
    p.k = 2 + static_cast<std::uint32_t>(pick.below(3));
    p.n = p.k + p.r + 2 + static_cast<std::uint32_t>(pick.below(3));
    const std::uint32_t a = 1 + static_cast<std::uint32_t>(pick.below(p.k - 1));
    p.N = a * p.r + 1;
    const std::int64_t np = p.N;
    bool near = false;
    for (std::int64_t b = 1; b <= 2; ++b) {
      const auto c = compute_counts(p.n, p.k, p.r, np, a, b);
      const BigInt rows = BigInt(p.m) * c.N_leq_b, cols = c.M_leq_b - 1;
      const BigInt gap = rows > cols ? BigInt(rows - cols) : BigInt(cols - rows);
      near |= gap < margin;
    }
    if (near) continue;
    auto inst = generate_instance(p, pick.next());
    // planted lambda: left kernel of the R_i restricted to the dropped columns
    const auto& K = inst.field.base();
    FqMatrix A(K, p.N, std::size_t{p.r} * a);
    for (std::uint32_t i = 0; i < p.N; ++i)
      for (std::uint32_t x = 0; x < p.r; ++x)
        for (std::uint32_t c = 0; c < a; ++c) A(i, x * a + c) = inst.secret->R[i](x, c);
    if (rank(A) != std::size_t{p.r} * a) continue;
    // and the combined error keeps full rank r on the kept columns
    const auto ker = kernel(A.transpose());
    FqMatrix R(K, p.r, p.n - a);
    for (std::uint32_t i = 0; i < p.N; ++i)
      if (ker(0, i))
        for (std::uint32_t x = 0; x < p.r; ++x)
          for (std::uint32_t c = a; c < p.n; ++c) R(x, c - a) = K.add(R(x, c - a), inst.secret->R[i](x, c));
    if (rank(R) != p.r) continue;
    return Assumption2Instance{shorten(inst, a), p.r, redraw};
  }
}

/// Unfolded cumulative Macaulay rank = min(m N_{<=b}, M_{<=b} - 1); threshold 95% per b.
inline SuiteReport verify_assumption2(const SuiteConfig& cfg) {
  SuiteReport rep{"assumption2"};
  const std::vector<std::uint32_t> bs = cfg.bs.empty() ? std::vector<std::uint32_t>{1, 2} : cfg.bs;
  Rng pick(cfg.seed);
  std::vector<std::size_t> hits(bs.size(), 0);
  for (std::uint32_t t = 0; t < cfg.trials; ++t) {
    auto a2 = assumption2_instance(pick);
    const auto& sub = a2.sub;
    auto unf = unfold_system(build_system(sub, a2.w));
    for (std::size_t bi = 0; bi < bs.size(); ++bi) {
      const std::uint32_t b = bs[bi];
      const std::size_t rk = build_macaulay(unf, b, MacaulayMode::cumulative).rank();
      const auto c = compute_counts(sub.n(), sub.k(), a2.w, sub.num_errors(), 0, b);
      const BigInt mN = BigInt(sub.params.m) * c.N_leq_b;
      const BigInt want = mN < c.M_leq_b - 1 ? mN : BigInt(c.M_leq_b - 1);
      const bool ok = BigInt(rk) == want;
      hits[bi] += ok;
      std::ostringstream line;
      line << detail::params_tag(sub, a2.w) << " b=" << b << " rank=" << rk << " mN=" << mN
           << " M-1=" << (c.M_leq_b - 1) << " redraws=" << a2.redraws;
      detail::record(rep, ok, line.str(), &sub);
    }
  }
  rep.ok = cfg.trials > 0;
  std::ostringstream s;
  for (std::size_t bi = 0; bi < bs.size(); ++bi) {
    rep.ok &= hits[bi] * 100 >= std::size_t{cfg.trials} * 95;
    s << (bi ? ", " : "") << "b=" << bs[bi] << ": " << hits[bi] << "/" << cfg.trials;
  }
  rep.summary = s.str() + " (threshold 95%)";
  return rep;
}

/// Monte Carlo for the number of rank-w words in a random code of dimension N
/// inside F_2^{r x n}, drawn as the kernel of a random (rn-N) x rn parity-check
/// matrix. Passes iff the sample mean is within 3 standard errors of E[X].
struct Prop1Case {
  std::uint32_t r = 2, n = 4, N = 3, w = 2;
  double expectation = 0, mean = 0, std_error = 0, z = 0;
  bool ok = false;
};

inline Prop1Case prop1_case(std::uint32_t r, std::uint32_t n, std::uint32_t N, std::uint32_t w, std::uint32_t samples,
                            Rng& rng) {
  Prop1Case c{r, n, N, w};
  c.expectation = to_double(codeword_stats(2, r, n, N, w).expectation);
  const std::uint32_t len = r * n, checks = len - N;
  const PrimeField F2(2);
  double sum = 0, sum2 = 0;
  for (std::uint32_t s = 0; s < samples; ++s) {
    BitMatrix Hc(checks, len);
    for (std::uint32_t i = 0; i < checks; ++i)
      for (std::uint32_t j = 0; j < len; ++j)
        if (rng.below(2)) Hc.set(i, j);
    const auto basis = Hc.kernel();
    std::uint64_t count = 0;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << basis.size()); ++mask) {
      FqMatrix X(F2, r, n);
      for (std::size_t b = 0; b < basis.size(); ++b)
        if ((mask >> b) & 1u)
          for (std::uint32_t e = 0; e < len; ++e) X(e / n, e % n) ^= basis[b][e];
      count += rank(X) == w;
    }
    sum += static_cast<double>(count);
    sum2 += static_cast<double>(count) * static_cast<double>(count);
  }
  c.mean = sum / samples;
  const double var = samples > 1 ? (sum2 - samples * c.mean * c.mean) / (samples - 1) : 0;
  c.std_error = std::sqrt(var / samples);
  c.z = c.std_error > 0 ? (c.mean - c.expectation) / c.std_error : (c.mean == c.expectation ? 0 : INFINITY);
  c.ok = std::abs(c.mean - c.expectation) <= 3 * c.std_error + 1e-12;
  return c;
}

inline SuiteReport verify_prop1(const SuiteConfig& cfg) {
  SuiteReport rep{"prop1"};
  Rng rng(cfg.seed);
  for (std::uint32_t N : {2u, 3u})
    for (std::uint32_t w : {1u, 2u}) {
      auto c = prop1_case(2, 4, N, w, cfg.trials, rng);
      std::ostringstream line;
      line << "q=2 r=2 n=4 N=" << N << " w=" << w << " E=" << c.expectation << " mean=" << c.mean
           << " se=" << c.std_error << " z=" << c.z;
      detail::record(rep, c.ok, line.str());
    }
  rep.ok = rep.checks > 0 && rep.passed == rep.checks;
  rep.summary = std::to_string(rep.passed) + "/" + std::to_string(rep.checks) + " means within 3 standard errors";
  return rep;
}

inline SuiteReport run_suite(Suite s, const SuiteConfig& cfg) {
  const auto t0 = std::chrono::steady_clock::now();
  SuiteReport rep;
  switch (s) {
    case Suite::assumption1: rep = verify_assumption1(cfg); break;
    case Suite::thm1: rep = verify_thm1(cfg); break;
    case Suite::thm2: rep = verify_thm2(cfg); break;
    case Suite::lemma3: rep = verify_lemma3(cfg); break;
    case Suite::assumption2: rep = verify_assumption2(cfg); break;
    case Suite::prop1: rep = verify_prop1(cfg); break;
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace rslm

#endif  // RSLM_VERIFY_SUITES_HPP_
