// rslm: generate RSL instances, attack them, estimate costs, check the rank laws.
//
// exit codes: 0 ok, 1 verification failed, 2 infeasible, 64 usage

#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "rslm/cli/expr.hpp"
#include "rslm/cli/report.hpp"
#include "rslm/core/io.hpp"
#include "rslm/estimator/table2.hpp"
#include "rslm/modeling/system.hpp"

using namespace rslm;

namespace {

constexpr int kOk = 0, kFail = 1, kInfeasible = 2, kUsage = 64;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParamFlags {
  std::uint32_t q = 2, m = 0, n = 0, k = 0, r = 0;
  std::string N;

  void add(CLI::App* app) {
    app->add_option("--q", q, "base field size (prime)")->capture_default_str();
    app->add_option("--m", m, "extension degree");
    app->add_option("--n", n, "code length");
    app->add_option("--k", k, "code dimension");
    app->add_option("--r", r, "error weight");
    app->add_option("--N", N, "number of errors; may use k, r, + - * and parentheses");
  }

  bool given() const { return m || n || k || r || !N.empty(); }

  RslParams get() const {
    if (!m || !n || !k || !r || N.empty()) throw UsageError("need all of --m --n --k --r --N");
    std::int64_t v;
    try {
      v = NExpr::eval(N, k, r);
    } catch (const ExprError& e) {
      throw UsageError(e.what());
    }
    if (v < 1 || v > (std::int64_t{1} << 31)) throw UsageError("N evaluates to " + std::to_string(v));
    RslParams p{q, m, n, k, r, static_cast<std::uint32_t>(v)};
    try {
      p.validate();
    } catch (const ParameterError& e) {
      throw UsageError(e.what());
    }
    return p;
  }
};

struct Common {
  std::string format = "text";
  std::string output;
  int verbose = 0;

  void add(CLI::App* app, bool with_output = true) {
    app->add_option("--format", format, "report format")->check(CLI::IsMember({"text", "json"}));
    if (with_output) app->add_option("-o,--output", output, "write the report here instead of stdout");
    app->add_flag("-v,--verbose", verbose, "more detail");
  }
  bool json() const { return format == "json"; }
};

void emit(const Common& c, const std::string& text) {
  if (c.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.output);
  if (!f) throw std::runtime_error("cannot write " + c.output);
  f << text;
}

void warn_regime(const RslParams& p) {
  if (p.easy_regime())
    std::cerr << "warning: easy regime, N = " << p.N << " >= k r = " << std::uint64_t{p.k} * p.r
              << " (RSL is easy here)\n";
}

json config_json(const std::string& sub, const json& extra) {
  json c{{"tool", kToolVersion}, {"subcommand", sub}};
  for (auto it = extra.begin(); it != extra.end(); ++it) c[it.key()] = it.value();
  return c;
}

std::string fmt_bits(double x) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(1) << x;
  return s.str();
}

// ---- gen

struct GenCmd {
  ParamFlags pf;
  std::uint64_t seed = 1;
  std::string out;
  bool public_only = false;

  void add(CLI::App* app) {
    pf.add(app);
    app->add_option("--seed", seed, "PRNG seed")->capture_default_str();
    app->add_option("-o,--output", out, "instance file")->required();
    app->add_flag("--public-only", public_only, "omit the SECRET block");
  }

  int run() {
    const auto p = pf.get();
    const auto inst = generate_instance(p, seed);
    save_instance(out, inst, !public_only);
    std::cout << p.summary() << " seed=" << seed << " -> " << out << (public_only ? " (public only)" : "") << "\n";
    warn_regime(p);
    return kOk;
  }
};

// ---- inspect

struct InspectCmd {
  std::string in;
  std::optional<std::uint32_t> dump_w;
  Common common;

  void add(CLI::App* app) {
    app->add_option("-i,--instance", in, "instance file")->required()->check(CLI::ExistingFile);
    app->add_option("--dump-system", dump_w, "print the minors system at this weight");
    common.add(app);
  }

  int run() {
    const auto inst = load_instance(in);
    const auto& p = inst.params;
    const std::size_t dim = error_space_dimension(inst);
    const bool a1 = p.r < inst.redundancy() && check_assumption1(inst, p.r);
    std::ostringstream os;
    if (common.json()) {
      json j{{"config", config_json("inspect", {{"instance", in}})},
             {"params", params_json(p)},
             {"modulus", inst.field.modulus()},
             {"has_secret", inst.secret.has_value()},
             {"easy_regime", p.easy_regime()},
             {"syndrome_rank", rank(inst.S)},
             {"assumption1_at_r", a1}};
      if (inst.secret) j["error_space_dimension"] = dim;
      os << j.dump(2) << "\n";
    } else {
      os << p.summary() << "\n";
      os << "modulus coefficients:";
      for (auto c : inst.field.modulus()) os << " " << c;
      os << "\nsecret: " << (inst.secret ? "present" : "absent") << "\n";
      os << "rank of S over F_q^m: " << rank(inst.S) << "\n";
      os << "first n-k-r syndrome rows full rank: " << (a1 ? "yes" : "no") << "\n";
      if (inst.secret) os << "span of the errors over F_q: dimension " << dim << "\n";
    }
    if (dump_w) dump_system(os, build_system(inst, *dump_w));
    emit(common, os.str());
    warn_regime(p);
    return kOk;
  }
};

// ---- attack

struct AttackCmd {
  std::string in;
  ParamFlags pf;
  std::uint64_t seed = 1;
  std::optional<std::uint32_t> delta, a;
  std::uint32_t b_max = 3;
  std::uint32_t attempts = 8;
  Common common;

  void add(CLI::App* app) {
    app->add_option("-i,--instance", in, "instance file")->check(CLI::ExistingFile);
    pf.add(app);
    app->add_option("--seed", seed, "seed when generating from flags")->capture_default_str();
    app->add_option("--delta", delta, "weight reduction; default: cheapest by the estimator");
    app->add_option("--a", a, "shortened coordinates; default from N");
    app->add_option("--b-max", b_max, "largest linearization degree")->capture_default_str();
    app->add_option("--attempts", attempts, "shortening/error sets to try")->capture_default_str();
    common.add(app);
  }

  StrategyParams pick(const RslParams& p) const {
    if (delta) return strategy_params(p, *delta, a);
    // cheapest feasible strategy within b_max; delta = 0 if nothing fits
    SearchSpace sp;
    sp.b_max = std::max<std::uint32_t>(b_max, 1);
    const auto res = optimize(p, sp);
    if (res.feasible) return strategy_params(p, res.best.strategy.delta, a ? a : std::optional(res.best.strategy.a));
    return strategy_params(p, 0, a);
  }

  int run() {
    if (in.empty() == !pf.given()) throw UsageError("attack needs exactly one of --instance or the parameter flags");
    const auto inst = in.empty() ? generate_instance(pf.get(), seed) : load_instance(in);
    warn_regime(inst.params);
    StrategyParams s;
    try {
      s = pick(inst.params);
    } catch (const ParameterError& e) {
      throw UsageError(e.what());
    }
    AttackOptions opt;
    opt.max_attempts = attempts;
    const auto rep = attack(inst, s, b_max, opt);
    std::ostringstream os;
    if (common.json()) {
      json cfg{{"instance", in.empty() ? json(nullptr) : json(in)}, {"seed", seed}, {"b_max", b_max},
               {"attempts", attempts}};
      json j{{"config", config_json("attack", cfg)}};
      const json body = attack_json(rep, inst.field);
      for (auto& [key, v] : body.items()) j[key] = v;
      os << j.dump(2) << "\n";
    } else {
      os << inst.params.summary() << "\n";
      os << "strategy: delta=" << s.delta << " w=" << s.w << " a=" << s.a << " N'=" << s.N_prime << " b_max=" << b_max
         << "\n";
      for (std::size_t t = 0; t < rep.attempts.size(); ++t) {
        const auto& at = rep.attempts[t];
        os << "attempt " << t << ": drop {";
        for (std::size_t i = 0; i < at.dropped_columns.size(); ++i) os << (i ? "," : "") << at.dropped_columns[i];
        os << "}\n";
        for (const auto& st : at.steps) {
          os << "  b=" << st.b << " " << st.rows << "x" << st.cols << " rank=" << st.rank
             << " kernel=" << st.kernel_dim << " (" << to_string(st.status) << ")";
          if (st.enumerated) os << " walked to combination " << st.enumerated;
          if (st.planted_in_kernel) os << " planted-in-kernel=" << (*st.planted_in_kernel ? "yes" : "NO");
          if (common.verbose) os << " N<=b=" << st.N_leq_b << " M<=b=" << st.M_leq_b;
          os << "  [" << fmt_bits(st.seconds_build) << "s build, " << fmt_bits(st.seconds_solve) << "s solve]\n";
        }
        if (!at.failure.empty()) os << "  stopped: " << at.failure << "\n";
      }
      if (rep.support) {
        os << "recovered support, dimension " << rep.support->d << ", basis:";
        for (Elem e : fold_columns(inst.field, rep.support->C)) os << " " << e;
        os << "\n";
      }
      if (rep.matches_planted) os << "planted support " << (*rep.matches_planted ? "matched" : "NOT matched") << "\n";
      if (rep.infeasible && !rep.attempts.empty() && !rep.attempts.back().steps.empty()) {
        const auto& last = rep.attempts.back().steps.back();
        os << "final counts: m*N<=b = " << BigInt(inst.params.m) * BigInt(last.N_leq_b) << ", M<=b - 1 = "
           << BigInt(last.M_leq_b) - 1 << "\n";
      }
      os << (rep.success ? "OK " : "FAILED ") << rep.message << " (" << fmt_bits(rep.seconds_total) << "s)\n";
    }
    emit(common, os.str());
    if (rep.success) return kOk;
    return rep.infeasible ? kInfeasible : kFail;
  }
};

// ---- estimate

struct EstimateCmd {
  ParamFlags pf;
  bool table2 = false, hybrid = false, all = false;
  std::optional<std::uint32_t> delta_max;
  std::uint32_t b_max = 16, alpha_max = 2;
  Common common;

  void add(CLI::App* app) {
    pf.add(app);
    app->add_flag("--table2", table2, "run the nine built-in parameter rows and compare");
    app->add_option("--delta-max", delta_max, "largest delta searched");
    app->add_option("--b-max", b_max, "largest b searched")->capture_default_str();
    app->add_flag("--hybrid", hybrid, "also price guessing (interpretation A)");
    app->add_option("--alpha-max", alpha_max, "largest guess count with --hybrid")->capture_default_str();
    app->add_flag("--all", all, "print every candidate, not just the best per delta");
    common.add(app);
  }

  int run_table2() {
    const auto rows = check_table2();
    bool ok = true;
    std::ostringstream os;
    if (common.json()) {
      for (const auto& c : rows) ok &= c.delta0_ok && c.positive_ok;
      json j{{"config", config_json("estimate", {{"table2", true}})}, {"rows", table2_json(rows)}, {"ok", ok}};
      os << j.dump(2) << "\n";
    } else {
      os << "    m    n    k  r     N | d=0 want  got   diff b     | d>0 want (b,w,a)    got (b,w,a)\n";
      for (const auto& c : rows) {
        const auto p = c.row.params();
        os << std::setw(5) << p.m << std::setw(5) << p.n << std::setw(5) << p.k << std::setw(3) << p.r
           << std::setw(6) << p.N << " | " << std::setw(8) << c.row.delta0_bits;
        if (c.delta0)
          os << std::setw(6) << fmt_bits(c.delta0->log2_cost) << std::setw(6)
             << fmt_bits(c.delta0->log2_cost - c.row.delta0_bits) << " " << c.delta0->b << (c.delta0_ok ? "  ok " : " BAD ");
        else
          os << "   infeasible      BAD ";
        if (c.row.positive) {
          const auto& w = *c.row.positive;
          os << "| " << std::setw(4) << w.bits << " (" << w.b << "," << w.w << "," << w.a << ")";
          if (c.positive)
            os << std::setw(8) << fmt_bits(c.positive->log2_cost) << (c.positive->algorithm == Algorithm::wiedemann ? "*" : " ")
               << " (" << c.positive->b << "," << c.positive->strategy.w << "," << c.positive->strategy.a << ")"
               << (c.positive_ok ? " ok" : " BAD");
          else
            os << "  none BAD";
        }
        os << "\n";
        ok &= c.delta0_ok && c.positive_ok;
      }
      os << (ok ? "all rows within tolerance\n" : "some rows out of tolerance\n");
    }
    emit(common, os.str());
    return ok ? kOk : kFail;
  }

  int run() {
    if (table2) {
      if (pf.given()) throw UsageError("--table2 takes no parameter flags");
      return run_table2();
    }
    const auto p = pf.get();
    warn_regime(p);
    SearchSpace sp;
    sp.delta_max = delta_max;
    sp.b_max = b_max;
    sp.hybrid = hybrid;
    sp.alpha_max = alpha_max;
    const auto res = optimize(p, sp);
    std::ostringstream os;
    if (common.json()) {
      json table = json::array();
      for (const auto& c : res.table) table.push_back(cost_json(c));
      json cfg{{"params", params_json(p)}, {"b_max", b_max}, {"hybrid", hybrid}, {"alpha_max", alpha_max}};
      json j{{"config", config_json("estimate", cfg)}, {"feasible", res.feasible}};
      j["best"] = res.feasible ? cost_json(res.best) : json(nullptr);
      j["best_delta0"] = res.best_delta0 ? cost_json(*res.best_delta0) : json(nullptr);
      j["best_positive"] = res.best_positive ? cost_json(*res.best_positive) : json(nullptr);
      j["table"] = table;
      os << j.dump(2) << "\n";
    } else {
      os << p.summary() << "\n";
      auto line = [&](const char* tag, const CostReport& c) {
        os << tag << " delta=" << c.strategy.delta << " w=" << c.strategy.w << " a=" << c.strategy.a << " b=" << c.b;
        if (c.alpha_C || c.alpha_lambda) os << " alpha=(" << c.alpha_C << "," << c.alpha_lambda << ")";
        os << " " << fmt_bits(c.log2_cost) << " bits (" << to_string(c.algorithm) << ")";
        if (common.verbose) os << " N<=b=" << c.counts.N_leq_b << " M<=b=" << c.counts.M_leq_b;
        os << "\n";
      };
      if (all)
        for (const auto& c : res.table) line("  ", c);
      if (res.best_delta0) line("delta=0 best:", *res.best_delta0);
      if (res.best_positive) line("delta>0 best:", *res.best_positive);
      if (!res.feasible) os << "no feasible strategy with b <= " << b_max << "\n";
    }
    emit(common, os.str());
    return res.feasible ? kOk : kInfeasible;
  }
};

// ---- verify

struct VerifyCmd {
  std::string suite;
  std::uint32_t trials = 20;
  std::uint64_t seed = 1;
  std::vector<std::uint32_t> qs, bs;
  std::string quarantine;
  Common common;

  void add(CLI::App* app) {
    std::vector<std::string> names;
    for (const auto& [n, s] : suite_names()) names.push_back(n);
    app->add_option("suite", suite, "which check")->required()->check(CLI::IsMember(names));
    app->add_option("--trials", trials, "instances (prop1: samples)")->capture_default_str();
    app->add_option("--seed", seed, "PRNG seed")->capture_default_str();
    app->add_option("--q", qs, "base fields (default 2 3)");
    app->add_option("--b", bs, "degrees for thm2 / assumption2");
    app->add_option("--quarantine", quarantine, "where a failing instance is written");
    common.add(app);
  }

  int run() {
    SuiteConfig cfg;
    cfg.trials = trials;
    cfg.seed = seed;
    if (!qs.empty()) cfg.qs = qs;
    cfg.bs = bs;
    Suite which{};
    for (const auto& [n, s] : suite_names())
      if (n == suite) which = s;
    const auto rep = run_suite(which, cfg);
    std::string qpath;
    if (rep.offending) {
      qpath = quarantine.empty() ? "quarantine-" + suite + "-" + std::to_string(seed) + ".rsl" : quarantine;
      save_instance(qpath, *rep.offending);
    }
    std::ostringstream os;
    if (common.json()) {
      json cfgj{{"suite", suite}, {"trials", trials}, {"seed", seed}, {"q", cfg.qs}, {"b", bs}};
      json j{{"config", config_json("verify", cfgj)}};
      const json body = suite_json(rep);
      for (auto& [key, v] : body.items()) j[key] = v;
      j["quarantine"] = qpath.empty() ? json(nullptr) : json(qpath);
      os << j.dump(2) << "\n";
    } else {
      for (const auto& l : rep.lines)
        if (common.verbose || l.rfind("FAIL", 0) == 0) os << l << "\n";
      os << suite << ": " << rep.summary << " (" << fmt_bits(rep.seconds) << "s)\n";
      if (!qpath.empty()) os << "failing instance written to " << qpath << "\n";
    }
    emit(common, os.str());
    return rep.ok ? kOk : kFail;
  }
};

// ---- sweep

struct SweepCmd {
  ParamFlags pf;
  std::uint32_t m_from = 2, m_to = 64;
  std::uint32_t b_max = 4;
  double max_columns = 1e5;
  bool first = false;
  Common common;

  void add(CLI::App* app) {
    pf.add(app);
    app->add_option("--m-from", m_from, "first m")->capture_default_str();
    app->add_option("--m-to", m_to, "last m")->capture_default_str();
    app->add_option("--b-max", b_max, "largest b")->capture_default_str();
    app->add_option("--max-columns", max_columns, "column budget for --first")->capture_default_str();
    app->add_flag("--first", first, "stop at the first m solvable at b = 1 within the column budget");
    common.add(app);
  }

  int run() {
    RslParams base = pf.m ? pf.get() : [&] {
      ParamFlags tmp = pf;
      tmp.m = std::max(pf.r, 1u);
      return tmp.get();
    }();
    std::ostringstream os;
    json rows = json::array();
    std::optional<std::uint32_t> hit;
    if (!common.json()) os << "   m  delta  w  a   N'  b   M<=b        m*N<=b\n";
    for (std::uint32_t m = std::max(m_from, base.r); m <= m_to; ++m) {
      RslParams p = base;
      p.m = m;
      StrategyParams s;
      try {
        s = strategy_params(p, 0);
      } catch (const ParameterError& e) {
        throw UsageError(e.what());
      }
      const auto mb = min_b(p, s, b_max);
      const BigInt lhs = BigInt(m) * mb.counts.N_leq_b;
      if (common.json()) {
        rows.push_back({{"m", m}, {"feasible", mb.feasible}, {"b", mb.feasible ? json(mb.b) : json(nullptr)},
                        {"a", s.a}, {"N_prime", s.N_prime}, {"N_leq_b", to_string(mb.counts.N_leq_b)},
                        {"M_leq_b", to_string(mb.counts.M_leq_b)}});
      } else {
        os << std::setw(4) << m << std::setw(7) << s.delta << std::setw(3) << s.w << std::setw(3) << s.a
           << std::setw(5) << s.N_prime << std::setw(3) << (mb.feasible ? std::to_string(mb.b) : "-") << std::setw(10)
           << mb.counts.M_leq_b << std::setw(14) << lhs << "\n";
      }
      if (first && mb.feasible && mb.b == 1 && mb.counts.M_leq_b <= BigInt(static_cast<std::uint64_t>(max_columns))) {
        hit = m;
        break;
      }
    }
    if (common.json()) {
      json j{{"config", config_json("sweep", {{"params", params_json(base)}, {"m_from", m_from}, {"m_to", m_to}})},
             {"rows", rows}};
      j["first_m"] = hit ? json(*hit) : json(nullptr);
      os << j.dump(2) << "\n";
    } else if (first) {
      os << (hit ? "first m solvable at b=1: " + std::to_string(*hit) + "\n" : std::string("none in range\n"));
    }
    emit(common, os.str());
    return (!first || hit) ? kOk : kInfeasible;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Algebraic attack toolkit for rank support learning"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);

  GenCmd gen;
  InspectCmd inspect;
  AttackCmd atk;
  EstimateCmd est;
  VerifyCmd ver;
  SweepCmd sweep;
  auto* g = app.add_subcommand("gen", "generate an instance file");
  gen.add(g);
  auto* in = app.add_subcommand("inspect", "print what an instance file holds");
  inspect.add(in);
  auto* at = app.add_subcommand("attack", "recover the support by linearization");
  atk.add(at);
  auto* es = app.add_subcommand("estimate", "bit cost of the best strategy");
  est.add(es);
  auto* ve = app.add_subcommand("verify", "check rank laws and statistics on fresh instances");
  ver.add(ve);
  auto* sw = app.add_subcommand("sweep", "solvability as m grows");
  sweep.add(sw);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*g) return gen.run();
    if (*in) return inspect.run();
    if (*at) return atk.run();
    if (*es) return est.run();
    if (*ve) return ver.run();
    if (*sw) return sweep.run();
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}
