#ifndef RSLM_CLI_REPORT_HPP_
#define RSLM_CLI_REPORT_HPP_

#include <json.hpp>
#include <string>

#include "rslm/estimator/cost.hpp"
#include "rslm/estimator/table2.hpp"
#include "rslm/solver/attack.hpp"
#include "rslm/verify/suites.hpp"

namespace rslm {

inline constexpr const char* kToolVersion = "rslm 0.1.0";

using json = nlohmann::ordered_json;

inline json params_json(const RslParams& p) {
  return {{"q", p.q}, {"m", p.m}, {"n", p.n}, {"k", p.k}, {"r", p.r}, {"N", p.N}};
}

inline json strategy_json(const StrategyParams& s) {
  return {{"delta", s.delta}, {"w", s.w}, {"a", s.a}, {"N_prime", s.N_prime}};
}

// big integers go out as decimal strings
inline json cost_json(const CostReport& c) {
  return {{"delta", c.strategy.delta},
          {"w", c.strategy.w},
          {"a", c.strategy.a},
          {"b", c.b},
          {"alpha_C", c.alpha_C},
          {"alpha_lambda", c.alpha_lambda},
          {"algorithm", to_string(c.algorithm)},
          {"log2_cost", c.log2_cost},
          {"feasible", c.feasible},
          {"N_leq_b", to_string(c.counts.N_leq_b)},
          {"M_leq_b", to_string(c.counts.M_leq_b)}};
}

inline json basis_tokens(const ExtensionField& L, const FqMatrix& C) {
  json out = json::array();
  for (Elem e : fold_columns(L, C)) out.push_back(e);
  return out;
}

inline json attack_json(const AttackReport& rep, const ExtensionField& L) {
  json attempts = json::array();
  for (const auto& at : rep.attempts) {
    json steps = json::array();
    for (const auto& st : at.steps) {
      json s{{"b", st.b},
             {"rows", st.rows},
             {"cols", st.cols},
             {"rank", st.rank},
             {"kernel_dim", st.kernel_dim},
             {"status", to_string(st.status)},
             {"N_leq_b", st.N_leq_b},
             {"M_leq_b", st.M_leq_b},
             {"enumerated", st.enumerated},
             {"seconds_build", st.seconds_build},
             {"seconds_solve", st.seconds_solve}};
      s["planted_in_kernel"] = st.planted_in_kernel ? json(*st.planted_in_kernel) : json(nullptr);
      steps.push_back(s);
    }
    attempts.push_back({{"dropped_columns", at.dropped_columns},
                        {"errors", at.errors},
                        {"steps", steps},
                        {"found_dim", at.found ? json(at.found->cols()) : json(nullptr)},
                        {"failure", at.failure}});
  }
  json out{{"params", params_json(rep.params)},
           {"strategy", strategy_json(rep.strategy)},
           {"b_max", rep.b_max},
           {"success", rep.success},
           {"infeasible", rep.infeasible},
           {"message", rep.message},
           {"attempts", attempts}};
  if (rep.support) {
    out["support"] = {{"d", rep.support->d}, {"b", rep.support->b}, {"basis", basis_tokens(L, rep.support->C)}};
  } else {
    out["support"] = nullptr;
  }
  out["matches_planted"] = rep.matches_planted ? json(*rep.matches_planted) : json(nullptr);
  out["seconds_total"] = rep.seconds_total;
  return out;
}

inline json suite_json(const SuiteReport& r) {
  return {{"suite", r.suite}, {"checks", r.checks}, {"passed", r.passed}, {"ok", r.ok},
          {"summary", r.summary}, {"seconds", r.seconds}, {"lines", r.lines}};
}

inline json table2_json(const std::vector<Table2Check>& rows) {
  json out = json::array();
  for (const auto& c : rows) {
    json j{{"params", params_json(c.row.params())},
           {"expected_delta0", {{"bits", c.row.delta0_bits}, {"b", c.row.delta0_b}}},
           {"delta0", c.delta0 ? cost_json(*c.delta0) : json(nullptr)},
           {"delta0_ok", c.delta0_ok}};
    if (c.row.positive) {
      const auto& p = *c.row.positive;
      j["expected_positive"] = {{"bits", p.bits}, {"b", p.b}, {"w", p.w}, {"a", p.a}};
      j["positive"] = c.positive ? cost_json(*c.positive) : json(nullptr);
      j["positive_ok"] = c.positive_ok;
    }
    out.push_back(j);
  }
  return out;
}

}  // namespace rslm

#endif  // RSLM_CLI_REPORT_HPP_
