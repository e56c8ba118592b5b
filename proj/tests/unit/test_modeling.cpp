#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "rslm/estimator/counts.hpp"
#include "rslm/modeling/echelon.hpp"
#include "rslm/modeling/macaulay.hpp"
#include "rslm/modeling/syzygy.hpp"
#include "rslm/modeling/system.hpp"
#include "rslm/verify/family.hpp"

using namespace rslm;

namespace {

FqmMatrix embed_R(const RslInstance& inst, std::size_t i) { return embed(inst.field, inst.secret->R[i]); }

}  // namespace

TEST(MonomialOrder, StrictTotalAndLeading) {
  std::vector<Monomial> ms;
  for (std::uint32_t d = 1; d <= 3; ++d)
    for (const auto& lam : lambda_monomials(4, d, d))
      for (const auto& T : all_subsets(5, 2)) ms.push_back({lam, T});
  MonomialLess less;
  for (std::size_t i = 0; i < ms.size(); i += 7)
    for (std::size_t j = 0; j < ms.size(); j += 5) {
      const bool ab = less(ms[i], ms[j]), ba = less(ms[j], ms[i]);
      EXPECT_FALSE(ab && ba);
      EXPECT_EQ(ab || ba, !(ms[i] == ms[j]));
    }
  auto sorted = ms;
  std::sort(sorted.begin(), sorted.end(), less);
  EXPECT_EQ(std::adjacent_find(sorted.begin(), sorted.end()), sorted.end());
  PrimeField F(2);
  Polynomial p;
  for (std::size_t i = 0; i < ms.size(); i += 3) p.add_term(F, ms[i], 1);
  Monomial mx = ms[0];
  for (std::size_t i = 0; i < ms.size(); i += 3)
    if (less(mx, ms[i])) mx = ms[i];
  EXPECT_EQ(*p.leading(), mx);
}

TEST(MonomialOrder, BilinearRule) {
  MonomialLess less;
  // r_T decides first, then lambda_1 is the largest lambda
  EXPECT_TRUE(less({{0}, {0, 1}}, {{3}, {0, 2}}));
  EXPECT_TRUE(less({{3}, {1, 2}}, {{0}, {1, 2}}));
  // grevlex on lambda parts: l1*l3 < l2^2 (more of the smaller variable l3)
  EXPECT_TRUE(lambda_less({0, 2}, {1, 1}));
  EXPECT_TRUE(lambda_less({1, 1}, {0, 1}));
}

TEST(Monomials, FieldEquationReduction) {
  LambdaMonomial a{0, 0, 1, 2, 2, 2};
  reduce_field_equations(a, 2);
  EXPECT_EQ(a, (LambdaMonomial{0, 1, 2}));
  LambdaMonomial b{0, 0, 0, 1};
  reduce_field_equations(b, 3);
  EXPECT_EQ(b, (LambdaMonomial{0, 1}));
  EXPECT_EQ(lambda_monomials(4, 2, 1).size(), 6u);
  EXPECT_EQ(lambda_monomials(4, 2, 2).size(), 10u);
}

TEST(BuildQJ, MatchesMinorExpansionOracle) {
  Rng pick(17);
  int pairs = 0;
  for (std::uint64_t seed = 0; pairs < 40; ++seed) {
    auto inst = generate_instance(RslParams{3, 6, 8, 4, 2, 3}, seed);
    for (int t = 0; t < 4; ++t, ++pairs) {
      auto Js = all_subsets(4, 3);
      const auto& J = Js[pick.below(Js.size())];
      ASSERT_EQ(build_QJ(inst, J, 2), oracle::expanded_QJ(inst, J, 2));
    }
  }
}

TEST(BuildQJ, SupportAndTermCount) {
  auto inst = generate_instance(RslParams{2, 6, 10, 5, 2, 4}, 3);
  for (const auto& J : all_subsets(5, 3)) {
    auto q = build_QJ(inst, J, 2);
    EXPECT_LE(q.size(), 4 * binom_u64(5 + 1 + 2, 2));
    for (const auto& [mono, c] : q.terms())
      for (auto t : mono.T) EXPECT_TRUE(t < 5 || contains(J, t - 5));
  }
}

TEST(BuildSystem, PlantedPointsVanish) {
  for (std::uint32_t q : {2u, 3u}) {
    auto inst = generate_instance(RslParams{q, 7, 10, 5, 2, 4}, 11);
    auto sys = build_system(inst, 2);
    EXPECT_EQ(sys.size(), binom_u64(5, 3));
    auto unf = unfold_system(sys);
    EXPECT_EQ(unf.size(), 7 * sys.size());
    for (std::uint32_t i = 0; i < 4; ++i) {
      std::vector<Elem> lam(4, 0);
      lam[i] = 1;
      EXPECT_TRUE(vanishes_at(sys, lam, minor_values(embed_R(inst, i))));
      EXPECT_TRUE(vanishes_at(unf, lam, minor_values(inst.secret->R[i])));
    }
    // a point that is not planted should not vanish
    std::vector<Elem> lam(4, 1);
    EXPECT_FALSE(vanishes_at(sys, lam, minor_values(embed_R(inst, 0))));
  }
  auto small = generate_instance(RslParams{2, 5, 7, 3, 1, 2}, 1);
  EXPECT_EQ(build_system(small, 1).size(), 6u);
}

TEST(UnfoldSystem, BaseFieldCoefficientsGiveOneCopy) {
  ExtensionField L(PrimeField(3), 4);
  FqmSystem sys{L, 2, 4, 1, {{0, 1}}, {0}, {}};
  Polynomial p;
  p.add_term(L, Monomial{{0}, {1}}, 2);
  p.add_term(L, Monomial{{1}, {3}}, 1);
  sys.eqs.push_back(p);
  auto u = unfold_system(sys);
  ASSERT_EQ(u.size(), 4u);
  EXPECT_EQ(u.eqs[0].size(), 2u);
  for (int j = 1; j < 4; ++j) EXPECT_TRUE(u.eqs[j].is_zero());
}

TEST(Echelon, DistinctLeadingMonomialsAndSameSpan) {
  Rng pick(5);
  for (int t = 0; t < 20; ++t) {
    const std::uint32_t q = t % 2 ? 3 : 2, w = 1 + t % 3;
    auto fam = theorem_instance(q, w, pick, 100 + t);
    auto sys = build_system(fam.inst, w);
    auto tq = echelonize_tildeQ(sys, fam.inst, w);
    std::set<std::string> seen;
    for (std::size_t e = 0; e < tq.leading.size(); ++e) {
      EXPECT_EQ(tq.leading[e], expected_leading(tq.system.labels[e], fam.inst.k()));
      seen.insert(to_string(tq.leading[e]));
    }
    EXPECT_EQ(seen.size(), sys.size());
    // undo the relabelling and compare spans
    FqmSystem back = tq.system;
    for (auto& eq : back.eqs) {
      Polynomial r;
      for (const auto& [mono, c] : eq.terms()) {
        Monomial m = mono;
        for (auto& v : m.lam) v = tq.perm[v];
        r.add_term(sys.field, m, c);
      }
      eq = r;
    }
    FqmSystem both = sys;
    both.eqs.insert(both.eqs.end(), back.eqs.begin(), back.eqs.end());
    both.labels.insert(both.labels.end(), back.labels.begin(), back.labels.end());
    both.coords.insert(both.coords.end(), back.coords.begin(), back.coords.end());
    const auto r1 = build_macaulay(sys, 1, MacaulayMode::exact).rank();
    EXPECT_EQ(r1, binom_u64(fam.inst.redundancy(), w + 1));
    EXPECT_EQ(build_macaulay(both, 1, MacaulayMode::exact).rank(), r1);
  }
}

TEST(Echelon, ReportsAssumptionFailure) {
  auto inst = generate_instance(RslParams{2, 6, 9, 4, 2, 1}, 2);
  auto sys = build_system(inst, 2);
  EXPECT_THROW(echelonize_tildeQ(sys, inst, 2), AssumptionError);
}

TEST(Macaulay, WorkedExampleRanks) {
  auto fam = generate_with_assumption1(RslParams{2, 6, 10, 6, 2, 5}, 2, 1);
  auto sys = build_system(fam.inst, 2);
  EXPECT_EQ(build_macaulay(sys, 1, MacaulayMode::exact).rank(), 4u);
  auto m2 = build_macaulay(sys, 2, MacaulayMode::exact);
  EXPECT_EQ(m2.num_cols(), 45u * 15u);
  EXPECT_EQ(m2.rank(), 19u);
  EXPECT_EQ(BigInt(m2.rank()), count_Nb(10, 6, 2, 5, 2));
  auto m3 = build_macaulay(sys, 3, MacaulayMode::exact);
  EXPECT_EQ(BigInt(m3.rank()), count_Nb(10, 6, 2, 5, 3));
}

TEST(Macaulay, ColumnCounts) {
  auto inst = generate_instance(RslParams{2, 6, 6, 2, 1, 3}, 4);
  auto sys = build_system(inst, 1);
  EXPECT_EQ(build_macaulay(sys, 2, MacaulayMode::exact).num_cols(), 36u);
  auto unf = unfold_system(sys);
  auto f2 = build_macaulay(unf, 2, MacaulayMode::exact);
  // lambda_i^2 = lambda_i brings degree-1 columns back in
  EXPECT_EQ(f2.num_cols(), 36u);
  EXPECT_EQ(f2.num_rows(), unf.size() * 3);
  auto cum = build_macaulay(unf, 2, MacaulayMode::cumulative);
  EXPECT_EQ(BigInt(cum.num_cols()), count_Mb(6, 1, 3, 2, MbVariant::cumulative_f2));
  EXPECT_EQ(cum.num_rows(), unf.size() * 4);  // multipliers 1, l1, l2, l3
}

TEST(Macaulay, DegreeGuardOverBaseField) {
  auto inst = generate_instance(RslParams{3, 6, 6, 2, 1, 3}, 4);
  auto unf = unfold_system(build_system(inst, 1));
  EXPECT_NO_THROW(build_macaulay(unf, 2, MacaulayMode::cumulative));
  EXPECT_THROW(build_macaulay(unf, 3, MacaulayMode::cumulative), DegreeError);
}

TEST(Macaulay, PlantedPointInKernel) {
  auto inst = generate_instance(RslParams{2, 7, 9, 4, 2, 3}, 8);
  auto unf = unfold_system(build_system(inst, 2));
  for (std::uint32_t b = 1; b <= 2; ++b) {
    auto M = build_macaulay(unf, b, MacaulayMode::cumulative);
    std::vector<Elem> lam{0, 1, 0};
    EXPECT_TRUE(M.annihilates(M.evaluate_columns(lam, minor_values(inst.secret->R[1]))));
  }
}

TEST(Syzygies, AnnihilateAndIndependent) {
  Rng pick(3);
  for (int t = 0; t < 10; ++t) {
    const std::uint32_t q = t % 2 ? 3 : 2, w = 1 + t % 3;
    auto fam = theorem_instance(q, w, pick, 500 + t);
    auto sys = build_system(fam.inst, w);
    auto gs = build_syzygies(fam.inst, w);
    EXPECT_EQ(gs.size(), binom_u64(fam.inst.redundancy(), w + 2));
    for (const auto& g : gs) EXPECT_TRUE(apply_syzygy(g, sys).is_zero());
    EXPECT_EQ(rank(syzygy_matrix(gs, fam.inst, w)), gs.size());
  }
  auto inst = generate_instance(RslParams{2, 6, 7, 3, 1, 3}, 1);
  EXPECT_EQ(build_syzygies(inst, 1).size(), 4u);
}

TEST(Dump, OneLinePerEquation) {
  auto inst = generate_instance(RslParams{2, 5, 6, 3, 1, 2}, 1);
  std::ostringstream os;
  dump_system(os, build_system(inst, 1));
  const auto text = os.str();
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 3);
  EXPECT_EQ(text.rfind("J=1,2 :", 0), 0u);
}
