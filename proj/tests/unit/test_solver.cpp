#include <gtest/gtest.h>

#include "rslm/estimator/counts.hpp"
#include "rslm/solver/attack.hpp"

using namespace rslm;

namespace {

std::map<Subset, Elem> minors_of(const FqMatrix& R) {
  std::map<Subset, Elem> out;
  for (const auto& [T, v] : maximal_minors(R)) out[T] = v;
  return out;
}

bool proportional(const PrimeField& F, const std::map<Subset, Elem>& a, const std::map<Subset, Elem>& b) {
  std::optional<Elem> ratio;
  for (const auto& [T, va] : a) {
    const Elem vb = b.count(T) ? b.at(T) : 0;
    if ((va == 0) != (vb == 0)) return false;
    if (!va) continue;
    const Elem r = F.div(va, vb);
    if (ratio && *ratio != r) return false;
    ratio = r;
  }
  return ratio.has_value();
}

const RslParams kToy{2, 12, 12, 4, 3, 9};

}  // namespace

TEST(Plucker, TwoByThreeExample) {
  PrimeField F(7);
  const Elem a = 3, b = 5;
  std::map<Subset, Elem> r{{{0, 1}, 1}, {{0, 2}, a}, {{1, 2}, b}};
  auto R = plucker_reconstruct(F, r, 2, 3);
  EXPECT_EQ(R(0, 0), 1u);
  EXPECT_EQ(R(0, 1), 0u);
  EXPECT_EQ(R(0, 2), F.neg(b));
  EXPECT_EQ(R(1, 0), 0u);
  EXPECT_EQ(R(1, 1), 1u);
  EXPECT_EQ(R(1, 2), a);
  EXPECT_EQ(minors_of(R), r);
}

TEST(Plucker, IndicatorGivesIdentityOnT0) {
  PrimeField F(3);
  auto R = plucker_reconstruct(F, {{{1, 3}, 2}}, 2, 5);
  for (std::uint32_t i = 0; i < 2; ++i)
    for (std::uint32_t j = 0; j < 5; ++j) EXPECT_EQ(R(i, j), (j == 1 + 2 * i) ? 1u : 0u);
}

TEST(Plucker, ErrorsOnZeroAndNonPluckerInput) {
  PrimeField F(2);
  EXPECT_THROW(plucker_reconstruct(F, {}, 2, 4), ExtractionError);
  // r_{01} r_{23} - r_{02} r_{13} + r_{03} r_{12} = 1 breaks the quadratic relation
  std::map<Subset, Elem> bad{{{0, 1}, 1}, {{2, 3}, 1}};
  EXPECT_THROW(plucker_reconstruct(F, bad, 2, 4), ExtractionError);
}

TEST(Plucker, RoundTripProportional) {
  Rng rng(17);
  int done = 0;
  for (int t = 0; done < 100; ++t) {
    const std::uint32_t q = t % 2 ? 3 : 2;
    const std::uint32_t w = 1 + static_cast<std::uint32_t>(rng.below(4));
    const std::uint32_t n = w + static_cast<std::uint32_t>(rng.below(10 - w));
    PrimeField F(q);
    FqMatrix M(F, w, n);
    for (std::uint32_t i = 0; i < w; ++i)
      for (std::uint32_t j = 0; j < n; ++j) M(i, j) = static_cast<Elem>(rng.below(q));
    if (rank(M) < w) continue;
    const auto r = minors_of(M);
    auto R = plucker_reconstruct(F, r, w, n);
    EXPECT_TRUE(proportional(F, minors_of(R), r));
    EXPECT_TRUE(same_row_space(R, M));
    ++done;
  }
}

TEST(Rank1, AllOnesAndZero) {
  PrimeField F(2);
  std::vector<Monomial> cols{{{0}, {0}}, {{0}, {1}}, {{1}, {0}}, {{1}, {1}}};
  auto p = rank1_extract(F, cols, {1, 1, 1, 1}, 2);
  EXPECT_EQ(p.lambda, (std::vector<Elem>{1, 1}));
  EXPECT_EQ(p.r.size(), 2u);
  EXPECT_THROW(rank1_extract(F, cols, {0, 0, 0, 0}, 2), ExtractionError);
  // identity Z has rank 2
  EXPECT_THROW(rank1_extract(F, cols, {1, 0, 0, 1}, 2), ExtractionError);
}

TEST(Rank1, InvariantUnderRescaling) {
  PrimeField F(5);
  std::vector<Monomial> cols{{{0}, {0}}, {{0}, {1}}, {{1}, {0}}, {{1}, {1}}};
  // lambda = (2, 3), r = (1, 4)
  std::vector<Elem> v{2, 3, 3, 2};
  auto base = rank1_extract(F, cols, v, 2);
  for (Elem c = 2; c < 5; ++c) {
    std::vector<Elem> s = v;
    for (auto& x : s) x = F.mul(x, c);
    auto p = rank1_extract(F, cols, s, 2);
    EXPECT_EQ(p.lambda, base.lambda);
    EXPECT_TRUE(proportional(F, p.r, base.r));
  }
}

TEST(SolveLinearized, UniqueShortAndDegenerateKernels) {
  const auto s = strategy_params(kToy, 0);
  std::optional<MacaulayMatrix<PrimeField>> M;
  KernelSolution sol;
  for (std::uint64_t seed = 1; seed < 40 && sol.status != KernelStatus::unique; ++seed) {
    auto inst = generate_instance(kToy, seed);
    const auto sub = shorten(select_errors(inst, detail::iota_u32(s.N_prime)), s.a);
    M = build_macaulay(unfold_system(build_system(sub, s.w)), 1, MacaulayMode::cumulative);
    sol = solve_linearized(*M);
  }
  ASSERT_EQ(sol.status, KernelStatus::unique);
  EXPECT_EQ(sol.kernel_dim, 1u);
  EXPECT_TRUE(M->annihilates(sol.values));

  // drop rows from the end until the rank falls by one
  auto cut = *M;
  KernelSolution short_sol = sol;
  while (short_sol.kernel_dim == 1) {
    cut.rows.pop_back();
    short_sol = solve_linearized(cut);
  }
  EXPECT_EQ(short_sol.status, KernelStatus::underdetermined);
  EXPECT_EQ(short_sol.kernel_dim, 2u);

  auto zero = *M;
  for (auto& row : zero.rows) row.clear();
  EXPECT_EQ(solve_linearized(zero).status, KernelStatus::degenerate);
}

TEST(RecoverSupport, ZeroLambdaRejected) {
  auto inst = generate_instance(RslParams{2, 8, 8, 4, 2, 4}, 1);
  FqMatrix R(inst.field.base(), 2, 8);
  EXPECT_THROW(recover_support(inst, std::vector<Elem>(4, 0), R), ExtractionError);
}

TEST(Attack, ToyParametersAreEstimatorFeasibleAtB1) {
  const auto s = strategy_params(kToy, 0);
  EXPECT_EQ(s.a, 2u);
  EXPECT_EQ(s.N_prime, 7u);
  const auto mb = min_b(kToy, s);
  ASSERT_TRUE(mb.feasible);
  EXPECT_EQ(mb.b, 1u);
  const auto c = compute_counts(12, 4, 3, 7, 2, 1);
  EXPECT_LE(c.M_leq_b, 100000);
  // one step down in m loses feasibility
  EXPECT_FALSE(linearization_feasible(kToy.m - 1, c));
}

TEST(Attack, ToyRecoversPlantedSupport) {
  for (std::uint64_t seed : {7u, 8u, 9u}) {
    auto inst = generate_instance(kToy, seed);
    auto rep = attack(inst, strategy_params(kToy, 0), 2);
    ASSERT_TRUE(rep.success) << rep.message;
    ASSERT_TRUE(rep.matches_planted.has_value());
    EXPECT_TRUE(*rep.matches_planted);
    EXPECT_EQ(rep.support->d, 3u);
    EXPECT_EQ(rep.support->b, 1u);
    for (const auto& at : rep.attempts)
      for (const auto& st : at.steps) EXPECT_EQ(st.planted_in_kernel, std::optional<bool>(true));
  }
}

TEST(Attack, PublicOnlyInstanceStillVerifies) {
  auto inst = generate_instance(kToy, 11);
  inst.secret.reset();
  auto rep = attack(inst, strategy_params(kToy, 0), 1);
  EXPECT_TRUE(rep.success) << rep.message;
  EXPECT_FALSE(rep.matches_planted.has_value());
}

TEST(Attack, BmaxZeroFailsImmediately) {
  auto inst = generate_instance(kToy, 7);
  auto rep = attack(inst, strategy_params(kToy, 0), 0);
  EXPECT_FALSE(rep.success);
  EXPECT_TRUE(rep.infeasible);
  EXPECT_TRUE(rep.attempts.front().steps.empty());
}

TEST(Attack, TooFewRowsLeavesKernelLarge) {
  RslParams p = kToy;
  p.m = 6;
  auto inst = generate_instance(p, 3);
  const auto s = strategy_params(p, 0);
  EXPECT_FALSE(linearization_feasible(p.m, compute_counts(p.n, p.k, s.w, s.N_prime, s.a, 1)));
  auto rep = attack(inst, s, 1);
  EXPECT_FALSE(rep.success);
  EXPECT_TRUE(rep.infeasible);
  EXPECT_GT(rep.attempts.front().steps.back().kernel_dim, 1u);
}

TEST(Attack, EasyRegimeSolvedAtB1) {
  RslParams p{2, 16, 8, 4, 2, 16};
  ASSERT_TRUE(p.N >= p.n * p.r);
  ASSERT_TRUE(min_b(p, strategy_params(p, 0)).feasible);
  auto inst = generate_instance(p, 5);
  auto rep = attack(inst, strategy_params(p, 0), 1);
  ASSERT_TRUE(rep.success) << rep.message;
  EXPECT_TRUE(*rep.matches_planted);
}

TEST(Attack, PositiveDeltaFindsSubspace) {
  RslParams p{2, 10, 10, 4, 2, 14};
  const auto s = strategy_params(p, 1);
  auto inst = generate_instance(p, 2);
  AttackOptions opt;
  opt.max_attempts = 4;
  auto rep = attack(inst, s, 2, opt);
  ASSERT_TRUE(rep.support.has_value()) << rep.message;
  EXPECT_TRUE(span_contains(inst.secret->C, rep.support->C));
  EXPECT_TRUE(*rep.matches_planted);
}
