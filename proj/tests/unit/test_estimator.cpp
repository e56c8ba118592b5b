#include <gtest/gtest.h>

#include "oracles.hpp"
#include "rslm/estimator/cost.hpp"
#include "rslm/estimator/stats.hpp"
#include "rslm/estimator/table2.hpp"

using namespace rslm;

TEST(Counts, NbExamples) {
  EXPECT_EQ(count_Nb(5, 1, 1, 3, 1), 6);
  EXPECT_EQ(count_Nb(5, 1, 1, 3, 2), 14);
  EXPECT_EQ(count_Nb(5, 1, 1, 3, 3, CountVariant::f2), 11);
  EXPECT_EQ(count_Nb(10, 6, 2, 5, 2), 19);
}

TEST(Counts, NbClosedFormMatchesDoubleSum) {
  for (std::int64_t nk = 2; nk <= 12; ++nk)
    for (std::int64_t w = 1; w < nk && w <= 4; ++w)
      for (std::int64_t N = 1; N <= 9; ++N)
        for (std::int64_t b = 1; b <= 4; ++b)
          for (auto v : {CountVariant::general, CountVariant::f2})
            ASSERT_EQ(count_Nb(nk + 3, 3, w, N, b, v), oracle::direct_Nb(nk, w, N, b, v == CountVariant::f2))
                << nk << " " << w << " " << N << " " << b;
}

TEST(Counts, DoubleSumConsistency) {
  for (std::int64_t nk = 2; nk <= 30; ++nk)
    for (std::int64_t w = 1; w < nk && w <= 6; ++w) {
      // both identities need N >= n-k-w, the syndrome rank condition
      for (std::int64_t N = nk - w; N <= nk - w + 12; ++N) {
        ASSERT_EQ(count_Nb(nk, 0, w, N, 1), binom(nk, w + 1));
        ASSERT_EQ(count_Nb(nk, 0, w, N, 2), N * binom(nk, w + 1) - binom(nk, w + 2));
      }
    }
}

TEST(Counts, MbExamples) {
  EXPECT_EQ(count_Mb(6, 1, 3, 2, MbVariant::general), 36);
  EXPECT_EQ(count_Mb(6, 1, 3, 2, MbVariant::f2), 18);
  EXPECT_EQ(count_Mb(6, 1, 3, 2, MbVariant::cumulative_f2), 36);
  for (std::int64_t N = 1; N < 8; ++N) {
    EXPECT_EQ(count_Mb(9, 2, N, 1, MbVariant::general), 36 * N);
    EXPECT_EQ(count_Mb(9, 2, N, 1, MbVariant::f2), 36 * N);
  }
}

TEST(MinB, PublishedRows) {
  RslParams p{2, 277, 358, 179, 7, 895};
  auto r = min_b(p, strategy_params(p, 0));
  ASSERT_TRUE(r.feasible);
  EXPECT_EQ(r.b, 1u);
  p.N = 716;
  EXPECT_EQ(min_b(p, strategy_params(p, 0)).b, 2u);

  RslParams p2{2, 281, 242, 121, 8, 726};
  auto s2 = strategy_params(p2, 0);
  EXPECT_EQ(min_b(p2, s2).b, 2u);
  auto c1 = compute_counts(242, 121, 8, s2.N_prime, s2.a, 1);
  EXPECT_FALSE(linearization_feasible(281, c1));
  EXPECT_NEAR(log2_big(BigInt(281) * c1.N_leq_b), std::log2(3.17e15), 0.01);
  EXPECT_NEAR(log2_big(c1.M_leq_b), std::log2(4.22e15), 0.01);
}

TEST(MinB, Monotonicity) {
  // larger m never raises b and more kept columns (smaller a, same N') never
  // lower it. Not monotone in N': at b = 1 the equation count ignores N' while
  // the column count grows with it.
  Rng rng(4);
  for (int t = 0; t < 100; ++t) {
    RslParams p{2, 20 + static_cast<std::uint32_t>(rng.below(40)), 30 + static_cast<std::uint32_t>(rng.below(20)), 15,
                3 + static_cast<std::uint32_t>(rng.below(3)), 0};
    p.N = 10 + static_cast<std::uint32_t>(rng.below(30));
    auto b_of = [&](const RslParams& q, const StrategyParams& s) {
      auto r = min_b(q, s, 12);
      return r.feasible ? r.b : 99u;
    };
    const auto s = strategy_params(p, 0);
    const auto base = b_of(p, s);
    RslParams wider = p;
    wider.m += 10;
    EXPECT_LE(b_of(wider, s), base);
    if (s.a > 0) EXPECT_GE(b_of(p, StrategyParams{0, s.w, s.a - 1, s.N_prime}), base);
  }
  RslParams p{2, 40, 40, 20, 3, 10};
  StrategyParams s{0, 3, 3, 10};
  EXPECT_EQ(min_b(p, s).b, 1u);
  s.N_prime = 40;
  EXPECT_GT(min_b(p, s).b, 1u);
}

TEST(BitCost, PublishedDeltaZero) {
  RslParams p{2, 277, 358, 179, 7, 895};
  auto rep = bit_cost(p, strategy_params(p, 0), 1);
  EXPECT_NEAR(rep.log2_cost, 147, 2);
  EXPECT_EQ(rep.algorithm, Algorithm::strassen);
  RslParams p2{2, 281, 242, 121, 8, 726};
  EXPECT_NEAR(bit_cost(p2, strategy_params(p2, 0), 2).log2_cost, 170, 2);
  RslParams p3{2, 307, 274, 137, 9, 959};
  auto w = bit_cost(p3, strategy_params(p3, 1, 86), 3);
  EXPECT_EQ(w.algorithm, Algorithm::wiedemann);
  EXPECT_NEAR(w.log2_wiedemann, 187, 3);
}

TEST(Optimize, PublishedBestEntries) {
  auto r1 = optimize(RslParams{2, 277, 358, 179, 7, 1074});
  ASSERT_TRUE(r1.best_delta0);
  EXPECT_NEAR(r1.best_delta0->log2_cost, 145, 2);
  EXPECT_EQ(r1.best_delta0->b, 1u);
  auto r2 = optimize(RslParams{2, 307, 274, 137, 9, 1096});
  EXPECT_NEAR(r2.best_delta0->log2_cost, 159, 2);
  auto r3 = optimize(RslParams{2, 277, 358, 179, 7, 716});
  ASSERT_TRUE(r3.best_positive);
  EXPECT_EQ(r3.best_positive->strategy.w, 6u);
  EXPECT_EQ(r3.best_positive->strategy.a, 60u);
  EXPECT_EQ(r3.best_positive->b, 3u);
  EXPECT_EQ(r3.best_positive->algorithm, Algorithm::wiedemann);
  EXPECT_NEAR(r3.best_positive->log2_cost, 174, 3);
  EXPECT_FALSE(r3.table.empty());
}

TEST(Optimize, HybridNeverWorseThanPlain) {
  RslParams p{2, 277, 358, 179, 7, 895};
  auto plain = optimize(p);
  SearchSpace s;
  s.hybrid = true;
  s.alpha_max = 2;
  auto hyb = optimize(p, s);
  EXPECT_LE(hyb.best.log2_cost, plain.best.log2_cost + 1e-9);
  EXPECT_GT(hyb.table.size(), plain.table.size());
}

TEST(CodewordStats, Examples) {
  auto s = codeword_stats(2, 2, 4, 3, 2);
  EXPECT_EQ(s.sphere, 210);
  EXPECT_EQ(s.expectation, Rational(210, 32));
  EXPECT_DOUBLE_EQ(to_double(s.expectation), 6.5625);
  auto z = codeword_stats(3, 2, 3, 2, 0);
  EXPECT_EQ(z.expectation, Rational(1, 81));
  EXPECT_EQ(s.variance, Rational(210) * (Rational(1, 32) - Rational(1, 1024)));
  EXPECT_TRUE(codeword_stats(2, 3, 6, 8, 2).delta_feasible);
  EXPECT_FALSE(codeword_stats(2, 3, 6, 3, 2).delta_feasible);
}

TEST(Ghpt, DegenerateAndMonotone) {
  EXPECT_EQ(ghpt_cost(277, 358, 179, 7, 7 * 358, 7), 0.0);
  EXPECT_EQ(ghpt_e_minus(277, 358, 179, 895, 7), (7 - 2) * ((179 * 277 + 895) / 358 - 2));
  EXPECT_EQ(ghpt_e_plus(277, 358, 179, 895, 7), (7 - 2 - 1) * (141 - 2 - 1) + 358 * (141 - 2 - 1));
  EXPECT_EQ(ghpt_cost(277, 358, 179, 7, 895, 7), double(std::min(ghpt_e_minus(277, 358, 179, 895, 7),
                                                                 ghpt_e_plus(277, 358, 179, 895, 7))));
  // K = km + N also grows with N, so e- only decreases across whole blocks of n
  for (std::int64_t N = 1; N < 3000; N += 7)
    EXPECT_LE(ghpt_e_minus(277, 358, 179, N + 358, 7), ghpt_e_minus(277, 358, 179, N, 7));
}

TEST(Table2, RowsHaveExpectedShape) {
  EXPECT_EQ(table2_rows().size(), 9u);
  EXPECT_EQ(table2_rows()[0].N(), 716u);
  int positive = 0;
  for (const auto& r : table2_rows()) positive += r.positive.has_value();
  EXPECT_EQ(positive, 5);
}
