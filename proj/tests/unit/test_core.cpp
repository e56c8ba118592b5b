#include <gtest/gtest.h>

#include "rslm/core/instance.hpp"
#include "rslm/core/io.hpp"
#include "rslm/core/strategy.hpp"
#include "rslm/core/support.hpp"

using namespace rslm;

namespace {

RslParams toy() { return RslParams{2, 12, 12, 4, 3, 9}; }

FqMatrix random_basis(const PrimeField& K, std::uint32_t m, std::uint32_t d, Rng& rng) {
  for (;;) {
    FqMatrix V(K, m, d);
    for (std::uint32_t i = 0; i < m; ++i)
      for (std::uint32_t j = 0; j < d; ++j) V(i, j) = rng.below(K.order());
    if (rank(V) == d) return V;
  }
}

}  // namespace

TEST(Params, Validation) {
  EXPECT_NO_THROW(toy().validate());
  EXPECT_THROW((RslParams{2, 12, 12, 12, 3, 9}.validate()), ParameterError);
  EXPECT_THROW((RslParams{2, 2, 12, 4, 3, 9}.validate()), ParameterError);
  EXPECT_THROW((RslParams{4, 12, 12, 4, 3, 9}.validate()), ParameterError);
  EXPECT_FALSE(toy().easy_regime());
  EXPECT_TRUE((RslParams{2, 12, 12, 4, 3, 12}.easy_regime()));
}

TEST(Instance, GenerationIsDeterministic) {
  auto a = generate_instance(toy(), 7), b = generate_instance(toy(), 7), c = generate_instance(toy(), 8);
  EXPECT_EQ(instance_to_string(a), instance_to_string(b));
  EXPECT_NE(instance_to_string(a), instance_to_string(c));
}

TEST(Instance, ConstructionIdentities) {
  for (std::uint32_t q : {2u, 3u}) {
    RslParams p{q, 7, 9, 4, 3, 5};
    auto inst = generate_instance(p, 3);
    EXPECT_NO_THROW(validate_instance(inst));
    EXPECT_EQ(syndromes_of(inst.H, planted_errors(inst.field, *inst.secret)), inst.S);
    EXPECT_EQ(syndromes_of(inst.H, inst.Y), inst.S);
  }
}

TEST(Instance, ErrorSpaceHasFullDimension) {
  int full = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto inst = generate_instance(RslParams{2, 8, 10, 5, 3, 12}, seed);
    EXPECT_LE(error_space_dimension(inst), 12u);
    full += error_space_dimension(inst) == 12;
  }
  EXPECT_GE(full, 18);
}

TEST(Instance, Assumption1) {
  auto inst = generate_instance(RslParams{2, 8, 10, 5, 2, 1}, 1);
  EXPECT_FALSE(check_assumption1(inst, 2));  // one column cannot reach rank 3
  int ok = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) ok += check_assumption1(generate_instance(RslParams{2, 8, 10, 5, 2, 4}, seed), 2);
  EXPECT_GE(ok, 99);

  // identity in the first rows
  ExtensionField L(PrimeField(2), 4);
  FqmMatrix H(L, 3, 5), S(L, 3, 2);
  for (int i = 0; i < 3; ++i) H(i, 2 + i) = 1;
  S(0, 0) = 1;
  S(1, 1) = 1;
  auto id = make_instance(RslParams{2, 4, 5, 2, 1, 2}, L, H, S);
  EXPECT_TRUE(check_assumption1(id, 1));
}

TEST(Instance, Shortening) {
  auto inst = generate_instance(toy(), 2);
  EXPECT_EQ(instance_to_string(shorten(inst, 0), false), instance_to_string(inst, false));
  auto s = shorten(inst, 3);
  EXPECT_EQ(s.n(), 9u);
  EXPECT_EQ(s.k(), 1u);
  for (std::uint32_t i = 0; i < 8; ++i)
    for (std::uint32_t j = 0; j < 8; ++j) EXPECT_EQ(s.H(i, 1 + j), i == j ? 1u : 0u);
  EXPECT_EQ(syndromes_of(s.H, s.Y), s.S);
  EXPECT_EQ(instance_to_string(shorten(shorten(inst, 1), 2), false), instance_to_string(s, false));
  EXPECT_EQ(s.columns.front(), 3u);
  EXPECT_THROW(shorten(inst, 5), ParameterError);
}

TEST(Instance, SelectErrors) {
  auto inst = generate_instance(toy(), 2);
  auto sub = select_errors(inst, {4, 1});
  EXPECT_EQ(sub.num_errors(), 2u);
  EXPECT_EQ(sub.syndrome(0), inst.syndrome(4));
  EXPECT_NO_THROW(validate_instance(sub));
}

TEST(Strategy, DeltaZero) {
  auto s = strategy_params(RslParams{2, 277, 358, 179, 7, 895}, 0);
  EXPECT_EQ(s.a, 127u);
  EXPECT_EQ(s.N_prime, 890u);
  EXPECT_EQ(s.w, 7u);
  for (std::uint32_t N = 1; N < 40; ++N) {
    auto t = strategy_params(RslParams{2, 20, 30, 10, 4, N}, 0);
    EXPECT_LT(t.a * 4, N);
    EXPECT_LE(N, (t.a + 1) * 4);
  }
}

TEST(Strategy, PositiveDelta) {
  RslParams p{2, 307, 274, 137, 9, 959};
  auto s = strategy_params(p, 1, 86);
  EXPECT_EQ(s.w, 8u);
  EXPECT_EQ(s.N_prime, 954u);
  EXPECT_EQ(strategy_params(p, 1).a, 86u);
  EXPECT_THROW(strategy_params(p, 1, 87), ParameterError);
  EXPECT_THROW(strategy_params(RslParams{2, 30, 20, 10, 4, 5}, 1), ParameterError);
}

TEST(Support, PlantedRandomAndWhole) {
  Rng rng(99);
  int rejected = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto inst = generate_instance(RslParams{2, 8, 10, 5, 3, 4}, seed);
    EXPECT_TRUE(verify_support(inst, inst.secret->C));
    rejected += !verify_support(inst, random_basis(inst.field.base(), 8, 2, rng));
    EXPECT_TRUE(verify_support(inst, FqMatrix::identity(inst.field.base(), 8)));
  }
  EXPECT_EQ(rejected, 20);
}

TEST(Support, SpanHelpers) {
  PrimeField K(2);
  FqMatrix A(K, 3, 2, {1, 0, 1, 1, 0, 1});
  FqMatrix B(K, 3, 2, {1, 1, 1, 0, 0, 1});  // same span, different basis
  EXPECT_TRUE(same_span(A, B));
  EXPECT_TRUE(span_contains(A, A.col_range(0, 1)));
  EXPECT_FALSE(span_contains(A.col_range(0, 1), A));
}

TEST(InstanceIO, RoundTrip) {
  for (std::uint32_t q : {2u, 3u}) {
    auto inst = generate_instance(RslParams{q, 6, 8, 4, 2, 3}, 5);
    const auto text = instance_to_string(inst);
    auto back = instance_from_string(text);
    EXPECT_EQ(instance_to_string(back), text);
    EXPECT_EQ(back.H, inst.H);
    EXPECT_EQ(back.Y, inst.Y);
    ASSERT_TRUE(back.secret);
    EXPECT_EQ(back.secret->C, inst.secret->C);
    auto pub = instance_from_string(instance_to_string(inst, false));
    EXPECT_FALSE(pub.secret);
  }
}

TEST(InstanceIO, LineNumberedErrors) {
  auto text = instance_to_string(generate_instance(RslParams{2, 6, 8, 4, 2, 3}, 5));
  auto expect_line = [](const std::string& t, std::size_t line) {
    try {
      instance_from_string(t);
      FAIL() << "parse should have failed";
    } catch (const ParseError& e) {
      EXPECT_EQ(e.line(), line) << e.what();
    }
  };
  // drop one token from the first H row (line 5)
  auto lines = std::vector<std::string>{};
  std::istringstream is(text);
  for (std::string s; std::getline(is, s);) lines.push_back(s);
  auto join = [](const std::vector<std::string>& v) {
    std::string out;
    for (auto& s : v) out += s + "\n";
    return out;
  };
  auto bad = lines;
  bad[4] = bad[4].substr(0, bad[4].rfind(' '));
  expect_line(join(bad), 5);
  bad = lines;
  bad[1] = "q=2 m=6 n=8 k=4 r=2";
  expect_line(join(bad), 2);
  bad = lines;
  bad[2] = "modulus=1 0 0 0 0 0 1";  // z^6 + 1 is reducible
  expect_line(join(bad), 3);
  bad = lines;
  bad[10] = "1 1";  // S row with a different token count
  expect_line(join(bad), 11);
  bad = lines;
  bad[4] = "64 0 0 0 1 0 0 0";
  expect_line(join(bad), 5);
}
