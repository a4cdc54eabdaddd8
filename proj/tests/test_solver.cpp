#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "nwr/solver.hpp"
#include "oracles.hpp"

using namespace nwr;
using namespace nwr::fixtures;

namespace {

StateSet goal_of(const Mdp& m) {
  StateSet g(m.state_count());
  for (StateIndex q = 0; q < m.state_count(); ++q) g[q] = m.target[q];
  return g;
}

}  // namespace

TEST(Solver, TwoStateExampleValues) {
  const Mdp m = twin_mdp();
  const auto exact = max_reach_values_exact(m);
  EXPECT_EQ(exact.values[0], Rational(3, 4));
  EXPECT_EQ(exact.values[1], Rational(3, 4));
  EXPECT_EQ(exact.values[2], Rational(1));
  EXPECT_EQ(exact.values[3], Rational(0));
  EXPECT_EQ(exact.values, oracle::enumerate_strategies(m));
}

TEST(Solver, ChainUntilAndReach) {
  const Mdp m = twin_mdp();
  Strategy s;
  s.choice.assign(m.state_count(), std::nullopt);
  s.choice[0] = 0;
  s.choice[1] = 1;
  const auto c = induce_chain(m, s);
  StateSet stay(m.state_count());
  stay[0] = stay[1] = true;
  EXPECT_EQ(until_prob(c, 0, stay, goal_of(m)), Rational(3, 4));
  EXPECT_EQ(reach_prob(c, 0, goal_of(m)), Rational(3, 4));
  StateSet only_p(m.state_count());
  only_p[0] = true;
  EXPECT_EQ(until_prob(c, 0, only_p, goal_of(m)), Rational(0));
  // p never picks b, so t1 is out of reach
  StateSet t1(m.state_count());
  t1[2] = true;
  EXPECT_EQ(reach_prob(c, 0, t1), Rational(0));
}

TEST(Solver, CoinVertexValues) {
  const TargetArena a = coin();
  const auto values = vertex_values(a, uniform_family(a));
  EXPECT_EQ(values[a.at("v0")], Rational(1, 2));
  EXPECT_EQ(values[a.at("n0")], Rational(1, 2));
  EXPECT_EQ(values[a.at("t")], Rational(1));
  EXPECT_EQ(values[a.at("f")], Rational(0));
}

TEST(Solver, EndComponentsDoNotInflateValues) {
  // x and y can circle forever; the least fixed point still gives the exit odds
  const auto a = make_arena({"x", "y", "t", "z"}, {"nx", "ny"}, {"t"},
                            {{"x", "nx"}, {"y", "ny"}, {"nx", "y"}, {"ny", "x"}, {"ny", "t"}, {"ny", "z"}});
  const auto values = vertex_values(a, uniform_family(a));
  EXPECT_EQ(values[a.at("x")], Rational(1, 2));
  EXPECT_EQ(values[a.at("y")], Rational(1, 2));
}

TEST(Solver, MatchesStrategyEnumeration) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto a = oracle::random_test_arena(seed, {4, 4, 8});
    const auto mu = random_family(a, 12, seed);
    const Mdp m = instantiate_mdp(a, mu);
    EXPECT_EQ(max_reach_values_exact(m).values, oracle::enumerate_strategies(m)) << seed;
  }
}

TEST(Solver, ValueIterationConvergesFromBelow) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto a = oracle::random_test_arena(seed);
    const auto mu = random_family(a, 10, seed);
    const auto exact = vertex_values(a, mu);
    const auto approx = vertex_values_iterative(a, mu);
    ASSERT_TRUE(approx.converged);
    for (Vertex v = 0; v < a.size(); ++v) {
      EXPECT_NEAR(approx.values[v], to_double(exact[v]), 1e-6) << seed << " " << a.id(v);
      EXPECT_LE(approx.values[v], to_double(exact[v]) + 1e-12);
    }
  }
}

TEST(Solver, ZeroAndAlmostSureSets) {
  const TargetArena a = coin();
  const auto zero = zero_set(a);
  EXPECT_TRUE(zero.test(a.at("f")));
  EXPECT_FALSE(zero.test(a.at("v0")));
  const auto sure = almost_sure_set(a);
  EXPECT_TRUE(sure.test(a.at("t")));
  EXPECT_FALSE(sure.test(a.at("v0")));
  // retrying forever wins almost surely
  const auto retry = make_arena({"v", "t"}, {"n"}, {"t"}, {{"v", "n"}, {"n", "v"}, {"n", "t"}});
  EXPECT_TRUE(almost_sure_set(retry).test(retry.at("v")));
  EXPECT_TRUE(almost_sure_set(retry).test(retry.at("n")));
}

TEST(Solver, AlmostSureSetMatchesValueOne) {
  for (std::uint64_t seed = 100; seed < 160; ++seed) {
    const auto a = oracle::random_test_arena(seed);
    const auto sure = almost_sure_set(a);
    const auto zero = zero_set(a);
    const auto values = vertex_values(a, random_family(a, 9, seed));
    for (Vertex v = 0; v < a.size(); ++v) {
      EXPECT_EQ(sure.test(v), values[v] == 1) << seed << " " << a.id(v);
      EXPECT_EQ(zero.test(v), values[v] == 0) << seed << " " << a.id(v);
    }
  }
}
