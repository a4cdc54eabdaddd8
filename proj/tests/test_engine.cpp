#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "nwr/engine.hpp"
#include "nwr/exact.hpp"
#include "nwr/structure.hpp"
#include "oracles.hpp"

using namespace nwr;
using namespace nwr::fixtures;

TEST(Engine, BarReachOnLeftTriangle) {
  const TargetArena a = triangle();
  const auto r = saturate(a);
  EXPECT_TRUE(r.equivalent(a.at("p"), a.at("q")));
  EXPECT_TRUE(r.equivalent(a.at("p"), a.at("t")));
  EXPECT_TRUE(r.equivalent(a.at("pa"), a.at("t")));
}

TEST(Engine, BarWinOnRightGadget) {
  const TargetArena a = relay();
  const auto r = saturate(a);
  EXPECT_TRUE(r.below(a.at("t"), a.at("p")));
}

TEST(Engine, BarReachNeedsEveryPathBlocked) {
  const TargetArena a = coin();
  const auto r = seed_relation(a);
  const auto id = *r.find_set(a.set_of({"n0"}));
  EXPECT_TRUE(rule_bar_reach(a, r, a.at("v0"), id));
  EXPECT_FALSE(rule_bar_reach(a, r, a.at("t"), id));
}

TEST(Engine, NatureWithEquivalentSuccessors) {
  const auto a = make_arena({"x", "y", "t"}, {"n", "nx", "ny"}, {"t"},
                            {{"x", "nx"}, {"y", "ny"}, {"nx", "t"}, {"ny", "t"}, {"n", "x"}, {"n", "y"}});
  auto r = seed_relation(a);
  r.add(a.at("x"), r.singleton(a.at("y")));
  r.add(a.at("y"), r.singleton(a.at("x")));
  const auto out = rule_nature_equiv(a, r, a.at("n"));
  EXPECT_FALSE(out.empty());
}

TEST(Engine, ProtagonistDominance) {
  // u can only pick a coin that is never better than v's sure win
  const auto a = make_arena({"u", "v", "t", "f"}, {"nu", "nv"}, {"t"},
                            {{"u", "nu"}, {"v", "nv"}, {"nu", "t"}, {"nu", "f"}, {"nv", "t"}});
  const auto r = saturate(a);
  EXPECT_TRUE(r.below(a.at("u"), a.at("v")));
  EXPECT_FALSE(r.below(a.at("v"), a.at("u")));
}

TEST(Engine, ThreadCountDoesNotChangeResult) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto a = oracle::random_test_arena(seed);
    SaturateStats one, four;
    const auto r1 = saturate(a, {1}, &one);
    const auto r4 = saturate(a, {4}, &four);
    EXPECT_EQ(r1, r4) << seed;
    EXPECT_EQ(one.rounds, four.rounds);
    EXPECT_EQ(one.pairs, r1.pair_count());
  }
}

TEST(Engine, SaturationIsSoundOnSmallArenas) {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    const auto a = oracle::random_test_arena(seed, {4, 3, 7});
    const auto r = saturate(a);
    for (const auto& [v, w] : r.pairs()) {
      if (r.set(w).test(v)) continue;
      EXPECT_FALSE(oracle::brute_force_refutes(a, v, r.set(w))) << seed << " " << a.id(v);
    }
  }
}

TEST(Engine, SaturationIsAFixpoint) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto a = oracle::random_test_arena(seed);
    const auto r = saturate(a);
    for (SetId w = 0; w < r.universe_size(); ++w) {
      for (Vertex v : bar_reach_all(a, r, w)) EXPECT_TRUE(r.contains(v, w)) << seed;
    }
    for (Vertex x = 0; x < a.size(); ++x) {
      for (Vertex v : rule_bar_win(a, r, x)) EXPECT_TRUE(r.below(x, v)) << seed;
    }
  }
}
