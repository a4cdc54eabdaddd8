#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "nwr/relation.hpp"
#include "nwr/structure.hpp"
#include "oracles.hpp"

using namespace nwr;
using namespace nwr::fixtures;

TEST(Mec, RetryLoopIsOneComponent) {
  const auto a = make_arena({"x", "y", "t"}, {"nx", "ny"}, {"t"},
                            {{"x", "nx"}, {"y", "ny"}, {"nx", "y"}, {"ny", "x"}, {"ny", "t"}});
  const auto mecs = mec_decomposition(a);
  // x, y leak to t through ny, so only the sink t remains
  ASSERT_EQ(mecs.size(), 1u);
  EXPECT_EQ(mecs[0], a.set_of({"t"}));
}

TEST(Mec, ClosedCycleAndSinks) {
  const auto a = make_arena({"x", "y", "t"}, {"nx", "ny", "nz"}, {"t"},
                            {{"x", "nx"}, {"x", "nz"}, {"y", "ny"}, {"nx", "y"}, {"ny", "x"}, {"nz", "t"}});
  const auto mecs = mec_decomposition(a);
  ASSERT_EQ(mecs.size(), 2u);
  EXPECT_EQ(mecs[0], a.set_of({"t"}));
  EXPECT_EQ(mecs[1], a.set_of({"x", "y"}));
}

TEST(Mec, ComponentsAreClosedAndDisjoint) {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const auto a = oracle::random_test_arena(seed);
    VertexSet seen(a.size());
    for (const auto& c : mec_decomposition(a)) {
      EXPECT_FALSE(seen.intersects(c)) << seed;
      seen |= c;
      // every member can stay: some Nature successor keeps all its successors inside
      for_each_member(c, [&](Vertex x) {
        if (a.successors(x).empty()) return;
        bool stays = false;
        for (Vertex u : a.successors(x)) {
          bool inside = true;
          for (Vertex y : a.successors(u)) inside = inside && c.test(y);
          stays = stays || inside;
        }
        EXPECT_TRUE(stays) << seed << " " << a.id(x);
      });
    }
  }
}

TEST(Essential, ChainThroughGate) {
  // every play from a passes g before reaching anything else
  const auto a = make_arena({"a", "g", "t", "z"}, {"na", "ng"}, {"t"},
                            {{"a", "na"}, {"na", "g"}, {"g", "ng"}, {"ng", "t"}, {"ng", "z"}});
  const auto order = essential_order(a);
  EXPECT_TRUE(order.holds(a.at("a"), a.at("g")));
  EXPECT_TRUE(order.holds(a.at("a"), a.at("a")));
  EXPECT_FALSE(order.holds(a.at("g"), a.at("a")));
  EXPECT_FALSE(order.holds(a.at("a"), a.at("t")));
}

TEST(Relation, UniverseAndUpwardClosure) {
  const TargetArena a = triangle();
  NwrRelation r(a);
  const Vertex p = a.at("p"), t = a.at("t");
  EXPECT_EQ(r.set(r.singleton(p)), a.set_of({"p"}));
  EXPECT_TRUE(r.find_set(a.set_of({"fin", "fail"})).has_value());
  EXPECT_FALSE(r.find_set(a.set_of({"p", "fail"})).has_value());
  EXPECT_TRUE(r.add(p, a.set_of({"t"})));
  EXPECT_FALSE(r.add(p, a.set_of({"t"})));
  EXPECT_TRUE(r.below(p, t));
  EXPECT_TRUE(r.entails(p, a.set_of({"t", "q"})));
  EXPECT_TRUE(r.entails(p, a.set_of({"t", "fail", "p"})));
  EXPECT_FALSE(r.entails(t, a.set_of({"q"})));
  EXPECT_THROW(r.add(p, a.set_of({"p", "fail"})), InputError);
}

TEST(Relation, CloseMatchesExplicitClosure) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto a = oracle::random_test_arena(seed, {4, 4, 8});
    NwrRelation r(a);
    std::vector<VertexSet> universe;
    for (SetId i = 0; i < r.universe_size(); ++i) universe.push_back(r.set(i));
    Rng rng(seed);
    std::set<oracle::Pair> pairs;
    for (int k = 0; k < 6; ++k) {
      const Vertex v = static_cast<Vertex>(rng.below(a.size()));
      const SetId w = rng.below(r.universe_size());
      r.add(v, w);
      pairs.emplace(v, r.set(w));
    }
    r.close();
    const auto expected = oracle::explicit_closure(pairs, universe, a.size());
    for (Vertex v = 0; v < a.size(); ++v) {
      for (SetId w = 0; w < r.universe_size(); ++w) {
        EXPECT_EQ(r.entails(v, r.set(w)), oracle::explicit_entails(expected, v, r.set(w))) << seed;
      }
    }
  }
}

TEST(Seed, ExtremalValueSets) {
  const TargetArena a = coin();
  const auto r = seed_relation(a);
  // f can never reach the target, so it is below everything
  EXPECT_TRUE(r.below(a.at("f"), a.at("v0")));
  EXPECT_TRUE(r.below(a.at("f"), a.at("n0")));
  // t wins surely, so everything is below it
  EXPECT_TRUE(r.below(a.at("v0"), a.at("t")));
  EXPECT_FALSE(r.below(a.at("t"), a.at("v0")));
}

TEST(Seed, EndComponentIsOneClass) {
  const auto a = make_arena({"x", "y", "t"}, {"nx", "ny", "nz"}, {"t"},
                            {{"x", "nx"}, {"x", "nz"}, {"y", "ny"}, {"y", "nz"}, {"nx", "y"}, {"ny", "x"}, {"nz", "t"}, {"nz", "y"}});
  const auto r = seed_relation(a);
  EXPECT_TRUE(r.equivalent(a.at("x"), a.at("y")));
}
