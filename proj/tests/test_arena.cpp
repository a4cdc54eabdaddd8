#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "nwr/arena.hpp"
#include "nwr/error.hpp"
#include "nwr/mdp.hpp"
#include "nwr/rational.hpp"

using namespace nwr;
using namespace nwr::fixtures;

TEST(Rational, ParsesAndFormats) {
  EXPECT_EQ(parse_rational("2/4"), Rational(1, 2));
  EXPECT_EQ(parse_rational("3"), Rational(3));
  EXPECT_EQ(format_rational(Rational(6, 8)), "3/4");
  EXPECT_EQ(format_rational(Rational(1)), "1/1");
  EXPECT_EQ(format_rational(Rational(0)), "0/1");
  EXPECT_THROW(parse_rational("1/0"), InputError);
  EXPECT_THROW(parse_rational("0.5"), InputError);
  EXPECT_THROW(parse_rational(""), InputError);
  EXPECT_EQ(pow(Rational(1, 2), 3), Rational(1, 8));
}

TEST(Arena, IndicesFollowIdOrder) {
  const TargetArena a = coin();
  EXPECT_EQ(a.size(), 4u);
  EXPECT_EQ(a.id(0), "f");
  EXPECT_EQ(a.id(1), "n0");
  EXPECT_EQ(a.id(2), "t");
  EXPECT_EQ(a.id(3), "v0");
  EXPECT_TRUE(a.is_target(a.at("t")));
  EXPECT_TRUE(a.is_nature(a.at("n0")));
  EXPECT_EQ(a.edge_count(), 3u);
  EXPECT_TRUE(a.has_edge(a.at("n0"), a.at("f")));
  EXPECT_FALSE(a.has_edge(a.at("f"), a.at("n0")));
  EXPECT_THROW(a.at("zz"), InputError);
}

TEST(Arena, DuplicateEdgesCollapse) {
  const auto a = make_arena({"a", "b"}, {"n"}, {"b"}, {{"a", "n"}, {"a", "n"}, {"n", "b"}});
  EXPECT_EQ(a.edge_count(), 2u);
}

TEST(Arena, RejectsUnknownEndpointAndDuplicateId) {
  EXPECT_THROW(make_arena({"a"}, {}, {}, {{"a", "b"}}), InputError);
  EXPECT_THROW(make_arena({"a", "a"}, {}, {}, {}), InputError);
}

TEST(Arena, ValidateReportsEveryViolation) {
  std::vector<VertexSpec> specs = {{"a", Owner::Protagonist, false},
                                   {"b", Owner::Protagonist, false},
                                   {"n", Owner::Nature, true},
                                   {"m", Owner::Nature, false}};
  const TargetArena a(specs, {{"a", "b"}, {"a", "n"}, {"n", "b"}});
  const auto report = validate_arena(a);
  ASSERT_EQ(report.violations.size(), 3u);
  EXPECT_TRUE(validate_arena(coin()).ok());
}

TEST(Arena, WithoutEdgeAndWithTargets) {
  const TargetArena a = coin();
  const auto b = a.without_edge(a.at("n0"), a.at("f"));
  EXPECT_EQ(b.edge_count(), 2u);
  EXPECT_FALSE(b.has_edge(b.at("n0"), b.at("f")));
  const auto c = a.with_targets(a.set_of({"f"}));
  EXPECT_TRUE(c.is_target(c.at("f")));
  EXPECT_FALSE(c.is_target(c.at("t")));
}

TEST(Family, UniformAndChecks) {
  const TargetArena a = coin();
  const auto mu = uniform_family(a);
  EXPECT_EQ(mu.probability(a.at("n0"), a.at("t")), Rational(1, 2));
  EXPECT_NO_THROW(check_family(a, mu));
  auto bad = mu;
  bad.at(a.at("n0")).pop_back();
  EXPECT_THROW(check_family(a, bad), InputError);
  auto zero = make_family(a, {{"n0", {{"t", Rational(1)}, {"f", Rational(0)}}}});
  EXPECT_THROW(check_family(a, zero), InputError);
}

TEST(Random, ArenaIsValidAndReproducible) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto a = random_arena(5, 4, Rational(1, 3), 2, seed);
    EXPECT_TRUE(validate_arena(a).ok()) << seed;
    EXPECT_EQ(a.targets().count(), 2u);
    EXPECT_EQ(a, random_arena(5, 4, Rational(1, 3), 2, seed));
  }
}

TEST(Random, FamilyHasGridFullSupport) {
  const auto a = random_arena(4, 4, Rational(2, 3), 1, 7);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto mu = random_family(a, 20, seed);
    EXPECT_NO_THROW(check_family(a, mu));
    for (Vertex u = 0; u < a.size(); ++u) {
      for (const auto& [v, p] : mu.at(u)) EXPECT_EQ(Rational(p * 20).get_den(), 1);
    }
  }
}

TEST(Mdp, InstantiationAddsSinkForDisabledPairs) {
  const TargetArena a = twin_arena();
  const Mdp m = instantiate_mdp(a, twin_family(a));
  EXPECT_EQ(m.state_count(), 7u);
  ASSERT_TRUE(m.sink.has_value());
  EXPECT_EQ(m.states[*m.sink], std::string(kSinkId));
  EXPECT_EQ(m.actions.size(), 4u);
  const auto p = *m.find_state("p");
  EXPECT_EQ(m.enabled[p].size(), 2u);
  // a disabled pair lands on the sink with probability one
  const auto qa = std::find(m.actions.begin(), m.actions.end(), "qa") - m.actions.begin();
  const auto d = m.transition(p, qa);
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d[0].first, *m.sink);
  EXPECT_NO_THROW(check_mdp(m));
}

TEST(Mdp, InduceChainRejectsBadStrategies) {
  const Mdp m = twin_mdp();
  Strategy s;
  s.choice.assign(m.state_count(), std::nullopt);
  EXPECT_THROW(induce_chain(m, s), InputError);
  s.choice[0] = 0;
  s.choice[1] = 1;
  const auto c = induce_chain(m, s);
  EXPECT_EQ(c.transition[2].size(), 1u);
  EXPECT_EQ(c.transition[2][0].first, 2u);
}
