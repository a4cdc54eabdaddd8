#pragma once

#include <string>
#include <vector>

#include "nwr/arena.hpp"
#include "nwr/mdp.hpp"

namespace nwr::fixtures {

inline TargetArena make_arena(const std::vector<std::string>& protagonist, const std::vector<std::string>& nature,
                              const std::vector<std::string>& targets, const std::vector<EdgeSpec>& edges) {
  std::vector<VertexSpec> specs;
  for (const auto& id : protagonist) {
    const bool target = std::find(targets.begin(), targets.end(), id) != targets.end();
    specs.push_back({id, Owner::Protagonist, target});
  }
  for (const auto& id : nature) specs.push_back({id, Owner::Nature, false});
  return TargetArena(std::move(specs), edges);
}

inline DistributionFamily make_family(const TargetArena& arena,
                                      const std::vector<std::pair<std::string, std::vector<std::pair<std::string, Rational>>>>& rows) {
  DistributionFamily mu(arena.size());
  for (const auto& [u, dist] : rows) {
    for (const auto& [v, p] : dist) mu.at(arena.at(u)).emplace_back(arena.at(v), p);
    std::sort(mu.at(arena.at(u)).begin(), mu.at(arena.at(u)).end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
  }
  return mu;
}

// v0 flips a coin between the target t and the dead end f.
inline TargetArena coin() {
  return make_arena({"v0", "t", "f"}, {"n0"}, {"t"}, {{"v0", "n0"}, {"n0", "t"}, {"n0", "f"}});
}

// Two MDP states p, q with actions a, b; targets t1, t2.
inline TargetArena twin_arena() {
  return make_arena({"p", "q", "t1", "s1", "s2", "t2"}, {"pa", "pb", "qa", "qb"}, {"t1", "t2"},
                    {{"p", "pa"}, {"p", "pb"}, {"q", "qa"}, {"q", "qb"},
                     {"pa", "p"}, {"pa", "q"}, {"pb", "t1"}, {"pb", "s1"},
                     {"qa", "p"}, {"qa", "q"}, {"qb", "s2"}, {"qb", "t2"}});
}

inline DistributionFamily twin_family(const TargetArena& a) {
  return make_family(a, {{"pa", {{"p", Rational(1, 2)}, {"q", Rational(1, 2)}}},
                         {"pb", {{"t1", Rational(1, 4)}, {"s1", Rational(3, 4)}}},
                         {"qa", {{"p", Rational(1, 2)}, {"q", Rational(1, 2)}}},
                         {"qb", {{"s2", Rational(1, 4)}, {"t2", Rational(3, 4)}}}});
}

// The two-state MDP itself, with the remaining four states absorbing.
inline Mdp twin_mdp() {
  Mdp m;
  m.states = {"p", "q", "t1", "s1", "s2", "t2"};
  m.actions = {"a", "b"};
  m.target = {false, false, true, false, false, true};
  m.enabled.resize(6);
  m.enabled[0] = {{0, {{0, Rational(1, 2)}, {1, Rational(1, 2)}}}, {1, {{2, Rational(1, 4)}, {3, Rational(3, 4)}}}};
  m.enabled[1] = {{0, {{0, Rational(1, 2)}, {1, Rational(1, 2)}}}, {1, {{4, Rational(1, 4)}, {5, Rational(3, 4)}}}};
  return m;
}

inline TargetArena triangle() {
  return make_arena({"p", "q", "t", "fin", "fail"}, {"pa", "qa", "ta", "tb"}, {"fin"},
                    {{"p", "pa"}, {"q", "qa"}, {"t", "ta"}, {"t", "tb"},
                     {"pa", "t"}, {"pa", "q"}, {"qa", "t"}, {"qa", "p"},
                     {"ta", "fin"}, {"ta", "fail"}, {"tb", "fin"}, {"tb", "fail"}});
}

inline TargetArena relay() {
  return make_arena({"s", "p", "q", "t", "fin", "fail"}, {"sa", "sb", "pa", "qa", "ta"}, {"fin"},
                    {{"s", "sa"}, {"s", "sb"}, {"sa", "p"}, {"sb", "t"},
                     {"p", "pa"}, {"pa", "q"}, {"pa", "t"},
                     {"q", "qa"}, {"qa", "fin"}, {"qa", "t"},
                     {"t", "ta"}, {"ta", "fail"}, {"ta", "q"}});
}

inline TargetArena detour() {
  return make_arena({"p", "q", "x1", "x2", "x3", "fin", "fail"}, {"u", "v", "z"}, {"fin"},
                    {{"p", "u"}, {"p", "v"}, {"p", "z"}, {"q", "v"}, {"q", "z"},
                     {"u", "fail"}, {"u", "x1"}, {"x1", "z"},
                     {"v", "fin"}, {"v", "x2"}, {"v", "x3"}, {"x2", "u"}, {"x3", "z"},
                     {"z", "fin"}, {"z", "fail"}});
}

inline TargetArena shortcut() {
  return make_arena({"p", "q", "y1", "y2", "fin", "fail"}, {"u", "v", "x", "z"}, {"fin"},
                    {{"p", "u"}, {"p", "v"}, {"p", "x"}, {"q", "x"}, {"q", "z"},
                     {"u", "y1"}, {"u", "fin"}, {"y1", "v"},
                     {"v", "fin"}, {"v", "fail"}, {"x", "fin"}, {"x", "fail"},
                     {"z", "y2"}, {"z", "fail"}, {"y2", "x"}});
}

// Symmetric game of p and q, each picking which of s or t to risk next;
// s and t are completed with a Nature choice between fin and fail.
inline TargetArena duel(bool t_always_wins = false) {
  std::vector<EdgeSpec> edges = {{"p", "pa"}, {"p", "pb"}, {"q", "qa"}, {"q", "qb"},
                                 {"pa", "q"}, {"pa", "t"}, {"pb", "q"}, {"pb", "s"},
                                 {"qa", "p"}, {"qa", "s"}, {"qb", "p"}, {"qb", "t"},
                                 {"s", "ns"}, {"t", "nt"}, {"ns", "fin"}, {"ns", "fail"}, {"nt", "fin"}};
  if (!t_always_wins) edges.emplace_back("nt", "fail");
  return make_arena({"p", "q", "s", "t", "fin", "fail"}, {"pa", "pb", "qa", "qb", "ns", "nt"}, {"fin"}, edges);
}

}  // namespace nwr::fixtures
