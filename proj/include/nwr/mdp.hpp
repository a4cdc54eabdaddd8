#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nwr/arena.hpp"

namespace nwr {

using StateIndex = std::size_t;
using ActionIndex = std::size_t;

struct EnabledAction {
  ActionIndex action;
  Distribution distribution;  // over state indices
};

/// Finite MDP with explicit targets. Only enabled (state, action) pairs are
/// stored; every other pair moves to the sink if there is one and stays put
/// otherwise. Action indices double as the tie-breaking order.
struct Mdp {
  std::vector<std::string> states;
  std::vector<std::string> actions;
  std::vector<std::vector<EnabledAction>> enabled;  // per state, sorted by action
  std::vector<bool> target;
  std::optional<StateIndex> sink;

  std::size_t state_count() const { return states.size(); }
  const EnabledAction* find_enabled(StateIndex s, ActionIndex a) const;
  Distribution transition(StateIndex s, ActionIndex a) const;
  std::optional<StateIndex> find_state(std::string_view id) const;
};

/// Throws InputError unless every stored row is a distribution summing to 1
/// over valid state indices.
void check_mdp(const Mdp& m);

struct MarkovChain {
  std::vector<std::string> states;
  std::vector<Distribution> transition;

  std::size_t state_count() const { return states.size(); }
  std::optional<StateIndex> find_state(std::string_view id) const;
};

/// Memoryless deterministic strategy; nullopt where no choice is made.
struct Strategy {
  std::vector<std::optional<ActionIndex>> choice;
};

/// States are the Protagonist vertices in arena order followed by the sink
/// (id kSinkId); actions are the Nature vertices in arena order.
Mdp instantiate_mdp(const TargetArena& arena, const DistributionFamily& mu);

/// State of vertex v in instantiate_mdp's numbering.
std::vector<std::optional<StateIndex>> state_of_vertex(const TargetArena& arena);

/// States without a choice keep a self-loop. Throws InputError if the strategy
/// skips a non-target state that has enabled actions, or picks a disabled one.
MarkovChain induce_chain(const Mdp& m, const Strategy& s);

}  // namespace nwr
