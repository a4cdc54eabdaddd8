#include "nwr/mdp.hpp"

#include <algorithm>

#include "nwr/error.hpp"

namespace nwr {

const EnabledAction* Mdp::find_enabled(StateIndex s, ActionIndex a) const {
  auto it = std::lower_bound(enabled[s].begin(), enabled[s].end(), a,
                             [](const EnabledAction& e, ActionIndex x) { return e.action < x; });
  if (it == enabled[s].end() || it->action != a) return nullptr;
  return &*it;
}

Distribution Mdp::transition(StateIndex s, ActionIndex a) const {
  if (const auto* e = find_enabled(s, a)) return e->distribution;
  return {{sink.value_or(s), Rational(1)}};
}

std::optional<StateIndex> Mdp::find_state(std::string_view id) const {
  auto it = std::find(states.begin(), states.end(), id);
  if (it == states.end()) return std::nullopt;
  return static_cast<StateIndex>(it - states.begin());
}

std::optional<StateIndex> MarkovChain::find_state(std::string_view id) const {
  auto it = std::find(states.begin(), states.end(), id);
  if (it == states.end()) return std::nullopt;
  return static_cast<StateIndex>(it - states.begin());
}

void check_mdp(const Mdp& m) {
  const auto n = m.state_count();
  if (m.enabled.size() != n || m.target.size() != n) throw InputError("MDP tables disagree on the state count");
  for (StateIndex s = 0; s < n; ++s) {
    for (const auto& e : m.enabled[s]) {
      if (e.action >= m.actions.size()) throw InputError("state " + m.states[s] + " uses an unknown action");
      Rational total = 0;
      for (const auto& [q, p] : e.distribution) {
        if (q >= n || p < 0 || p > 1) {
          throw InputError("bad transition at (" + m.states[s] + "," + m.actions[e.action] + ")");
        }
        total += p;
      }
      if (total != 1) {
        throw InputError("transition (" + m.states[s] + "," + m.actions[e.action] + ") does not sum to 1");
      }
    }
  }
}

std::vector<std::optional<StateIndex>> state_of_vertex(const TargetArena& arena) {
  std::vector<std::optional<StateIndex>> out(arena.size());
  StateIndex next = 0;
  for (Vertex v = 0; v < arena.size(); ++v) {
    if (arena.is_protagonist(v)) out[v] = next++;
  }
  return out;
}

Mdp instantiate_mdp(const TargetArena& arena, const DistributionFamily& mu) {
  check_family(arena, mu);
  const auto state_of = state_of_vertex(arena);
  std::vector<std::optional<ActionIndex>> action_of(arena.size());

  Mdp m;
  for (Vertex v = 0; v < arena.size(); ++v) {
    if (arena.is_protagonist(v)) {
      m.states.push_back(arena.id(v));
      m.target.push_back(arena.is_target(v));
    } else {
      action_of[v] = m.actions.size();
      m.actions.push_back(arena.id(v));
    }
  }
  m.sink = m.states.size();
  m.states.emplace_back(kSinkId);
  m.target.push_back(false);
  m.enabled.resize(m.states.size());

  for (Vertex p = 0; p < arena.size(); ++p) {
    if (!arena.is_protagonist(p)) continue;
    for (Vertex a : arena.successors(p)) {
      if (!action_of[a]) throw InputError("edge (" + arena.id(p) + "," + arena.id(a) + ") is not bipartite");
      EnabledAction e{*action_of[a], {}};
      for (const auto& [q, prob] : mu.at(a)) {
        if (!state_of[q]) throw InputError("edge (" + arena.id(a) + "," + arena.id(q) + ") is not bipartite");
        e.distribution.emplace_back(*state_of[q], prob);
      }
      m.enabled[*state_of[p]].push_back(std::move(e));
    }
  }
  return m;
}

MarkovChain induce_chain(const Mdp& m, const Strategy& s) {
  if (s.choice.size() != m.state_count()) throw InputError("strategy does not cover the MDP's states");
  MarkovChain c;
  c.states = m.states;
  c.transition.resize(m.state_count());
  for (StateIndex q = 0; q < m.state_count(); ++q) {
    if (!s.choice[q]) {
      if (!m.enabled[q].empty() && !m.target[q]) throw InputError("strategy makes no choice at state " + m.states[q]);
      c.transition[q] = {{q, Rational(1)}};
      continue;
    }
    const auto* e = *s.choice[q] < m.actions.size() ? m.find_enabled(q, *s.choice[q]) : nullptr;
    if (!e) throw InputError("strategy picks an action that is undefined at state " + m.states[q]);
    c.transition[q] = e->distribution;
  }
  return c;
}

}  // namespace nwr
