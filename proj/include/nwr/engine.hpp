#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "nwr/arena.hpp"
#include "nwr/relation.hpp"

namespace nwr {

/// A derived pair v ⪯ W, W given by its candidate-set id.
using Emission = std::pair<Vertex, SetId>;

/// v0 ⪯ W when every path from v0 to T meets S = {s : s ⪯ W}.
bool rule_bar_reach(const TargetArena& arena, const NwrRelation& r, Vertex v0, SetId w);
/// All v0 that rule_bar_reach accepts for W, from one backward search.
std::vector<Vertex> bar_reach_all(const TargetArena& arena, const NwrRelation& r, SetId w);

/// w ⪯ {v0} for every v0 that wins almost surely towards
/// T ∪ {s ∈ V_P : w ⪯ {s}}. Returns the v0 found.
std::vector<Vertex> rule_bar_win(const TargetArena& arena, const NwrRelation& r, Vertex w);

/// When all successors of Nature vertex u are pairwise equivalent, u is
/// equivalent to each of them.
std::vector<Emission> rule_nature_equiv(const TargetArena& arena, const NwrRelation& r, Vertex u);

/// u ⪯ {v} for non-target Protagonist u, v when the successors of u that
/// survive sequential elimination of dominated ones are all below vE.
bool rule_prot_dominance(const TargetArena& arena, const NwrRelation& r, Vertex u, Vertex v);

struct SaturateOptions {
  unsigned threads = 1;
};

struct SaturateStats {
  std::size_t rounds = 0;
  std::size_t pairs = 0;
};

NwrRelation saturate(const TargetArena& arena, const SaturateOptions& options = {}, SaturateStats* stats = nullptr);

}  // namespace nwr
