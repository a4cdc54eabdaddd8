#pragma once

#include <vector>

#include "nwr/arena.hpp"
#include "nwr/relation.hpp"

namespace nwr {

/// Maximal end components as sets of Protagonist vertices, ordered by smallest
/// member. Protagonist vertices without successors are absorbing in the
/// instantiated MDP and are reported as singleton components.
std::vector<VertexSet> mec_decomposition(const TargetArena& arena);

/// u ⊑ v: every play from u visits v, with targets treated as absorbing.
/// Defined on Protagonist vertices; above[u] lists the v with u ⊑ v.
struct EssentialOrder {
  std::vector<VertexSet> above;

  bool holds(Vertex u, Vertex v) const { return above[u].test(v); }
  /// v is maximal: everything above v is also below it.
  bool essential(Vertex v) const;
};

EssentialOrder essential_order(const TargetArena& arena);

/// Initial relation from end components, the essential order, almost-sure
/// returns to a Protagonist vertex and the extremal-value sets, closed under
/// pseudo transitive closure.
NwrRelation seed_relation(const TargetArena& arena);

}  // namespace nwr
