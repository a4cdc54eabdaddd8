#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "nwr/arena.hpp"
#include "nwr/engine.hpp"
#include "nwr/relation.hpp"

namespace nwr {

/// Arena with proven-equivalent same-owner vertices collapsed. A class is
/// named after its smallest member.
struct Quotient {
  TargetArena arena;
  std::vector<std::string> class_of;  // original vertex -> class id
  std::vector<Vertex> dropped;         // original Nature vertices whose class lost all in-edges

  bool is_dropped(Vertex v) const;
};

Quotient quotient(const TargetArena& arena, const NwrRelation& r);

/// Family on q.arena: each class member's distribution summed per successor
/// class; merged Nature classes take the average over their members.
DistributionFamily lift_family(const TargetArena& arena, const DistributionFamily& mu, const Quotient& q);

struct RemovedEdge {
  std::string from;
  std::string to;
  std::vector<std::string> dominated_by;  // the set the Nature vertex is never worse than
};

struct TrimResult {
  TargetArena arena;
  std::vector<RemovedEdge> removed;
};

/// Removes dominated Protagonist→Nature edges one at a time in (w, x) order.
/// Throws InputError unless quotienting a by r leaves it unchanged.
TrimResult trim_edges(const TargetArena& arena, const NwrRelation& r);

struct ReductionReport {
  std::size_t original_vertices = 0;
  std::size_t original_edges = 0;
  std::size_t reduced_vertices = 0;
  std::size_t reduced_edges = 0;
  std::vector<std::pair<std::string, std::string>> class_of;  // (original id, final class id), arena order
  std::vector<std::string> dropped;
  std::vector<RemovedEdge> removed;
  std::size_t rounds = 0;

  /// Classes with at least two original members.
  std::size_t merged_classes() const;
};

struct ReductionResult {
  TargetArena arena;
  ReductionReport report;
};

ReductionResult reduce_fixpoint(const TargetArena& arena, const SaturateOptions& options = {});

}  // namespace nwr
