#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "nwr/arena.hpp"

namespace nwr {

using SetId = std::size_t;

/// Sound under-approximation of the never-worse relation, restricted to the
/// candidate sets of one arena: every singleton, every successor set vE and
/// every vE\{x} (empty sets excluded). Pairs are stored closed upward inside
/// the universe, so entails() is a bit test for universe sets.
class NwrRelation {
 public:
  NwrRelation() = default;
  explicit NwrRelation(const TargetArena& arena);

  std::size_t vertex_count() const { return rows_.size(); }
  std::size_t universe_size() const { return universe_.size(); }
  const VertexSet& set(SetId id) const { return universe_[id]; }
  std::optional<SetId> find_set(const VertexSet& w) const;
  SetId singleton(Vertex v) const { return singleton_[v]; }

  bool contains(Vertex v, SetId w) const { return rows_[v].test(w); }
  /// v is related to W itself or to a stored subset of W. Works for any W.
  bool entails(Vertex v, const VertexSet& w) const;
  bool below(Vertex v, Vertex w) const { return rows_[v].test(singleton_[w]); }
  bool equivalent(Vertex v, Vertex w) const { return below(v, w) && below(w, v); }

  /// Adds v ⪯ W together with v ⪯ X for every universe superset X of W.
  /// Throws InputError if W is not a candidate set. Returns true if anything
  /// new was stored.
  bool add(Vertex v, const VertexSet& w);
  bool add(Vertex v, SetId w);

  /// Pseudo transitive closure within the universe.
  void close();

  std::size_t pair_count() const;
  /// Stored pairs ordered by (v, set id).
  std::vector<std::pair<Vertex, SetId>> pairs() const;

  /// Classes of mutual singleton relation, each sorted, ordered by smallest member.
  std::vector<std::vector<Vertex>> equivalence_classes() const;

  friend bool operator==(const NwrRelation& a, const NwrRelation& b) {
    return a.universe_ == b.universe_ && a.rows_ == b.rows_;
  }

 private:
  std::vector<VertexSet> universe_;
  std::map<VertexSet, SetId> index_;
  std::vector<SetId> singleton_;
  std::vector<std::vector<SetId>> supersets_;  // includes the set itself
  std::vector<boost::dynamic_bitset<>> rows_;  // per vertex, over set ids
};

}  // namespace nwr
