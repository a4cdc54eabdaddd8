#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nwr/rational.hpp"

namespace nwr {

/// Index of a vertex inside one arena. Indices follow the lexicographic order
/// of vertex ids, so iterating by index is the canonical deterministic order.
using Vertex = std::uint32_t;

/// Subset of an arena's vertices, one bit per vertex index.
using VertexSet = boost::dynamic_bitset<>;

enum class Owner : std::uint8_t { Protagonist, Nature };

struct VertexSpec {
  std::string id;
  Owner owner = Owner::Protagonist;
  bool target = false;

  friend bool operator==(const VertexSpec&, const VertexSpec&) = default;
};

using EdgeSpec = std::pair<std::string, std::string>;

/// Id reserved for the sink state of instantiated MDPs; never a valid vertex id.
inline constexpr std::string_view kSinkId = "⊥";

/// Calls f(i) for every member of s in increasing index order.
template <typename F>
void for_each_member(const VertexSet& s, F&& f) {
  for (auto i = s.find_first(); i != VertexSet::npos; i = s.find_next(i)) f(static_cast<Vertex>(i));
}

std::vector<Vertex> members(const VertexSet& s);

/// Probability-free MDP skeleton: a directed graph with Protagonist/Nature
/// ownership and a target set. The constructor only enforces referential
/// integrity (unique ids, known endpoints); the semantic invariants
/// (bipartiteness, Nature vertices have successors, targets owned by
/// Protagonist) are checked by validate_arena.
class TargetArena {
 public:
  TargetArena() = default;
  TargetArena(std::vector<VertexSpec> vertices, const std::vector<EdgeSpec>& edges);

  std::size_t size() const { return vertices_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  const std::string& id(Vertex v) const { return vertices_[v].id; }
  Owner owner(Vertex v) const { return vertices_[v].owner; }
  bool is_protagonist(Vertex v) const { return vertices_[v].owner == Owner::Protagonist; }
  bool is_nature(Vertex v) const { return vertices_[v].owner == Owner::Nature; }
  bool is_target(Vertex v) const { return vertices_[v].target; }

  std::optional<Vertex> find(std::string_view id) const;
  /// Like find, but throws InputError naming the missing id.
  Vertex at(std::string_view id) const;

  std::span<const Vertex> successors(Vertex v) const { return succ_[v]; }
  std::span<const Vertex> predecessors(Vertex v) const { return pred_[v]; }
  bool has_edge(Vertex from, Vertex to) const;

  VertexSet empty_set() const { return VertexSet(size()); }
  VertexSet full_set() const;
  VertexSet targets() const;
  VertexSet protagonist_vertices() const;
  VertexSet nature_vertices() const;
  VertexSet successor_set(Vertex v) const;
  VertexSet set_of(std::initializer_list<std::string_view> ids) const;

  /// All edges, ordered lexicographically by (source, destination).
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  const std::vector<VertexSpec>& vertex_specs() const { return vertices_; }
  std::vector<EdgeSpec> edge_specs() const;

  TargetArena with_targets(const VertexSet& targets) const;
  TargetArena without_edge(Vertex from, Vertex to) const;

  friend bool operator==(const TargetArena& a, const TargetArena& b) {
    return a.vertices_ == b.vertices_ && a.succ_ == b.succ_;
  }

 private:
  std::vector<VertexSpec> vertices_;
  std::vector<std::vector<Vertex>> succ_;
  std::vector<std::vector<Vertex>> pred_;
  std::map<std::string, Vertex, std::less<>> index_;
  std::size_t edge_count_ = 0;
};

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

ValidationReport validate_arena(const TargetArena& arena);

/// Sparse distribution: (index, probability) pairs sorted by index, all positive.
using Distribution = std::vector<std::pair<std::size_t, Rational>>;

/// One rational distribution per Nature vertex, indexed by arena vertex.
/// Entries of Protagonist vertices are empty.
class DistributionFamily {
 public:
  DistributionFamily() = default;
  explicit DistributionFamily(std::size_t vertex_count) : dist_(vertex_count) {}

  const Distribution& at(Vertex u) const { return dist_[u]; }
  Distribution& at(Vertex u) { return dist_[u]; }
  std::size_t size() const { return dist_.size(); }

  /// Probability assigned to successor v of Nature vertex u (zero if absent).
  Rational probability(Vertex u, Vertex v) const;

  friend bool operator==(const DistributionFamily&, const DistributionFamily&) = default;

 private:
  std::vector<Distribution> dist_;
};

/// Throws InputError naming the first Nature vertex whose distribution is not
/// a full-support distribution over exactly its successor set.
void check_family(const TargetArena& arena, const DistributionFamily& mu);

/// Uniform distribution over every successor set.
DistributionFamily uniform_family(const TargetArena& arena);

/// Random arena over vertices "p0.." (Protagonist) and "n0.." (Nature).
/// Each bipartite edge is present with probability edge_density; Nature
/// vertices left without successors get one uniformly chosen successor.
TargetArena random_arena(std::size_t protagonist_count, std::size_t nature_count, const Rational& edge_density,
                         std::size_t target_count, std::uint64_t seed);

/// Full-support family where every probability is a positive multiple of
/// 1/max_denominator (a uniformly drawn composition of max_denominator).
DistributionFamily random_family(const TargetArena& arena, std::uint64_t max_denominator, std::uint64_t seed);

}  // namespace nwr
