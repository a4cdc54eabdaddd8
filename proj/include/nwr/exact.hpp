#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "nwr/arena.hpp"

namespace nwr {

/// Ordered layering of the vertices, bottom layer first.
using Layers = std::vector<std::vector<Vertex>>;

/// True iff Protagonist vertices never point to a higher layer and every
/// Nature vertex pointing up sits strictly between bottom and top and also
/// points down. Throws InputError when the layers do not partition V into
/// non-empty sets.
bool verify_drift_partition(const TargetArena& arena, const Layers& layers);

/// Drift vertices of a verified partition, with their layer.
std::vector<std::pair<Vertex, std::size_t>> drift_vertices(const TargetArena& arena, const Layers& layers);

struct NwrCertificate {
  Layers layers;
  std::vector<Vertex> path;
  Vertex v = 0;
  VertexSet w;
};

/// The partition verifies, the path is a simple v→T path inside the top
/// layer, every target sits in the top layer, and W lies below it.
bool verify_certificate(const TargetArena& arena, const NwrCertificate& c);

struct NwrDecision {
  bool holds = true;
  std::optional<NwrCertificate> certificate;
};

inline constexpr std::size_t kDefaultExactLimit = 10;

/// Exact decision of v ⊴ W. Throws SizeLimitError when |V| exceeds limit.
NwrDecision decide_nwr(const TargetArena& arena, Vertex v, const VertexSet& w,
                       std::size_t limit = kDefaultExactLimit);

/// Largest admissible epsilon is below 1 - 2^(-1/n); this returns a rational
/// strictly inside that range.
Rational default_epsilon(std::size_t vertex_count);

/// Family that follows the certificate's path and pushes drift vertices down
/// with probability 1-eps. Throws InputError if eps is out of range or the
/// certificate does not verify.
DistributionFamily epsilon_witness(const TargetArena& arena, const NwrCertificate& c, const Rational& eps);

/// Samples random families; returns the first with Val(v) > max Val(W).
std::optional<DistributionFamily> sample_falsify(const TargetArena& arena, Vertex v, const VertexSet& w,
                                                 std::size_t trials, std::uint64_t max_denominator,
                                                 std::uint64_t seed);

/// Directed graph for the two-disjoint-paths reduction.
struct Digraph {
  std::vector<std::string> names;
  std::vector<std::vector<std::size_t>> succ;

  std::size_t size() const { return names.size(); }
  std::size_t find(std::string_view name) const;  // throws InputError
};

struct TwoPathsQuery {
  TargetArena arena;
  Vertex v = 0;
  VertexSet w;
};

/// Arena in which v ⊴ W fails iff g has vertex-disjoint s1→t1 and s2→t2 paths.
TwoPathsQuery reduce_2dp(const Digraph& g, std::size_t s1, std::size_t t1, std::size_t s2, std::size_t t2);

inline constexpr std::size_t kTwoPathsOracleLimit = 12;

/// Exhaustive search for vertex-disjoint s1→t1 and s2→t2 paths.
bool solve_2dp_oracle(const Digraph& g, std::size_t s1, std::size_t t1, std::size_t s2, std::size_t t2);

}  // namespace nwr
