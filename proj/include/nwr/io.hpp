#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "nwr/arena.hpp"
#include "nwr/exact.hpp"
#include "nwr/reducer.hpp"
#include "nwr/relation.hpp"
#include "nwr/solver.hpp"

namespace nwr {

enum class ParseMode {
  Strict,   // also rejects arenas that fail validate_arena
  Lenient,  // only referential checks, so validate can report violations
};

TargetArena parse_arena(std::string_view text, ParseMode mode = ParseMode::Strict);
std::string serialize_arena(const TargetArena& arena);

DistributionFamily parse_family(const TargetArena& arena, std::string_view text);
std::string serialize_family(const TargetArena& arena, const DistributionFamily& mu);

std::string serialize_values(const TargetArena& arena, const std::vector<Rational>& values);
std::string serialize_values(const TargetArena& arena, const IterativeValues& values);

/// Pairs v ⪯ W with v ∉ W; the pairs with v ∈ W hold trivially and are omitted.
std::string serialize_relation(const TargetArena& arena, const NwrRelation& r);
std::string serialize_classes(const TargetArena& arena, const std::vector<std::vector<Vertex>>& classes);
std::string serialize_sets(const TargetArena& arena, const std::vector<VertexSet>& sets);

NwrCertificate parse_certificate(const TargetArena& arena, std::string_view text);
std::string serialize_certificate(const TargetArena& arena, const NwrCertificate& c);

std::string serialize_report(const ReductionReport& report);

/// {"vertices":["a",...],"edges":[["a","b"],...]}
Digraph parse_graph(std::string_view text);
std::string serialize_graph(const Digraph& g);

std::string to_dot(const TargetArena& arena);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace nwr
