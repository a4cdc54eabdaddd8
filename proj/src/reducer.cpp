#include "nwr/reducer.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "nwr/error.hpp"

namespace nwr {

bool Quotient::is_dropped(Vertex v) const {
  return std::binary_search(dropped.begin(), dropped.end(), v);
}

Quotient quotient(const TargetArena& arena, const NwrRelation& r) {
  const std::size_t n = arena.size();
  std::vector<Vertex> rep(n);
  std::iota(rep.begin(), rep.end(), 0);
  auto find = [&](Vertex v) {
    while (rep[v] != v) v = rep[v] = rep[rep[v]];
    return v;
  };
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (arena.owner(u) == arena.owner(v) && r.equivalent(u, v)) {
        const Vertex a = find(u), b = find(v);
        rep[std::max(a, b)] = std::min(a, b);
      }
    }
  }
  for (Vertex v = 0; v < n; ++v) rep[v] = find(v);

  std::set<std::pair<Vertex, Vertex>> edges;
  std::vector<bool> had_in(n, false), has_in(n, false);
  for (auto [x, y] : arena.edges()) {
    if (arena.is_protagonist(x)) {
      had_in[rep[y]] = true;
      const auto succ = arena.successors(y);
      const bool leaves = std::any_of(succ.begin(), succ.end(), [&](Vertex z) { return rep[z] != rep[x]; });
      if (leaves) {
        edges.emplace(rep[x], rep[y]);
        has_in[rep[y]] = true;
      }
    }
  }
  Quotient q;
  std::vector<bool> keep(n, false);
  for (Vertex v = 0; v < n; ++v) {
    if (rep[v] != v) continue;
    keep[v] = !(arena.is_nature(v) && had_in[v] && !has_in[v]);
  }
  for (auto [x, y] : arena.edges()) {
    if (arena.is_nature(x) && keep[rep[x]]) edges.emplace(rep[x], rep[y]);
  }

  std::vector<VertexSpec> specs;
  for (Vertex v = 0; v < n; ++v) {
    if (rep[v] == v && keep[v]) specs.push_back({arena.id(v), arena.owner(v), false});
  }
  for (Vertex v = 0; v < n; ++v) {
    if (arena.is_target(v)) {
      auto it = std::find_if(specs.begin(), specs.end(), [&](const VertexSpec& s) { return s.id == arena.id(rep[v]); });
      it->target = true;
    }
    if (!keep[rep[v]]) q.dropped.push_back(v);
  }
  std::vector<EdgeSpec> edge_specs;
  for (auto [x, y] : edges) edge_specs.emplace_back(arena.id(x), arena.id(y));
  q.arena = TargetArena(std::move(specs), edge_specs);
  q.class_of.resize(n);
  for (Vertex v = 0; v < n; ++v) q.class_of[v] = arena.id(rep[v]);
  return q;
}

DistributionFamily lift_family(const TargetArena& arena, const DistributionFamily& mu, const Quotient& q) {
  const TargetArena& reduced = q.arena;
  std::vector<std::map<Vertex, Rational>> sums(reduced.size());
  std::vector<unsigned long> members(reduced.size(), 0);
  for (Vertex u = 0; u < arena.size(); ++u) {
    if (!arena.is_nature(u)) continue;
    const auto c = reduced.find(q.class_of[u]);
    if (!c) continue;
    ++members[*c];
    for (const auto& [z, p] : mu.at(u)) sums[*c][reduced.at(q.class_of[z])] += p;
  }
  DistributionFamily lifted(reduced.size());
  for (Vertex c = 0; c < reduced.size(); ++c) {
    if (!reduced.is_nature(c)) continue;
    for (auto& [z, p] : sums[c]) {
      Rational share = p / members[c];
      share.canonicalize();
      lifted.at(c).emplace_back(z, share);
    }
  }
  return lifted;
}

TrimResult trim_edges(const TargetArena& arena, const NwrRelation& r) {
  if (!(quotient(arena, r).arena == arena)) {
    throw InputError("trim_edges needs an arena that its relation's quotient leaves unchanged");
  }
  TrimResult result{arena, {}};
  bool removed = true;
  while (removed) {
    removed = false;
    const TargetArena& current = result.arena;
    for (Vertex w = 0; w < current.size() && !removed; ++w) {
      if (!current.is_protagonist(w) || current.successors(w).size() < 2) continue;
      for (Vertex x : current.successors(w)) {
        VertexSet rest = current.successor_set(w);
        rest.reset(x);
        if (!r.entails(x, rest)) continue;
        RemovedEdge edge{current.id(w), current.id(x), {}};
        for_each_member(rest, [&](Vertex y) { edge.dominated_by.push_back(current.id(y)); });
        result.removed.push_back(std::move(edge));
        result.arena = current.without_edge(w, x);
        removed = true;
        break;
      }
    }
  }
  return result;
}

std::size_t ReductionReport::merged_classes() const {
  std::map<std::string, std::size_t> sizes;
  for (const auto& [v, c] : class_of) ++sizes[c];
  return static_cast<std::size_t>(
      std::count_if(sizes.begin(), sizes.end(), [](const auto& entry) { return entry.second >= 2; }));
}

ReductionResult reduce_fixpoint(const TargetArena& arena, const SaturateOptions& options) {
  ReductionResult result{arena, {}};
  auto& report = result.report;
  report.original_vertices = arena.size();
  report.original_edges = arena.edge_count();
  for (Vertex v = 0; v < arena.size(); ++v) report.class_of.emplace_back(arena.id(v), arena.id(v));
  std::vector<bool> gone(arena.size(), false);

  const std::size_t bound = arena.size() + arena.edge_count() + 1;
  while (true) {
    if (++report.rounds > bound) throw std::logic_error("reduction exceeded its round bound");
    const TargetArena& current = result.arena;
    const NwrRelation r = saturate(current, options);
    Quotient q = quotient(current, r);
    if (!(q.arena == current)) {
      for (Vertex v = 0; v < arena.size(); ++v) {
        if (gone[v]) continue;
        const Vertex c = current.at(report.class_of[v].second);
        report.class_of[v].second = q.class_of[c];
        if (q.is_dropped(c)) {
          gone[v] = true;
          report.dropped.push_back(arena.id(v));
        }
      }
      result.arena = std::move(q.arena);
      continue;
    }
    TrimResult trimmed = trim_edges(current, r);
    if (trimmed.removed.empty()) break;
    report.removed.insert(report.removed.end(), trimmed.removed.begin(), trimmed.removed.end());
    result.arena = std::move(trimmed.arena);
  }
  report.reduced_vertices = result.arena.size();
  report.reduced_edges = result.arena.edge_count();
  return result;
}

}  // namespace nwr
