#include "nwr/arena.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "nwr/error.hpp"
#include "nwr/random.hpp"

namespace nwr {

std::vector<Vertex> members(const VertexSet& s) {
  std::vector<Vertex> out;
  out.reserve(s.count());
  for_each_member(s, [&](Vertex v) { out.push_back(v); });
  return out;
}

TargetArena::TargetArena(std::vector<VertexSpec> vertices, const std::vector<EdgeSpec>& edges)
    : vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    const auto& spec = vertices_[i];
    if (spec.id == kSinkId) throw InputError("vertex id '" + spec.id + "' is reserved");
    if (i > 0 && vertices_[i - 1].id == spec.id) throw InputError("duplicate vertex id '" + spec.id + "'");
    index_.emplace(spec.id, static_cast<Vertex>(i));
  }
  succ_.assign(vertices_.size(), {});
  pred_.assign(vertices_.size(), {});
  for (const auto& [from, to] : edges) {
    const Vertex u = at(from);
    const Vertex v = at(to);
    succ_[u].push_back(v);
    pred_[v].push_back(u);
  }
  edge_count_ = 0;
  for (auto* lists : {&succ_, &pred_}) {
    for (auto& list : *lists) {
      std::sort(list.begin(), list.end());
      list.erase(std::unique(list.begin(), list.end()), list.end());
    }
  }
  for (const auto& list : succ_) edge_count_ += list.size();
}

std::optional<Vertex> TargetArena::find(std::string_view id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Vertex TargetArena::at(std::string_view id) const {
  if (auto v = find(id)) return *v;
  throw InputError("unknown vertex '" + std::string(id) + "'");
}

bool TargetArena::has_edge(Vertex from, Vertex to) const {
  return std::binary_search(succ_[from].begin(), succ_[from].end(), to);
}

VertexSet TargetArena::full_set() const {
  VertexSet s(size());
  s.set();
  return s;
}

VertexSet TargetArena::targets() const {
  VertexSet s(size());
  for (Vertex v = 0; v < size(); ++v) s[v] = vertices_[v].target;
  return s;
}

VertexSet TargetArena::protagonist_vertices() const {
  VertexSet s(size());
  for (Vertex v = 0; v < size(); ++v) s[v] = is_protagonist(v);
  return s;
}

VertexSet TargetArena::nature_vertices() const {
  VertexSet s(size());
  for (Vertex v = 0; v < size(); ++v) s[v] = is_nature(v);
  return s;
}

VertexSet TargetArena::successor_set(Vertex v) const {
  VertexSet s(size());
  for (Vertex w : succ_[v]) s.set(w);
  return s;
}

VertexSet TargetArena::set_of(std::initializer_list<std::string_view> ids) const {
  VertexSet s(size());
  for (auto id : ids) s.set(at(id));
  return s;
}

std::vector<std::pair<Vertex, Vertex>> TargetArena::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < size(); ++u) {
    for (Vertex v : succ_[u]) out.emplace_back(u, v);
  }
  return out;
}

std::vector<EdgeSpec> TargetArena::edge_specs() const {
  std::vector<EdgeSpec> out;
  out.reserve(edge_count_);
  for (auto [u, v] : edges()) out.emplace_back(id(u), id(v));
  return out;
}

TargetArena TargetArena::with_targets(const VertexSet& targets) const {
  auto specs = vertices_;
  for (Vertex v = 0; v < size(); ++v) specs[v].target = targets.test(v);
  return TargetArena(std::move(specs), edge_specs());
}

TargetArena TargetArena::without_edge(Vertex from, Vertex to) const {
  auto edges = edge_specs();
  std::erase(edges, EdgeSpec{id(from), id(to)});
  return TargetArena(vertices_, edges);
}

ValidationReport validate_arena(const TargetArena& arena) {
  ValidationReport report;
  for (auto [u, v] : arena.edges()) {
    if (arena.owner(u) == arena.owner(v)) {
      report.violations.push_back("edge (" + arena.id(u) + "," + arena.id(v) + ") is not bipartite");
    }
  }
  for (Vertex u = 0; u < arena.size(); ++u) {
    if (arena.is_nature(u) && arena.successors(u).empty()) {
      report.violations.push_back("Nature vertex " + arena.id(u) + " has no successor");
    }
    if (arena.is_nature(u) && arena.is_target(u)) {
      report.violations.push_back("target " + arena.id(u) + " is not a Protagonist vertex");
    }
  }
  return report;
}

Rational DistributionFamily::probability(Vertex u, Vertex v) const {
  for (const auto& [w, p] : dist_[u]) {
    if (w == v) return p;
  }
  return 0;
}

void check_family(const TargetArena& arena, const DistributionFamily& mu) {
  if (mu.size() != arena.size()) throw InputError("family does not match the arena's vertex count");
  for (Vertex u = 0; u < arena.size(); ++u) {
    const auto& dist = mu.at(u);
    if (arena.is_protagonist(u)) {
      if (!dist.empty()) throw InputError("Protagonist vertex " + arena.id(u) + " carries a distribution");
      continue;
    }
    const auto succ = arena.successors(u);
    bool domain_ok = dist.size() == succ.size();
    Rational total = 0;
    for (std::size_t i = 0; domain_ok && i < dist.size(); ++i) {
      domain_ok = dist[i].first == succ[i] && dist[i].second > 0;
      total += dist[i].second;
    }
    if (!domain_ok) {
      throw InputError("distribution of Nature vertex " + arena.id(u) + " is not full-support on its successors");
    }
    if (total != 1) throw InputError("distribution of Nature vertex " + arena.id(u) + " does not sum to 1");
  }
}

DistributionFamily uniform_family(const TargetArena& arena) {
  DistributionFamily mu(arena.size());
  for (Vertex u = 0; u < arena.size(); ++u) {
    if (!arena.is_nature(u)) continue;
    const auto succ = arena.successors(u);
    for (Vertex v : succ) mu.at(u).emplace_back(v, Rational(1, succ.size()));
  }
  return mu;
}

TargetArena random_arena(std::size_t protagonist_count, std::size_t nature_count, const Rational& edge_density,
                         std::size_t target_count, std::uint64_t seed) {
  if (protagonist_count < 1) throw InputError("random_arena needs at least one Protagonist vertex");
  if (target_count > protagonist_count) throw InputError("more targets than Protagonist vertices");
  if (edge_density < 0 || edge_density > 1) throw InputError("edge density must lie in [0,1]");
  if (!edge_density.get_num().fits_ulong_p() || !edge_density.get_den().fits_ulong_p()) {
    throw InputError("edge density has an oversized numerator or denominator");
  }
  const std::uint64_t num = edge_density.get_num().get_ui();
  const std::uint64_t den = edge_density.get_den().get_ui();

  Rng rng(seed);
  std::vector<VertexSpec> specs;
  std::vector<std::string> p_ids, n_ids;
  for (std::size_t i = 0; i < protagonist_count; ++i) p_ids.push_back("p" + std::to_string(i));
  for (std::size_t i = 0; i < nature_count; ++i) n_ids.push_back("n" + std::to_string(i));

  // Partial Fisher-Yates picks the targets.
  std::vector<std::size_t> order(protagonist_count);
  std::iota(order.begin(), order.end(), 0);
  for (std::size_t i = 0; i < target_count; ++i) {
    std::swap(order[i], order[i + rng.below(protagonist_count - i)]);
  }
  std::vector<bool> is_target(protagonist_count, false);
  for (std::size_t i = 0; i < target_count; ++i) is_target[order[i]] = true;

  for (std::size_t i = 0; i < protagonist_count; ++i) specs.push_back({p_ids[i], Owner::Protagonist, is_target[i]});
  for (std::size_t i = 0; i < nature_count; ++i) specs.push_back({n_ids[i], Owner::Nature, false});

  std::vector<EdgeSpec> edges;
  for (std::size_t i = 0; i < protagonist_count; ++i) {
    for (std::size_t j = 0; j < nature_count; ++j) {
      if (rng.chance(num, den)) edges.emplace_back(p_ids[i], n_ids[j]);
    }
  }
  for (std::size_t j = 0; j < nature_count; ++j) {
    bool any = false;
    for (std::size_t i = 0; i < protagonist_count; ++i) {
      if (rng.chance(num, den)) {
        edges.emplace_back(n_ids[j], p_ids[i]);
        any = true;
      }
    }
    if (!any) edges.emplace_back(n_ids[j], p_ids[rng.below(protagonist_count)]);
  }
  return TargetArena(std::move(specs), edges);
}

DistributionFamily random_family(const TargetArena& arena, std::uint64_t max_denominator, std::uint64_t seed) {
  Rng rng(seed);
  DistributionFamily mu(arena.size());
  for (Vertex u = 0; u < arena.size(); ++u) {
    if (!arena.is_nature(u)) continue;
    const auto succ = arena.successors(u);
    if (succ.empty()) throw InputError("Nature vertex " + arena.id(u) + " has no successor");
    if (max_denominator < succ.size()) {
      throw InputError("max denominator " + std::to_string(max_denominator) + " is smaller than the " +
                       std::to_string(succ.size()) + " successors of " + arena.id(u));
    }
    // Choose succ.size()-1 distinct cut points in [1, max_denominator-1].
    std::set<std::uint64_t> cuts;
    while (cuts.size() + 1 < succ.size()) cuts.insert(1 + rng.below(max_denominator - 1));
    cuts.insert(max_denominator);
    std::uint64_t previous = 0;
    std::size_t i = 0;
    for (std::uint64_t cut : cuts) {
      Rational p(static_cast<unsigned long>(cut - previous), static_cast<unsigned long>(max_denominator));
      p.canonicalize();
      mu.at(u).emplace_back(succ[i++], p);
      previous = cut;
    }
  }
  return mu;
}

}  // namespace nwr
