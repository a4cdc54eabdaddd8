#include "nwr/relation.hpp"

#include <numeric>

#include "nwr/error.hpp"

namespace nwr {

NwrRelation::NwrRelation(const TargetArena& arena) {
  const std::size_t n = arena.size();
  auto intern = [&](const VertexSet& s) {
    if (s.none()) return;
    if (index_.emplace(s, universe_.size()).second) universe_.push_back(s);
  };
  for (Vertex v = 0; v < n; ++v) {
    VertexSet s(n);
    s.set(v);
    intern(s);
  }
  for (Vertex v = 0; v < n; ++v) {
    const VertexSet succ = arena.successor_set(v);
    intern(succ);
    for (Vertex x : arena.successors(v)) {
      VertexSet rest = succ;
      rest.reset(x);
      intern(rest);
    }
  }
  singleton_.resize(n);
  for (Vertex v = 0; v < n; ++v) singleton_[v] = v;

  supersets_.resize(universe_.size());
  for (SetId a = 0; a < universe_.size(); ++a) {
    for (SetId b = 0; b < universe_.size(); ++b) {
      if (universe_[a].is_subset_of(universe_[b])) supersets_[a].push_back(b);
    }
  }
  rows_.assign(n, boost::dynamic_bitset<>(universe_.size()));
  for (Vertex v = 0; v < n; ++v) add(v, singleton_[v]);
}

std::optional<SetId> NwrRelation::find_set(const VertexSet& w) const {
  auto it = index_.find(w);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool NwrRelation::entails(Vertex v, const VertexSet& w) const {
  if (w.test(v)) return true;
  if (auto id = find_set(w)) return rows_[v].test(*id);
  const auto& row = rows_[v];
  for (auto s = row.find_first(); s != boost::dynamic_bitset<>::npos; s = row.find_next(s)) {
    if (universe_[s].is_subset_of(w)) return true;
  }
  return false;
}

bool NwrRelation::add(Vertex v, const VertexSet& w) {
  auto id = find_set(w);
  if (!id) throw InputError("set is not a candidate set of this arena");
  return add(v, *id);
}

bool NwrRelation::add(Vertex v, SetId w) {
  if (rows_[v].test(w)) return false;
  for (SetId x : supersets_[w]) rows_[v].set(x);
  return true;
}

void NwrRelation::close() {
  const std::size_t n = rows_.size();
  bool changed = true;
  while (changed) {
    changed = false;
    for (SetId x = 0; x < universe_.size(); ++x) {
      VertexSet below_x(n);
      for (Vertex w = 0; w < n; ++w) below_x[w] = rows_[w].test(x);
      for (Vertex u = 0; u < n; ++u) {
        if (below_x.test(u)) continue;
        const auto& row = rows_[u];
        for (auto s = row.find_first(); s != boost::dynamic_bitset<>::npos; s = row.find_next(s)) {
          if (universe_[s].is_subset_of(below_x)) {
            add(u, x);
            below_x.set(u);
            changed = true;
            break;
          }
        }
      }
    }
  }
}

std::size_t NwrRelation::pair_count() const {
  std::size_t total = 0;
  for (const auto& row : rows_) total += row.count();
  return total;
}

std::vector<std::pair<Vertex, SetId>> NwrRelation::pairs() const {
  std::vector<std::pair<Vertex, SetId>> out;
  for (Vertex v = 0; v < rows_.size(); ++v) {
    const auto& row = rows_[v];
    for (auto s = row.find_first(); s != boost::dynamic_bitset<>::npos; s = row.find_next(s)) out.emplace_back(v, s);
  }
  return out;
}

std::vector<std::vector<Vertex>> NwrRelation::equivalence_classes() const {
  const std::size_t n = rows_.size();
  std::vector<Vertex> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](Vertex v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w = v + 1; w < n; ++w) {
      if (equivalent(v, w)) {
        const Vertex a = find(v), b = find(w);
        parent[std::max(a, b)] = std::min(a, b);
      }
    }
  }
  std::vector<std::vector<Vertex>> classes;
  std::vector<std::size_t> slot(n, n);
  for (Vertex v = 0; v < n; ++v) {
    const Vertex root = find(v);
    if (slot[root] == n) {
      slot[root] = classes.size();
      classes.emplace_back();
    }
    classes[slot[root]].push_back(v);
  }
  return classes;
}

}  // namespace nwr
