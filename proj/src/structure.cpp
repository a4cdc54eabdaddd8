#include "nwr/structure.hpp"

#include <algorithm>
#include <deque>

#include "nwr/solver.hpp"

namespace nwr {

namespace {

VertexSet reachable_within(const TargetArena& arena, Vertex from, const VertexSet& alive, bool backward) {
  VertexSet seen(arena.size());
  seen.set(from);
  std::deque<Vertex> queue{from};
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : backward ? arena.predecessors(v) : arena.successors(v)) {
      if (alive.test(w) && !seen.test(w)) {
        seen.set(w);
        queue.push_back(w);
      }
    }
  }
  return seen;
}

// Component id per alive vertex: the smallest member of its SCC.
std::vector<Vertex> components(const TargetArena& arena, const VertexSet& alive) {
  const Vertex none = static_cast<Vertex>(arena.size());
  std::vector<Vertex> comp(arena.size(), none);
  for_each_member(alive, [&](Vertex v) {
    if (comp[v] != none) return;
    const VertexSet scc = reachable_within(arena, v, alive, false) & reachable_within(arena, v, alive, true);
    for_each_member(scc, [&](Vertex w) { comp[w] = v; });
  });
  return comp;
}

}  // namespace

std::vector<VertexSet> mec_decomposition(const TargetArena& arena) {
  VertexSet alive = arena.full_set();
  std::vector<Vertex> comp;
  bool changed = true;
  while (changed) {
    changed = false;
    comp = components(arena, alive);
    for (Vertex u = 0; u < arena.size(); ++u) {
      if (!alive.test(u)) continue;
      const auto succ = arena.successors(u);
      bool keep;
      if (arena.is_nature(u)) {
        keep = std::all_of(succ.begin(), succ.end(), [&](Vertex w) { return alive.test(w) && comp[w] == comp[u]; });
      } else {
        keep = std::any_of(succ.begin(), succ.end(), [&](Vertex w) { return alive.test(w) && comp[w] == comp[u]; });
      }
      if (!keep) {
        alive.reset(u);
        changed = true;
      }
    }
  }
  std::vector<VertexSet> out;
  std::vector<bool> emitted(arena.size(), false);
  for (Vertex u = 0; u < arena.size(); ++u) {
    if (!arena.is_protagonist(u)) continue;
    if (alive.test(u)) {
      if (emitted[comp[u]]) continue;
      emitted[comp[u]] = true;
      VertexSet s(arena.size());
      for_each_member(alive, [&](Vertex w) {
        if (comp[w] == comp[u] && arena.is_protagonist(w)) s.set(w);
      });
      out.push_back(std::move(s));
    } else if (arena.successors(u).empty()) {
      VertexSet s(arena.size());
      s.set(u);
      out.push_back(std::move(s));
    }
  }
  std::sort(out.begin(), out.end(), [](const VertexSet& a, const VertexSet& b) { return a.find_first() < b.find_first(); });
  return out;
}

bool EssentialOrder::essential(Vertex v) const {
  bool ok = true;
  for_each_member(above[v], [&](Vertex w) { ok = ok && above[w].test(v); });
  return ok;
}

EssentialOrder essential_order(const TargetArena& arena) {
  const std::size_t n = arena.size();
  const VertexSet zero = zero_set(arena);
  EssentialOrder order;
  order.above.assign(n, VertexSet(n));
  for (Vertex v = 0; v < n; ++v) {
    if (arena.is_protagonist(v)) order.above[v].set(v);
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (Vertex u = 0; u < n; ++u) {
      if (!arena.is_protagonist(u) || arena.is_target(u) || zero.test(u)) continue;
      for (Vertex v = 0; v < n; ++v) {
        if (v == u || !arena.is_protagonist(v) || zero.test(v) || order.above[u].test(v)) continue;
        bool any_path = false;
        bool all_paths = true;
        for (Vertex mid : arena.successors(u)) {
          for (Vertex next : arena.successors(mid)) {
            any_path = true;
            if (!arena.is_protagonist(next) || !order.above[next].test(v)) all_paths = false;
          }
        }
        if (any_path && all_paths) {
          order.above[u].set(v);
          changed = true;
        }
      }
    }
  }
  return order;
}

NwrRelation seed_relation(const TargetArena& arena) {
  NwrRelation r(arena);
  const std::size_t n = arena.size();
  for (const auto& mec : mec_decomposition(arena)) {
    for_each_member(mec, [&](Vertex u) {
      for_each_member(mec, [&](Vertex v) { r.add(u, r.singleton(v)); });
    });
  }
  const auto order = essential_order(arena);
  for (Vertex w = 0; w < n; ++w) {
    if (!arena.is_protagonist(w) || !order.essential(w)) continue;
    for (Vertex v = 0; v < n; ++v) {
      if (arena.is_protagonist(v) && order.holds(v, w)) {
        r.add(v, r.singleton(w));
        r.add(w, r.singleton(v));
      }
    }
  }
  // Whatever Protagonist can steer from a successor of v back to v almost
  // surely has the value of v.
  for (Vertex v = 0; v < n; ++v) {
    if (!arena.is_protagonist(v)) continue;
    VertexSet only_v = arena.empty_set();
    only_v.set(v);
    const VertexSet back = almost_sure_set(arena.with_targets(only_v));
    VertexSet seen = arena.empty_set();
    std::deque<Vertex> queue;
    for (Vertex w : arena.successors(v)) {
      if (back.test(w) && !seen.test(w)) {
        seen.set(w);
        queue.push_back(w);
      }
    }
    while (!queue.empty()) {
      const Vertex y = queue.front();
      queue.pop_front();
      if (y == v) continue;
      for (Vertex z : arena.successors(y)) {
        if (back.test(z) && !seen.test(z)) {
          seen.set(z);
          queue.push_back(z);
        }
      }
    }
    for_each_member(seen, [&](Vertex y) {
      r.add(y, r.singleton(v));
      r.add(v, r.singleton(y));
    });
  }
  const VertexSet zero = zero_set(arena);
  for_each_member(zero, [&](Vertex z) {
    for (Vertex w = 0; w < n; ++w) r.add(z, r.singleton(w));
  });
  const VertexSet winning = almost_sure_set(arena);
  for_each_member(winning, [&](Vertex v) {
    for (Vertex w = 0; w < n; ++w) r.add(w, r.singleton(v));
  });
  r.close();
  return r;
}

}  // namespace nwr
