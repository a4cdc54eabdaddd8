#include "nwr/engine.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <thread>

#include "nwr/solver.hpp"
#include "nwr/structure.hpp"

namespace nwr {

namespace {

VertexSet entailing(const NwrRelation& r, SetId w) {
  VertexSet s(r.vertex_count());
  for (Vertex v = 0; v < r.vertex_count(); ++v) s[v] = r.contains(v, w);
  return s;
}

// Vertices with a path to T that avoids `blocked` (blocked targets do not count).
VertexSet reach_avoiding(const TargetArena& arena, const VertexSet& blocked) {
  VertexSet seen = arena.targets() - blocked;
  std::deque<Vertex> queue;
  for_each_member(seen, [&](Vertex v) { queue.push_back(v); });
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    for (Vertex u : arena.predecessors(v)) {
      if (!seen.test(u) && !blocked.test(u)) {
        seen.set(u);
        queue.push_back(u);
      }
    }
  }
  return seen;
}

}  // namespace

std::vector<Vertex> bar_reach_all(const TargetArena& arena, const NwrRelation& r, SetId w) {
  const VertexSet blocked = entailing(r, w);
  const VertexSet escaping = reach_avoiding(arena, blocked);
  std::vector<Vertex> out;
  for (Vertex v = 0; v < arena.size(); ++v) {
    if (!blocked.test(v) && !escaping.test(v)) out.push_back(v);
  }
  return out;
}

bool rule_bar_reach(const TargetArena& arena, const NwrRelation& r, Vertex v0, SetId w) {
  const VertexSet blocked = entailing(r, w);
  return blocked.test(v0) || !reach_avoiding(arena, blocked).test(v0);
}

std::vector<Vertex> rule_bar_win(const TargetArena& arena, const NwrRelation& r, Vertex w) {
  VertexSet goal = arena.targets();
  for (Vertex s = 0; s < arena.size(); ++s) {
    if (arena.is_protagonist(s) && r.below(w, s)) goal.set(s);
  }
  return members(almost_sure_set(arena.with_targets(goal)));
}

std::vector<Emission> rule_nature_equiv(const TargetArena& arena, const NwrRelation& r, Vertex u) {
  std::vector<Emission> out;
  if (!arena.is_nature(u)) return out;
  const auto succ = arena.successors(u);
  for (std::size_t i = 0; i < succ.size(); ++i) {
    for (std::size_t j = i + 1; j < succ.size(); ++j) {
      if (!r.equivalent(succ[i], succ[j])) return out;
    }
  }
  for (Vertex x : succ) {
    out.emplace_back(u, r.singleton(x));
    out.emplace_back(x, r.singleton(u));
  }
  return out;
}

bool rule_prot_dominance(const TargetArena& arena, const NwrRelation& r, Vertex u, Vertex v) {
  if (!arena.is_protagonist(u) || !arena.is_protagonist(v) || arena.is_target(u) || arena.is_target(v)) return false;
  VertexSet rest = arena.successor_set(u);
  for (Vertex w : arena.successors(u)) {
    VertexSet others = rest;
    others.reset(w);
    if (others.any() && r.entails(w, others)) rest = std::move(others);
  }
  const VertexSet target = arena.successor_set(v);
  bool ok = true;
  for_each_member(rest, [&](Vertex w) { ok = ok && r.entails(w, target); });
  return ok;
}

namespace {

// Runs job(i) for i in [0, count) on up to `threads` workers; each worker
// keeps its own output, concatenated afterwards.
template <typename Job>
std::vector<Emission> fan_out(std::size_t count, unsigned threads, Job job) {
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  std::vector<std::vector<Emission>> parts(threads);
  auto work = [&](unsigned t) {
    for (std::size_t i = t; i < count; i += threads) job(i, parts[t]);
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  std::vector<Emission> out;
  for (auto& part : parts) out.insert(out.end(), part.begin(), part.end());
  return out;
}

}  // namespace

NwrRelation saturate(const TargetArena& arena, const SaturateOptions& options, SaturateStats* stats) {
  NwrRelation r = seed_relation(arena);
  const std::size_t n = arena.size();
  const std::size_t bound = n * r.universe_size() + 1;
  std::size_t rounds = 0;
  while (true) {
    ++rounds;
    if (rounds > bound) throw std::logic_error("saturation exceeded its round bound");
    std::vector<Emission> emitted;
    auto append = [&](std::vector<Emission> part) { emitted.insert(emitted.end(), part.begin(), part.end()); };

    append(fan_out(r.universe_size(), options.threads, [&](std::size_t w, std::vector<Emission>& out) {
      for (Vertex v : bar_reach_all(arena, r, w)) {
        if (!r.contains(v, w)) out.emplace_back(v, w);
      }
    }));
    append(fan_out(n, options.threads, [&](std::size_t w, std::vector<Emission>& out) {
      for (Vertex v0 : rule_bar_win(arena, r, static_cast<Vertex>(w))) {
        if (!r.below(static_cast<Vertex>(w), v0)) out.emplace_back(static_cast<Vertex>(w), r.singleton(v0));
      }
    }));
    append(fan_out(n, options.threads, [&](std::size_t u, std::vector<Emission>& out) {
      for (const auto& e : rule_nature_equiv(arena, r, static_cast<Vertex>(u))) {
        if (!r.contains(e.first, e.second)) out.push_back(e);
      }
    }));
    append(fan_out(n, options.threads, [&](std::size_t u, std::vector<Emission>& out) {
      for (Vertex v = 0; v < n; ++v) {
        if (!r.below(static_cast<Vertex>(u), v) && rule_prot_dominance(arena, r, static_cast<Vertex>(u), v)) {
          out.emplace_back(static_cast<Vertex>(u), r.singleton(v));
        }
      }
    }));

    std::sort(emitted.begin(), emitted.end());
    bool added = false;
    for (const auto& [v, w] : emitted) added = r.add(v, w) || added;
    if (!added) break;
    r.close();
  }
  if (stats) {
    stats->rounds = rounds;
    stats->pairs = r.pair_count();
  }
  return r;
}

}  // namespace nwr
