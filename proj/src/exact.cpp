#include "nwr/exact.hpp"

#include <algorithm>
#include <deque>

#include "nwr/error.hpp"
#include "nwr/random.hpp"
#include "nwr/solver.hpp"

namespace nwr {

namespace {

constexpr std::size_t kNoLayer = static_cast<std::size_t>(-1);

std::vector<std::size_t> layer_index(const TargetArena& arena, const Layers& layers) {
  std::vector<std::size_t> layer_of(arena.size(), kNoLayer);
  for (std::size_t i = 0; i < layers.size(); ++i) {
    if (layers[i].empty()) throw InputError("layer " + std::to_string(i) + " is empty");
    for (Vertex v : layers[i]) {
      if (v >= arena.size()) throw InputError("layer " + std::to_string(i) + " names an unknown vertex");
      if (layer_of[v] != kNoLayer) throw InputError("vertex " + arena.id(v) + " appears in two layers");
      layer_of[v] = i;
    }
  }
  for (Vertex v = 0; v < arena.size(); ++v) {
    if (layer_of[v] == kNoLayer) throw InputError("vertex " + arena.id(v) + " is in no layer");
  }
  return layer_of;
}

}  // namespace

bool verify_drift_partition(const TargetArena& arena, const Layers& layers) {
  const auto layer_of = layer_index(arena, layers);
  const std::size_t top = layers.empty() ? 0 : layers.size() - 1;
  for (Vertex v = 0; v < arena.size(); ++v) {
    const std::size_t i = layer_of[v];
    bool up = false, down = false;
    for (Vertex w : arena.successors(v)) {
      up = up || layer_of[w] > i;
      down = down || layer_of[w] < i;
    }
    if (!up) continue;
    if (arena.is_protagonist(v)) return false;
    if (!(down && i > 0 && i < top)) return false;
  }
  return true;
}

std::vector<std::pair<Vertex, std::size_t>> drift_vertices(const TargetArena& arena, const Layers& layers) {
  const auto layer_of = layer_index(arena, layers);
  std::vector<std::pair<Vertex, std::size_t>> out;
  for (Vertex v = 0; v < arena.size(); ++v) {
    const std::size_t i = layer_of[v];
    if (!arena.is_nature(v) || i == 0 || i + 1 >= layers.size()) continue;
    const auto succ = arena.successors(v);
    if (std::any_of(succ.begin(), succ.end(), [&](Vertex w) { return layer_of[w] < i; })) out.emplace_back(v, i);
  }
  return out;
}

bool verify_certificate(const TargetArena& arena, const NwrCertificate& c) {
  try {
    if (!verify_drift_partition(arena, c.layers)) return false;
  } catch (const InputError&) {
    return false;
  }
  if (c.layers.empty() || c.path.empty() || c.path.front() != c.v || c.w.size() != arena.size()) return false;
  const auto layer_of = layer_index(arena, c.layers);
  const std::size_t top = c.layers.size() - 1;
  VertexSet seen(arena.size());
  for (std::size_t i = 0; i < c.path.size(); ++i) {
    const Vertex x = c.path[i];
    if (x >= arena.size() || seen.test(x) || layer_of[x] != top) return false;
    seen.set(x);
    if (i > 0 && !arena.has_edge(c.path[i - 1], x)) return false;
  }
  if (!arena.is_target(c.path.back())) return false;
  for (Vertex t = 0; t < arena.size(); ++t) {
    if (arena.is_target(t) && layer_of[t] != top) return false;
  }
  bool below = true;
  for_each_member(c.w, [&](Vertex w) { below = below && layer_of[w] < top; });
  return below;
}

namespace {

class Decider {
 public:
  Decider(const TargetArena& arena, Vertex v, const VertexSet& w) : arena_(arena), v_(v), w_(w) {}

  std::optional<NwrCertificate> run() {
    // Vertices from which T is reachable avoiding W with no target before the end.
    useful_ = VertexSet(arena_.size());
    std::deque<Vertex> queue;
    for (Vertex t = 0; t < arena_.size(); ++t) {
      if (arena_.is_target(t) && !w_.test(t)) {
        useful_.set(t);
        queue.push_back(t);
      }
    }
    while (!queue.empty()) {
      const Vertex x = queue.front();
      queue.pop_front();
      for (Vertex u : arena_.predecessors(x)) {
        if (!useful_.test(u) && !w_.test(u) && !arena_.is_target(u)) {
          useful_.set(u);
          queue.push_back(u);
        }
      }
    }
    if (!useful_.test(v_)) return std::nullopt;
    on_path_ = VertexSet(arena_.size());
    search(v_);
    return std::move(found_);
  }

 private:
  bool search(Vertex x) {
    path_.push_back(x);
    on_path_.set(x);
    bool done = false;
    if (arena_.is_target(x)) {
      done = evaluate();
    } else {
      for (Vertex y : arena_.successors(x)) {
        if (!on_path_.test(y) && useful_.test(y) && search(y)) {
          done = true;
          break;
        }
      }
    }
    on_path_.reset(x);
    path_.pop_back();
    return done;
  }

  // Builds the lowest layering of V \ (path ∪ T) bottom-up and checks whether
  // W ends up below the top layer.
  bool evaluate() {
    const std::size_t n = arena_.size();
    VertexSet placed(n);
    const VertexSet pinned = on_path_ | arena_.targets();
    Layers layers;
    while (true) {
      VertexSet layer = ~(placed | pinned);
      bool shrunk = true;
      while (shrunk) {
        shrunk = false;
        for_each_member(layer, [&](Vertex x) {
          const auto succ = arena_.successors(x);
          const bool closed = std::all_of(succ.begin(), succ.end(),
                                          [&](Vertex y) { return placed.test(y) || layer.test(y); });
          const bool falls = arena_.is_nature(x) &&
                             std::any_of(succ.begin(), succ.end(), [&](Vertex y) { return placed.test(y); });
          if (!closed && !falls) {
            layer.reset(x);
            shrunk = true;
          }
        });
      }
      if (layer.none()) break;
      placed |= layer;
      layers.push_back(members(layer));
    }
    if (!w_.is_subset_of(placed)) return false;
    layers.push_back(members(~placed));
    found_ = NwrCertificate{std::move(layers), path_, v_, w_};
    return true;
  }

  const TargetArena& arena_;
  Vertex v_;
  VertexSet w_;
  VertexSet useful_;
  VertexSet on_path_;
  std::vector<Vertex> path_;
  std::optional<NwrCertificate> found_;
};

}  // namespace

NwrDecision decide_nwr(const TargetArena& arena, Vertex v, const VertexSet& w, std::size_t limit) {
  if (arena.size() > limit) {
    throw SizeLimitError("arena has " + std::to_string(arena.size()) + " vertices, above the exact limit of " +
                         std::to_string(limit) + "; use saturate or sample_falsify instead");
  }
  if (v >= arena.size() || w.size() != arena.size()) throw InputError("query does not match the arena");
  if (w.none()) throw InputError("the compared set must be non-empty");
  NwrDecision decision;
  if (w.test(v)) return decision;
  decision.certificate = Decider(arena, v, w).run();
  decision.holds = !decision.certificate;
  return decision;
}

Rational default_epsilon(std::size_t vertex_count) {
  const std::size_t n = std::max<std::size_t>(vertex_count, 1);
  constexpr long kGrid = 1'000'000;
  const Rational half(1, 2);
  // Smallest grid point r with r^n >= 1/2, an upper bound on 2^(-1/n).
  long lo = 1, hi = kGrid;
  while (lo < hi) {
    const long mid = lo + (hi - lo) / 2;
    if (pow(Rational(mid, kGrid), static_cast<unsigned>(n)) >= half) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  if (lo == kGrid) throw InputError("arena too large for the default epsilon grid");
  Rational eps = (1 - Rational(lo, kGrid)) / 2;
  eps.canonicalize();
  return eps;
}

DistributionFamily epsilon_witness(const TargetArena& arena, const NwrCertificate& c, const Rational& eps) {
  if (!(eps > 0) || !(pow(1 - eps, static_cast<unsigned>(arena.size())) > Rational(1, 2))) {
    throw InputError("epsilon " + format_rational(eps) + " is outside 0 < eps < 1 - 2^(-1/" +
                     std::to_string(arena.size()) + ")");
  }
  if (!verify_certificate(arena, c)) throw InputError("certificate does not verify");
  const auto layer_of = layer_index(arena, c.layers);

  std::vector<std::optional<Vertex>> preferred(arena.size());
  for (std::size_t i = 0; i + 1 < c.path.size(); ++i) {
    if (arena.is_nature(c.path[i])) preferred[c.path[i]] = c.path[i + 1];
  }
  for (const auto& [u, layer] : drift_vertices(arena, c.layers)) {
    for (Vertex x : arena.successors(u)) {
      if (layer_of[x] < layer) {
        preferred[u] = x;
        break;
      }
    }
  }

  DistributionFamily mu(arena.size());
  for (Vertex u = 0; u < arena.size(); ++u) {
    if (!arena.is_nature(u)) continue;
    const auto succ = arena.successors(u);
    const std::size_t k = succ.size();
    for (Vertex x : succ) {
      Rational p;
      if (k == 1) {
        p = 1;
      } else if (!preferred[u]) {
        p = Rational(1, k);
      } else if (x == *preferred[u]) {
        p = 1 - eps;
      } else {
        p = eps / static_cast<unsigned long>(k - 1);
      }
      p.canonicalize();
      mu.at(u).emplace_back(x, p);
    }
  }
  return mu;
}

std::optional<DistributionFamily> sample_falsify(const TargetArena& arena, Vertex v, const VertexSet& w,
                                                 std::size_t trials, std::uint64_t max_denominator,
                                                 std::uint64_t seed) {
  if (w.none()) throw InputError("the compared set must be non-empty");
  Rng rng(seed);
  for (std::size_t trial = 0; trial < trials; ++trial) {
    auto mu = random_family(arena, max_denominator, rng.next());
    const auto values = vertex_values(arena, mu);
    bool beaten = true;
    for_each_member(w, [&](Vertex x) { beaten = beaten && values[v] > values[x]; });
    if (beaten) return mu;
  }
  return std::nullopt;
}

std::size_t Digraph::find(std::string_view name) const {
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) throw InputError("unknown graph vertex '" + std::string(name) + "'");
  return static_cast<std::size_t>(it - names.begin());
}

namespace {

TwoPathsQuery trivially_holding_query() {
  TargetArena arena({{"t1", Owner::Nature, false}, {"<t1,t1>", Owner::Protagonist, true}},
                    {{"t1", "<t1,t1>"}, {"<t1,t1>", "t1"}});
  const Vertex t1 = arena.at("t1");
  return {arena, t1, arena.set_of({"t1"})};
}

std::vector<bool> reaches(const std::vector<std::vector<std::size_t>>& succ, std::size_t goal) {
  const std::size_t n = succ.size();
  std::vector<std::vector<std::size_t>> pred(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v : succ[u]) pred[v].push_back(u);
  }
  std::vector<bool> seen(n, false);
  seen[goal] = true;
  std::deque<std::size_t> queue{goal};
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    for (std::size_t u : pred[v]) {
      if (!seen[u]) {
        seen[u] = true;
        queue.push_back(u);
      }
    }
  }
  return seen;
}

}  // namespace

TwoPathsQuery reduce_2dp(const Digraph& g, std::size_t s1, std::size_t t1, std::size_t s2, std::size_t t2) {
  const std::size_t n = g.size();
  if (s1 >= n || t1 >= n || s2 >= n || t2 >= n) throw InputError("terminal vertex not in the graph");
  if (s1 == s2 || s1 == t2 || t1 == s2 || t1 == t2) return trivially_holding_query();

  auto succ = g.succ;
  succ[t1].clear();
  succ[t2].clear();
  for (auto& list : succ) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  const auto to_t1 = reaches(succ, t1);
  const auto to_t2 = reaches(succ, t2);
  if (!to_t1[s1] || !to_t2[s2]) return trivially_holding_query();

  std::vector<bool> keep(n);
  for (std::size_t u = 0; u < n; ++u) keep[u] = to_t1[u] || to_t2[u];

  auto edge_name = [&](std::size_t u, std::size_t v) { return "<" + g.names[u] + "," + g.names[v] + ">"; };
  std::vector<VertexSpec> specs;
  std::vector<EdgeSpec> edges;
  for (std::size_t u = 0; u < n; ++u) {
    if (!keep[u]) continue;
    specs.push_back({g.names[u], Owner::Nature, false});
    for (std::size_t v : succ[u]) {
      if (!keep[v]) continue;
      specs.push_back({edge_name(u, v), Owner::Protagonist, false});
      edges.emplace_back(g.names[u], edge_name(u, v));
      edges.emplace_back(edge_name(u, v), g.names[v]);
    }
  }
  for (std::size_t t : {t1, t2}) {
    specs.push_back({edge_name(t, t), Owner::Protagonist, t == t1});
    edges.emplace_back(g.names[t], edge_name(t, t));
    edges.emplace_back(edge_name(t, t), g.names[t]);
  }
  TargetArena arena(std::move(specs), edges);
  const Vertex v = arena.at(g.names[s1]);
  VertexSet w = arena.empty_set();
  w.set(arena.at(g.names[s2]));
  return {std::move(arena), v, std::move(w)};
}

namespace {

bool path_avoiding(const Digraph& g, std::size_t from, std::size_t to, const std::vector<bool>& banned) {
  if (banned[from]) return false;
  std::vector<bool> seen(g.size(), false);
  seen[from] = true;
  std::deque<std::size_t> queue{from};
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    if (u == to) return true;
    for (std::size_t v : g.succ[u]) {
      if (!seen[v] && !banned[v]) {
        seen[v] = true;
        queue.push_back(v);
      }
    }
  }
  return false;
}

bool disjoint_search(const Digraph& g, std::size_t u, std::size_t t1, std::size_t s2, std::size_t t2,
                     std::vector<bool>& on_path) {
  on_path[u] = true;
  bool found = false;
  if (u == t1) {
    found = path_avoiding(g, s2, t2, on_path);
  } else {
    for (std::size_t v : g.succ[u]) {
      if (!on_path[v] && disjoint_search(g, v, t1, s2, t2, on_path)) {
        found = true;
        break;
      }
    }
  }
  on_path[u] = false;
  return found;
}

}  // namespace

bool solve_2dp_oracle(const Digraph& g, std::size_t s1, std::size_t t1, std::size_t s2, std::size_t t2) {
  if (g.size() > kTwoPathsOracleLimit) {
    throw SizeLimitError("graph has " + std::to_string(g.size()) + " vertices, above the oracle limit of " +
                         std::to_string(kTwoPathsOracleLimit));
  }
  const std::size_t n = g.size();
  if (s1 >= n || t1 >= n || s2 >= n || t2 >= n) throw InputError("terminal vertex not in the graph");
  std::vector<bool> on_path(n, false);
  return disjoint_search(g, s1, t1, s2, t2, on_path);
}

}  // namespace nwr
