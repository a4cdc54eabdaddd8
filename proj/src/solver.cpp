#include "nwr/solver.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

#include "nwr/error.hpp"

namespace nwr {

VertexSet zero_set(const TargetArena& arena) {
  VertexSet reach = arena.targets();
  std::deque<Vertex> queue;
  for_each_member(reach, [&](Vertex v) { queue.push_back(v); });
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    for (Vertex u : arena.predecessors(v)) {
      if (!reach.test(u)) {
        reach.set(u);
        queue.push_back(u);
      }
    }
  }
  return ~reach;
}

VertexSet almost_sure_set(const TargetArena& arena) {
  const VertexSet targets = arena.targets();
  VertexSet allowed = arena.full_set();
  while (true) {
    VertexSet good = targets & allowed;
    bool grew = true;
    while (grew) {
      grew = false;
      for (Vertex v = 0; v < arena.size(); ++v) {
        if (good.test(v) || !allowed.test(v)) continue;
        const auto succ = arena.successors(v);
        bool ok;
        if (arena.is_protagonist(v)) {
          ok = std::any_of(succ.begin(), succ.end(), [&](Vertex w) { return good.test(w); });
        } else {
          ok = std::all_of(succ.begin(), succ.end(), [&](Vertex w) { return allowed.test(w); }) &&
               std::any_of(succ.begin(), succ.end(), [&](Vertex w) { return good.test(w); });
        }
        if (ok) {
          good.set(v);
          grew = true;
        }
      }
    }
    if (good == allowed) return good;
    allowed = good;
  }
}

namespace {

// Solves x = A x + b for the unknowns by Gauss-Jordan elimination; the
// system is non-singular because every unknown reaches the goal.
std::vector<Rational> solve_linear(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) throw std::logic_error("singular reachability system");
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    const Rational inv = 1 / a[col][col];
    for (std::size_t j = col; j < n; ++j) a[col][j] *= inv;
    b[col] *= inv;
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col] == 0) continue;
      const Rational factor = a[row][col];
      for (std::size_t j = col; j < n; ++j) a[row][j] -= factor * a[col][j];
      b[row] -= factor * b[col];
    }
  }
  return b;
}

std::vector<Rational> solve_until(const MarkovChain& c, const StateSet& stay, const StateSet& goal) {
  const std::size_t n = c.state_count();
  std::vector<std::vector<StateIndex>> pred(n);
  for (StateIndex q = 0; q < n; ++q) {
    for (const auto& [r, p] : c.transition[q]) {
      if (p > 0) pred[r].push_back(q);
    }
  }
  // Unknowns: states of stay\goal with a path to goal inside stay\goal.
  StateSet live(n);
  std::deque<StateIndex> queue;
  for (StateIndex q = 0; q < n; ++q) {
    if (goal.test(q)) queue.push_back(q);
  }
  while (!queue.empty()) {
    const StateIndex r = queue.front();
    queue.pop_front();
    for (StateIndex q : pred[r]) {
      if (stay.test(q) && !goal.test(q) && !live.test(q)) {
        live.set(q);
        queue.push_back(q);
      }
    }
  }
  std::vector<std::size_t> slot(n, n);
  std::vector<StateIndex> unknowns;
  for (StateIndex q = 0; q < n; ++q) {
    if (live.test(q)) {
      slot[q] = unknowns.size();
      unknowns.push_back(q);
    }
  }
  const std::size_t k = unknowns.size();
  std::vector<std::vector<Rational>> a(k, std::vector<Rational>(k, 0));
  std::vector<Rational> b(k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    a[i][i] = 1;
    for (const auto& [r, p] : c.transition[unknowns[i]]) {
      if (goal.test(r)) {
        b[i] += p;
      } else if (live.test(r)) {
        a[i][slot[r]] -= p;
      }
    }
  }
  const auto x = solve_linear(std::move(a), std::move(b));
  std::vector<Rational> out(n, 0);
  for (StateIndex q = 0; q < n; ++q) {
    if (goal.test(q)) {
      out[q] = 1;
    } else if (live.test(q)) {
      out[q] = x[slot[q]];
    }
  }
  return out;
}

}  // namespace

Rational until_prob(const MarkovChain& c, StateIndex q0, const StateSet& stay, const StateSet& goal) {
  if (goal.test(q0)) return 1;
  if (!stay.test(q0)) return 0;
  return solve_until(c, stay, goal)[q0];
}

Rational reach_prob(const MarkovChain& c, StateIndex q0, const StateSet& goal) {
  StateSet all(c.state_count());
  all.set();
  return until_prob(c, q0, all, goal);
}

std::vector<Rational> reach_probs(const MarkovChain& c, const StateSet& goal) {
  StateSet all(c.state_count());
  all.set();
  return solve_until(c, all, goal);
}

namespace {

StateSet target_states(const Mdp& m) {
  StateSet goal(m.state_count());
  for (StateIndex q = 0; q < m.state_count(); ++q) goal[q] = m.target[q];
  return goal;
}

Rational expectation(const Distribution& d, const std::vector<Rational>& x) {
  Rational sum = 0;
  for (const auto& [q, p] : d) sum += p * x[q];
  return sum;
}

}  // namespace

ExactValues max_reach_values_exact(const Mdp& m) {
  const std::size_t n = m.state_count();
  const StateSet goal = target_states(m);

  ExactValues result;
  result.strategy.choice.assign(n, std::nullopt);
  for (StateIndex q = 0; q < n; ++q) {
    if (!m.target[q] && !m.enabled[q].empty()) result.strategy.choice[q] = m.enabled[q].front().action;
  }

  while (true) {
    ++result.iterations;
    result.values = reach_probs(induce_chain(m, result.strategy), goal);
    bool improved = false;
    for (StateIndex q = 0; q < n; ++q) {
      if (!result.strategy.choice[q]) continue;
      const Rational current = expectation(m.find_enabled(q, *result.strategy.choice[q])->distribution, result.values);
      Rational best = current;
      std::optional<ActionIndex> best_action;
      for (const auto& e : m.enabled[q]) {
        const Rational value = expectation(e.distribution, result.values);
        if (value > best) {
          best = value;
          best_action = e.action;
        }
      }
      if (best_action) {
        // Smallest action attaining the maximum.
        for (const auto& e : m.enabled[q]) {
          if (expectation(e.distribution, result.values) == best) {
            result.strategy.choice[q] = e.action;
            break;
          }
        }
        improved = true;
      }
    }
    if (!improved) return result;
  }
}

IterativeValues value_iteration(const Mdp& m, double tol, std::size_t max_iters) {
  if (!(tol > 0)) throw InputError("tolerance must be positive");
  const std::size_t n = m.state_count();
  std::vector<std::vector<std::vector<std::pair<StateIndex, double>>>> rows(n);
  for (StateIndex q = 0; q < n; ++q) {
    for (const auto& e : m.enabled[q]) {
      auto& row = rows[q].emplace_back();
      for (const auto& [r, p] : e.distribution) row.emplace_back(r, p.get_d());
    }
  }
  IterativeValues result;
  std::vector<double> x(n, 0.0), next(n, 0.0);
  for (StateIndex q = 0; q < n; ++q) x[q] = m.target[q] ? 1.0 : 0.0;
  while (result.iterations < max_iters) {
    ++result.iterations;
    double change = 0;
    for (StateIndex q = 0; q < n; ++q) {
      if (m.target[q]) {
        next[q] = 1.0;
        continue;
      }
      double best = 0.0;
      for (const auto& row : rows[q]) {
        double sum = 0.0;
        for (const auto& [r, p] : row) sum += p * x[r];
        best = std::max(best, sum);
      }
      next[q] = best;
      change = std::max(change, std::abs(best - x[q]));
    }
    x.swap(next);
    if (change < tol) {
      result.converged = true;
      break;
    }
  }
  result.values = std::move(x);
  return result;
}

std::vector<Rational> vertex_values(const TargetArena& arena, const DistributionFamily& mu) {
  const Mdp m = instantiate_mdp(arena, mu);
  const auto solved = max_reach_values_exact(m);
  const auto state_of = state_of_vertex(arena);
  std::vector<Rational> out(arena.size(), 0);
  for (Vertex v = 0; v < arena.size(); ++v) {
    if (state_of[v]) out[v] = solved.values[*state_of[v]];
  }
  for (Vertex v = 0; v < arena.size(); ++v) {
    if (!arena.is_nature(v)) continue;
    Rational sum = 0;
    for (const auto& [w, p] : mu.at(v)) sum += p * out[w];
    out[v] = sum;
  }
  return out;
}

IterativeValues vertex_values_iterative(const TargetArena& arena, const DistributionFamily& mu, double tol,
                                        std::size_t max_iters) {
  const Mdp m = instantiate_mdp(arena, mu);
  auto solved = value_iteration(m, tol, max_iters);
  const auto state_of = state_of_vertex(arena);
  IterativeValues out;
  out.iterations = solved.iterations;
  out.converged = solved.converged;
  out.values.assign(arena.size(), 0.0);
  for (Vertex v = 0; v < arena.size(); ++v) {
    if (state_of[v]) out.values[v] = solved.values[*state_of[v]];
  }
  for (Vertex v = 0; v < arena.size(); ++v) {
    if (!arena.is_nature(v)) continue;
    double sum = 0.0;
    for (const auto& [w, p] : mu.at(v)) sum += p.get_d() * out.values[w];
    out.values[v] = sum;
  }
  return out;
}

}  // namespace nwr
