#pragma once

#include <cstddef>
#include <vector>

#include "nwr/arena.hpp"
#include "nwr/mdp.hpp"

namespace nwr {

/// Bitset over the states of a chain or MDP.
using StateSet = boost::dynamic_bitset<>;

/// Vertices (of both owners) with no path to a target.
VertexSet zero_set(const TargetArena& arena);

/// Vertices from which Protagonist reaches T with probability 1 under every
/// full-support family. Targets count as reached on arrival.
VertexSet almost_sure_set(const TargetArena& arena);

/// Probability of reaching `goal` from q0 while staying in `stay` before that.
Rational until_prob(const MarkovChain& c, StateIndex q0, const StateSet& stay, const StateSet& goal);
Rational reach_prob(const MarkovChain& c, StateIndex q0, const StateSet& goal);

/// Reach probabilities from every state at once.
std::vector<Rational> reach_probs(const MarkovChain& c, const StateSet& goal);

struct ExactValues {
  std::vector<Rational> values;  // per MDP state
  Strategy strategy;
  std::size_t iterations = 0;
};

/// Maximal reachability probabilities by policy iteration with exact solves.
ExactValues max_reach_values_exact(const Mdp& m);

struct IterativeValues {
  std::vector<double> values;
  std::size_t iterations = 0;
  bool converged = false;
};

inline constexpr double kDefaultTolerance = 1e-10;
inline constexpr std::size_t kDefaultMaxIterations = 1'000'000;

/// Kleene iteration from 0. Results approach the exact values from below.
IterativeValues value_iteration(const Mdp& m, double tol = kDefaultTolerance,
                                std::size_t max_iters = kDefaultMaxIterations);

/// Val^mu on every arena vertex; Nature vertices get the expectation over
/// their successors.
std::vector<Rational> vertex_values(const TargetArena& arena, const DistributionFamily& mu);

/// vertex_values computed with value_iteration instead of the exact solver.
IterativeValues vertex_values_iterative(const TargetArena& arena, const DistributionFamily& mu,
                                        double tol = kDefaultTolerance,
                                        std::size_t max_iters = kDefaultMaxIterations);

}  // namespace nwr
