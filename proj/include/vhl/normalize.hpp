#pragma once

#include <vector>

#include "vhl/instance.hpp"

namespace vhl {

/// Row-stochastic model: transition[u][v] and emission[u][s] are
/// probabilities, each row summing to 1 up to rounding.
struct StochasticHmm {
  std::vector<std::vector<double>> transition;
  std::vector<std::vector<double>> emission;
};

/// Result of turning an additive instance into a stochastic one. One
/// absorbing extra state soaks up each transition row's probability
/// remainder, and one extra symbol soaks up each emission row's remainder.
/// The extra symbol is never observed, so paths through the extra state
/// have probability 0 and decoding is unaffected.
///
/// For a path of T steps over original states, -ln(probability) =
/// original cost + value_shift, with value_shift = T ln n + T ln T.
struct StochasticEmbedding {
  StochasticHmm hmm;
  int extra_state = 0;
  int extra_symbol = 0;
  double value_shift = 0.0;
};

/// Builds transition probabilities exp(-A(u,v))/n and emission
/// probabilities exp(-B(u,s))/T. Requires sigma <= T so emission rows
/// cannot exceed 1. Natural logarithms throughout.
StochasticEmbedding normalize_to_stochastic(const HmmInstance& inst, int steps);

/// Result of turning a fixed-step walk into a stochastic single-symbol
/// model. Edge costs are scaled down by weight_scale (the largest finite
/// cost) so that exp(-cost/weight_scale) stays well above the escape
/// probabilities; 4n extra states forming a uniform clique absorb row
/// remainders at probability exactly 1/(4n) per target.
///
/// For an all-original T-step walk, original cost =
/// weight_scale * (-ln(probability) - T ln n).
struct StochasticWalkEmbedding {
  StochasticHmm hmm;  // single implicit symbol, emission all 1
  int original_nodes = 0;
  int clique_begin = 0;
  double weight_scale = 1.0;
  double value_shift = 0.0;  // T ln n
};

StochasticWalkEmbedding normalize_walk_unary(const WalkInstance& w);

/// Converts probabilities back to additive costs, -ln(p) with p = 0
/// mapping to infinity. Test and round-trip support.
HmmInstance stochastic_to_additive(const StochasticHmm& hmm, int start_state);

}  // namespace vhl
