#pragma once

#include <map>
#include <string>
#include <vector>

#include "vhl/matrix.hpp"

namespace vhl {

/// A decoding instance: n states, sigma symbols, transition costs A (n x n,
/// A(i,j) = cost of moving from state i to state j), emission costs
/// B (n x sigma), and a designated start state.
struct HmmInstance {
  int n = 0;
  int sigma = 0;
  CostMatrix transition;  // n x n
  CostMatrix emission;    // n x sigma
  int start_state = 0;
  std::map<int, std::string> symbol_names;  // optional, purely descriptive

  HmmInstance() = default;
  HmmInstance(int n_, int sigma_, int start)
      : n(n_),
        sigma(sigma_),
        transition(n_, n_),
        emission(n_, sigma_),
        start_state(start) {
    if (n <= 0) throw std::invalid_argument("instance needs at least one state");
    if (sigma <= 0) throw std::invalid_argument("instance needs at least one symbol");
    if (start < 0 || start >= n) throw std::invalid_argument("start state out of range");
  }
};

/// Observed symbol indices, one per time step. Step t of the decode consumes
/// symbols[t-1].
struct ObservationSequence {
  std::vector<int> symbols;

  [[nodiscard]] int length() const { return static_cast<int>(symbols.size()); }
};

/// A decoded state path (length T+1, starting at the start state) together
/// with its total cost. An infinite cost means no finite-cost path exists;
/// the reported path is then the tie-break-canonical one over the full
/// cost order, where every path is infinite.
struct DecodeResult {
  std::vector<int> path;
  ExtCost cost;
};

/// Min-cost walk problem: edge costs a (n x n), a step count, and a start
/// node. The value is the cheapest cost over all walks of exactly `steps`
/// edges leaving `start_state`.
struct WalkInstance {
  CostMatrix edge_cost;
  int steps = 0;
  int start_state = 0;

  WalkInstance() = default;
  WalkInstance(CostMatrix a, int steps_, int start)
      : edge_cost(std::move(a)), steps(steps_), start_state(start) {
    if (edge_cost.rows() != edge_cost.cols()) {
      throw std::invalid_argument("walk edge matrix must be square");
    }
    if (edge_cost.rows() <= 0) throw std::invalid_argument("walk needs at least one node");
    if (steps < 1) throw std::invalid_argument("walk needs at least one step");
    if (start < 0 || start >= edge_cost.rows()) {
      throw std::invalid_argument("walk start node out of range");
    }
  }
};

/// Result of structural validation. Issues carry the location of the
/// offending entry; an empty list means the pair is well formed.
struct ValidationReport {
  std::vector<std::string> issues;

  [[nodiscard]] bool ok() const { return issues.empty(); }
};

/// Checks an instance/observation pair for structural problems: dimension
/// mismatches, out-of-range symbols or start state, and negative or NaN
/// cost entries. Reads raw storage, so it also catches data that bypassed
/// the checked setters (e.g. freshly deserialized files).
ValidationReport validate(const HmmInstance& inst, const ObservationSequence& obs);

}  // namespace vhl
