#include "vhl/walk.hpp"

#include "vhl/viterbi.hpp"

namespace vhl {

HmmInstance walk_to_instance(const WalkInstance& w) {
  int n = w.edge_cost.rows();
  HmmInstance inst(n, 1, w.start_state);
  inst.transition = w.edge_cost;
  inst.emission = CostMatrix(n, 1, ExtCost::finite(0.0));
  return inst;
}

ObservationSequence walk_observations(const WalkInstance& w) {
  ObservationSequence obs;
  obs.symbols.assign(w.steps, 0);
  return obs;
}

DecodeResult walk_solve_dp(const WalkInstance& w) {
  return viterbi_decode(walk_to_instance(w), walk_observations(w));
}

ExtCost walk_solve_squaring(const WalkInstance& w) {
  CostMatrix power = tropical_power(w.edge_cost, w.steps);
  double best = kInf;
  const double* row = power.row(w.start_state);
  for (int j = 0; j < power.cols(); ++j) {
    if (row[j] < best) best = row[j];
  }
  return ExtCost::from_raw(best);
}

}  // namespace vhl
