#include "vhl/fast_viterbi.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "vhl/viterbi.hpp"

namespace vhl {

DecodeResult fast_viterbi(const HmmInstance& inst, const ObservationSequence& obs,
                          const OmvConfig& cfg) {
  ValidationReport report = validate(inst, obs);
  if (!report.ok()) {
    throw std::invalid_argument("invalid instance: " + report.issues.front());
  }
  int n = inst.n;
  int steps = obs.length();

  // Queries run against rows of A^T, so entry (j,i) carries A(i,j) and the
  // per-row minimum over i matches the dense forward step exactly.
  DistinctValueDecomposition decomp = decompose(inst.transition.transposed());

  CostVector prev(n, ExtCost::inf());
  prev.set(inst.start_state, ExtCost::finite(0.0));
  std::vector<std::vector<int>> bp(steps, std::vector<int>(n, 0));

  for (int t = 1; t <= steps; ++t) {
    OmvResult step = omv_query(decomp, prev, cfg);
    int symbol = obs.symbols[t - 1];
    CostVector next(n);
    for (int j = 0; j < n; ++j) {
      double v = step.values.raw_at(j) + inst.emission.raw_at(j, symbol);
      next.data()[j] = v;
      if (std::isinf(v)) {
        bp[t - 1][j] = (t == 1) ? inst.start_state : 0;
      } else {
        bp[t - 1][j] = step.argmins[j];
      }
    }
    prev = std::move(next);
  }

  DecodeResult result;
  result.path.assign(steps + 1, inst.start_state);
  int last = 0;
  for (int j = 1; j < n; ++j) {
    if (prev.raw_at(j) < prev.raw_at(last)) last = j;
  }
  result.cost = ExtCost::from_raw(prev.raw_at(last));
  if (!result.cost.is_finite()) {
    // same canonical all-zero suffix as viterbi_decode on infeasible input
    std::fill(result.path.begin() + 1, result.path.end(), 0);
    return result;
  }
  result.path[steps] = last;
  for (int t = steps; t >= 1; --t) {
    result.path[t - 1] = bp[t - 1][result.path[t]];
  }
  result.path[0] = inst.start_state;
  return result;
}

}  // namespace vhl
