#include "vhl/viterbi.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace vhl {

namespace {

void ensure_valid(const HmmInstance& inst, const ObservationSequence& obs) {
  ValidationReport report = validate(inst, obs);
  if (!report.ok()) {
    throw std::invalid_argument("invalid instance: " + report.issues.front());
  }
}

CostVector initial_vector(const HmmInstance& inst) {
  CostVector z(inst.n, ExtCost::inf());
  z.set(inst.start_state, ExtCost::finite(0.0));
  return z;
}

/// One decode step: out[j] = min_i(prev[i] + A(i,j)) + B(j, symbol).
/// When bp is given, bp[j] is the smallest i attaining the transition
/// minimum (0 when no i does).
void forward_step(const HmmInstance& inst, const double* prev, int symbol,
                  double* out, int* bp) {
  int n = inst.n;
  std::fill(out, out + n, kInf);
  if (bp != nullptr) std::fill(bp, bp + n, 0);
  for (int i = 0; i < n; ++i) {
    double p = prev[i];
    if (std::isinf(p)) continue;
    const double* arow = inst.transition.row(i);
    for (int j = 0; j < n; ++j) {
      double cand = p + arow[j];
      if (cand < out[j]) {
        out[j] = cand;
        if (bp != nullptr) bp[j] = i;
      }
    }
  }
  for (int j = 0; j < n; ++j) {
    out[j] += inst.emission.raw_at(j, symbol);
  }
}

/// Backpointers for unreachable states point at the canonical
/// predecessor: the start state for the first step, state 0 afterwards.
/// This makes the decoded path on infeasible instances deterministic and
/// equal to the enumeration reference.
void normalize_unreachable(const double* v, int n, int t, int start, int* bp) {
  for (int j = 0; j < n; ++j) {
    if (std::isinf(v[j])) bp[j] = (t == 1) ? start : 0;
  }
}

int argmin_smallest(const double* v, int n) {
  int best = 0;
  for (int j = 1; j < n; ++j) {
    if (v[j] < v[best]) best = j;
  }
  return best;
}

}  // namespace

DecodeResult viterbi_decode(const HmmInstance& inst, const ObservationSequence& obs) {
  ensure_valid(inst, obs);
  int n = inst.n;
  int steps = obs.length();

  CostVector prev = initial_vector(inst);
  CostVector cur(n);
  std::vector<std::vector<int>> bp(steps, std::vector<int>(n, 0));

  for (int t = 1; t <= steps; ++t) {
    forward_step(inst, prev.data(), obs.symbols[t - 1], cur.data(), bp[t - 1].data());
    normalize_unreachable(cur.data(), n, t, inst.start_state, bp[t - 1].data());
    std::swap(prev, cur);
  }

  DecodeResult result;
  result.path.assign(steps + 1, inst.start_state);
  int last = argmin_smallest(prev.data(), n);
  result.cost = ExtCost::from_raw(prev.raw_at(last));
  if (!result.cost.is_finite()) {
    // Every path is infeasible, so every path ties; return the canonical
    // winner of the tie-break (all-zero suffix) rather than a backpointer
    // chain that may wander through feasible prefixes.
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

std::vector<CostVector> forward_vectors(const HmmInstance& inst,
                                        const ObservationSequence& obs) {
  ensure_valid(inst, obs);
  int steps = obs.length();
  std::vector<CostVector> chain;
  chain.reserve(steps + 1);
  chain.push_back(initial_vector(inst));
  for (int t = 1; t <= steps; ++t) {
    CostVector next(inst.n);
    forward_step(inst, chain.back().data(), obs.symbols[t - 1], next.data(), nullptr);
    chain.push_back(std::move(next));
  }
  return chain;
}

ExtCost path_cost(const HmmInstance& inst, const ObservationSequence& obs,
                  const std::vector<int>& path) {
  ensure_valid(inst, obs);
  int steps = obs.length();
  if (static_cast<int>(path.size()) != steps + 1) {
    throw std::invalid_argument("path length " + std::to_string(path.size()) +
                                " does not match " + std::to_string(steps + 1));
  }
  for (int s : path) {
    if (s < 0 || s >= inst.n) {
      throw std::invalid_argument("path state " + std::to_string(s) + " out of range");
    }
  }
  if (path[0] != inst.start_state) {
    throw std::invalid_argument("path does not begin at the start state");
  }
  double total = 0.0;
  for (int t = 1; t <= steps; ++t) {
    total += inst.transition.raw_at(path[t - 1], path[t]);
    total += inst.emission.raw_at(path[t], obs.symbols[t - 1]);
  }
  return ExtCost::from_raw(total);
}

DecodeResult brute_force_decode(const HmmInstance& inst, const ObservationSequence& obs,
                                std::int64_t budget) {
  ensure_valid(inst, obs);
  int n = inst.n;
  int steps = obs.length();

  std::int64_t count = 1;
  for (int t = 0; t < steps; ++t) {
    if (count > budget / n) {
      throw std::runtime_error("enumeration budget exceeded: " + std::to_string(n) +
                               "^" + std::to_string(steps) + " paths");
    }
    count *= n;
  }

  std::vector<int> suffix(steps, 0);
  std::vector<int> path(steps + 1, inst.start_state);
  std::vector<int> best_path;
  double best_cost = kInf;
  bool have_best = false;

  // Among equal-cost paths, prefer the one that is lexicographically
  // smaller read from the end: that is the path backpointer
  // reconstruction picks when every argmin takes the smallest index.
  auto better = [&](const std::vector<int>& cand) {
    if (!have_best) return true;
    for (int t = steps; t >= 1; --t) {
      if (cand[t] != best_path[t]) return cand[t] < best_path[t];
    }
    return false;
  };

  while (true) {
    for (int t = 0; t < steps; ++t) path[t + 1] = suffix[t];
    double total = 0.0;
    for (int t = 1; t <= steps; ++t) {
      total += inst.transition.raw_at(path[t - 1], path[t]);
      total += inst.emission.raw_at(path[t], obs.symbols[t - 1]);
    }
    if (total < best_cost || (total == best_cost && better(path))) {
      best_cost = total;
      best_path = path;
      have_best = true;
    }

    int pos = steps - 1;
    while (pos >= 0 && suffix[pos] == n - 1) {
      suffix[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++suffix[pos];
  }

  DecodeResult result;
  result.path = best_path;
  result.cost = ExtCost::from_raw(best_cost);
  return result;
}

CertificateOutcome verify_cost_certificate(const HmmInstance& inst,
                                           const ObservationSequence& obs,
                                           const std::vector<CostVector>& vectors,
                                           ExtCost threshold) {
  ensure_valid(inst, obs);
  int n = inst.n;
  int steps = obs.length();
  if (static_cast<int>(vectors.size()) != steps + 1) {
    throw std::invalid_argument("certificate has " + std::to_string(vectors.size()) +
                                " vectors, expected " + std::to_string(steps + 1));
  }
  for (const CostVector& v : vectors) {
    if (v.size() != n) {
      throw std::invalid_argument("certificate vector length " +
                                  std::to_string(v.size()) + " does not match n=" +
                                  std::to_string(n));
    }
    for (int i = 0; i < n; ++i) {
      if (!(v.raw_at(i) >= 0.0)) {
        throw std::invalid_argument("certificate entry is negative or NaN");
      }
    }
  }

  CertificateOutcome outcome;
  for (int i = 0; i < n; ++i) {
    double expected = (i == inst.start_state) ? 0.0 : kInf;
    if (vectors[0].raw_at(i) != expected) {
      outcome.reason = "initial vector mismatch";
      outcome.t = 0;
      outcome.index = i;
      return outcome;
    }
  }

  CostVector expected(n);
  for (int t = 1; t <= steps; ++t) {
    forward_step(inst, vectors[t - 1].data(), obs.symbols[t - 1], expected.data(),
                 nullptr);
    for (int i = 0; i < n; ++i) {
      if (vectors[t].raw_at(i) != expected.raw_at(i)) {
        outcome.reason = "recurrence violated";
        outcome.t = t;
        outcome.index = i;
        return outcome;
      }
    }
  }

  int arg = argmin_smallest(vectors[steps].data(), n);
  double minimum = vectors[steps].raw_at(arg);
  if (minimum > threshold.raw()) {
    outcome.accepted = true;
    return outcome;
  }
  outcome.reason = "final minimum not above threshold";
  outcome.t = steps;
  outcome.index = arg;
  return outcome;
}

}  // namespace vhl
